#include <CLI11.hpp>
#include <iostream>

#include "insideness/commands.hpp"

using namespace insideness;

int main(int argc, char** argv) {
  CLI::App app{"Insideness toolkit: curve datasets, analytic networks, curve counting"};
  app.require_subcommand(1);
  int code = kExitOk;

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a dataset of curves and ground-truth masks");
  gen_cmd->add_option("--family", gen.dataset, "polar4|polar9|polar14|polar19|polar24|spiral|digs|randomwalk")
      ->required();
  gen_cmd->add_option("--train", gen.train, "Training curves")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--val", gen.val, "Validation curves")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--test", gen.test, "Test curves")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--size", gen.size, "Image side (default 32 for polar, 42 otherwise)");
  gen_cmd->add_option("--seed", gen.seed, "Dataset seed")->required();
  gen_cmd->add_option("--max-retries", gen.max_retries, "Rejected candidates before giving up")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--out", gen.out_dir, "Output directory")->required();
  gen_cmd->callback([&] { code = cmd_gen(gen, std::cout, std::cerr); });

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a solver on a dataset and compare with its masks");
  verify_cmd->add_option("dataset", verify.dataset_dir, "Dataset directory")->required();
  verify_cmd->add_option("--solver", verify.solver,
                         "flood|ray-oracle|ray-net|dilated-net|rnn|convlstm|stacked")
      ->required();
  verify_cmd->add_flag("--include-curve", verify.include_curve, "Also compare curve pixels");
  verify_cmd->add_option("--q", verify.q, "Saturation scale of the recurrent solvers")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--report-dir", verify.report_dir, "Where to write report.txt/report.json");
  verify_cmd->callback([&] { code = cmd_verify(verify, std::cout, std::cerr); });

  EnumerateOptions en;
  std::string emit;
  auto* en_cmd = app.add_subcommand("enumerate", "Count grid cycles and digital Jordan curves");
  en_cmd->add_option("--image-size", en.image_size, "Image side N");
  en_cmd->add_option("--grid", en.grid, "Vertex grid side k");
  en_cmd->add_flag("--exact", en.exact, "Exhaustive count of curves in N x N images (N <= 9)");
  en_cmd->add_option("--emit", emit, "Write the curves as a dataset directory");
  en_cmd->callback([&] {
    if (!emit.empty()) en.emit_dir = emit;
    code = cmd_enumerate(en, std::cout, std::cerr);
  });

  double tt_q = kDefaultSaturation;
  auto* tt_cmd = app.add_subcommand("truth-table", "Print the 64-case coloring step table");
  tt_cmd->add_option("--q", tt_q, "Saturation scale")->check(CLI::PositiveNumber);
  tt_cmd->callback([&] { code = cmd_truth_table(tt_q, std::cout); });

  int parity_c = 42;
  std::optional<int> parity_n;
  auto* parity_cmd = app.add_subcommand("parity", "Evaluate the parity head");
  parity_cmd->add_option("--c", parity_c, "Largest count the head decodes");
  auto* n_opt = parity_cmd->add_option("--n", parity_n, "Single count to evaluate");
  parity_cmd->add_flag("--sweep", "Evaluate every n in [0, C] (default)")->excludes(n_opt);
  parity_cmd->callback([&] { code = cmd_parity(parity_c, parity_n, std::cout, std::cerr); });

  std::string net_kind;
  int net_n = 32;
  double net_q = kDefaultSaturation;
  auto* net_cmd = app.add_subcommand("netspec", "Print the weights of a constructed network");
  net_cmd->add_option("net", net_kind, "ray|dilated|coloring-lstm|identity-lstm")->required();
  net_cmd->add_option("--n", net_n, "Image side for the ray nets");
  net_cmd->add_option("--q", net_q, "Saturation scale for the ConvLSTM cells")->check(CLI::PositiveNumber);
  net_cmd->callback([&] { code = cmd_netspec(net_kind, net_n, net_q, std::cout, std::cerr); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }
  return code;
}
