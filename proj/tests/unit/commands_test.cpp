#include <gtest/gtest.h>

#include <filesystem>
#include <map>
#include <sstream>

#include "insideness/commands.hpp"
#include "insideness/dataset_io.hpp"
#include "insideness/errors.hpp"
#include "insideness/netpbm.hpp"
#include "insideness/netspec_io.hpp"

using namespace insideness;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("insideness_unit_" + name);
  fs::remove_all(p);
  return p;
}

std::map<std::string, std::string> tree(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) out[fs::relative(e.path(), root).string()] = read_file(e.path());
  }
  return out;
}

GenOptions small_gen(const fs::path& dir) {
  GenOptions g;
  g.dataset = "polar24";
  g.train = 6;
  g.val = 2;
  g.test = 2;
  g.seed = 7;
  g.out_dir = dir;
  return g;
}

}  // namespace

TEST(Labels, FamilyLabels) {
  auto p = parse_family_label("polar14");
  ASSERT_TRUE(p);
  EXPECT_EQ(p->family, Family::Polar);
  EXPECT_EQ(p->max_vertices, 14);
  EXPECT_EQ(family_label(*p), "polar14");
  EXPECT_EQ(parse_family_label("spiral")->image_size, 42);
  EXPECT_FALSE(parse_family_label("polar"));
  EXPECT_FALSE(parse_family_label("polar2"));
  EXPECT_FALSE(parse_family_label("blob"));
  for (Solver s : all_solvers()) EXPECT_EQ(parse_solver(to_string(s)), s);
  EXPECT_FALSE(parse_solver("cnn"));
}

TEST(Gen, WritesImageMaskPairsAndManifest) {
  const auto dir = scratch("gen");
  std::ostringstream out, err;
  GenOptions g = small_gen(dir);
  g.train = 100;
  g.val = 20;
  g.test = 20;
  ASSERT_EQ(cmd_gen(g, out, err), kExitOk) << err.str();
  std::size_t pbm = 0, pgm = 0;
  for (const auto& e : fs::directory_iterator(dir / "images")) pbm += e.path().extension() == ".pbm";
  for (const auto& e : fs::directory_iterator(dir / "masks")) pgm += e.path().extension() == ".pgm";
  EXPECT_EQ(pbm, 140u);
  EXPECT_EQ(pgm, 140u);
  const auto m = manifest_from_json(read_file(dir / "manifest.json"));
  EXPECT_EQ(m.records.size(), 140u);
  EXPECT_EQ(m.dataset, "polar24");
  for (const auto& r : m.records) EXPECT_TRUE(fs::exists(dir / r.image) && fs::exists(dir / r.mask));
}

TEST(Gen, IdenticalArgumentsGiveIdenticalTrees) {
  const auto a = scratch("det_a");
  const auto b = scratch("det_b");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_gen(small_gen(a), out, err), kExitOk);
  ASSERT_EQ(cmd_gen(small_gen(b), out, err), kExitOk);
  EXPECT_EQ(tree(a), tree(b));
  GenOptions other = small_gen(scratch("det_c"));
  other.seed = 8;
  ASSERT_EQ(cmd_gen(other, out, err), kExitOk);
  EXPECT_NE(tree(a), tree(other.out_dir));
}

TEST(Gen, Errors) {
  std::ostringstream out, err;
  GenOptions g = small_gen(scratch("gen_err"));
  g.dataset = "hexagons";
  EXPECT_EQ(cmd_gen(g, out, err), kExitError);
  g = small_gen(scratch("gen_err"));
  g.max_retries = 0;
  EXPECT_EQ(cmd_gen(g, out, err), kExitError);
  EXPECT_NE(err.str().find("gen:"), std::string::npos);
}

TEST(Dataset, LoadRoundTripsWrite) {
  const GeneratorParams p{Family::Digs, 42, 0, 3, kDefaultMaxRetries};
  const auto ds = build_dataset(p, 4, 1, 1);
  const auto dir = scratch("roundtrip");
  write_dataset(ds, dir);
  const auto loaded = load_dataset(dir);
  ASSERT_EQ(loaded.images.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(loaded.images[i], ds.curves[i].image());
    EXPECT_EQ(loaded.masks[i], ds.masks[i]);
    EXPECT_EQ(loaded.manifest.records[i].split, ds.splits[i]);
    EXPECT_EQ(loaded.manifest.records[i].seed, ds.manifest.curve_seeds[i]);
  }
  EXPECT_EQ(loaded.manifest.params.seed, 3u);
  EXPECT_EQ(manifest_to_json(loaded.manifest), read_file(dir / "manifest.json"));
}

TEST(Dataset, CorruptManifestIsFormatError) {
  EXPECT_THROW(manifest_from_json("{"), FormatError);
  EXPECT_THROW(manifest_from_json(R"({"format_version": 9})"), FormatError);
}

TEST(Verify, AnalyticSolversScorePerfectly) {
  const auto dir = scratch("verify");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_gen(small_gen(dir), out, err), kExitOk);
  for (Solver s : all_solvers()) {
    std::ostringstream o, e;
    VerifyOptions v{dir, to_string(s), false, kDefaultSaturation, std::nullopt};
    EXPECT_EQ(cmd_verify(v, o, e), kExitOk) << to_string(s) << "\n" << o.str() << e.str();
    EXPECT_NE(o.str().find("per_image_accuracy: 1.000000"), std::string::npos);
  }
  const auto r = verify_dataset(dir, Solver::Rnn, false);
  ASSERT_TRUE(r.steps);
  EXPECT_LE(r.steps->max, 32 * 32);
  EXPECT_EQ(r.steps->over_bound, 0);
  EXPECT_EQ(read_file(dir / "report.txt").substr(0, 15), "solver: stacked");
  EXPECT_TRUE(fs::exists(dir / "report.json"));
}

TEST(Verify, WrongMaskFailsAndReportIsDeterministic) {
  const auto dir = scratch("verify_bad");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_gen(small_gen(dir), out, err), kExitOk);
  const auto m = manifest_from_json(read_file(dir / "manifest.json"));
  auto mask = read_pgm_mask(read_file(dir / m.records[1].mask));
  mask.set({0, 0}, Label::Inside);
  write_file(dir / m.records[1].mask, write_pgm_mask(mask));

  VerifyOptions v{dir, "ray-net", false, kDefaultSaturation, dir / "reports"};
  std::ostringstream o, e;
  EXPECT_EQ(cmd_verify(v, o, e), kExitFailed);
  const std::string first = read_file(dir / "reports" / "report.json");
  EXPECT_NE(first.find("\"per_image_accuracy\": \"0.900000\""), std::string::npos);
  EXPECT_NE(first.find("\"mismatched\": 1"), std::string::npos);
  EXPECT_EQ(cmd_verify(v, o, e), kExitFailed);
  EXPECT_EQ(read_file(dir / "reports" / "report.json"), first);

  VerifyOptions unknown{dir, "magic", false, kDefaultSaturation, std::nullopt};
  EXPECT_EQ(cmd_verify(unknown, o, e), kExitError);
  VerifyOptions missing{scratch("nothing"), "flood", false, kDefaultSaturation, std::nullopt};
  EXPECT_EQ(cmd_verify(missing, o, e), kExitError);
}

TEST(Enumerate, PrintsCounts) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_enumerate({7, std::nullopt, false, std::nullopt}, out, err), kExitOk);
  EXPECT_EQ(out.str(), "image 7x7 lower bound 13\n");
  out.str("");
  EXPECT_EQ(cmd_enumerate({std::nullopt, 4, false, std::nullopt}, out, err), kExitOk);
  EXPECT_EQ(out.str(), "grid 4x4 cycles 213\n");
  out.str("");
  EXPECT_EQ(cmd_enumerate({5, std::nullopt, true, std::nullopt}, out, err), kExitOk);
  EXPECT_EQ(out.str(), "image 5x5 lower bound 1\nimage 5x5 exact 1\n");
  EXPECT_EQ(cmd_enumerate({std::nullopt, 7, false, std::nullopt}, out, err), kExitError);
  EXPECT_EQ(cmd_enumerate({8, std::nullopt, false, std::nullopt}, out, err), kExitError);
  EXPECT_EQ(cmd_enumerate({}, out, err), kExitError);
}

TEST(Enumerate, EmittedCurvesVerify) {
  const auto dir = scratch("emit");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_enumerate({7, std::nullopt, false, dir}, out, err), kExitOk) << err.str();
  const auto ds = load_dataset(dir);
  EXPECT_EQ(ds.images.size(), 13u);
  EXPECT_FALSE(ds.manifest.generated);
  std::ostringstream o, e;
  EXPECT_EQ(cmd_verify({dir, "ray-net", false, kDefaultSaturation, std::nullopt}, o, e), kExitOk);
}

TEST(TruthTable, SixtyFourRowsAllMatching) {
  std::ostringstream out;
  EXPECT_EQ(cmd_truth_table(64.0, out), kExitOk);
  std::istringstream in(out.str());
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 65u);
  EXPECT_EQ(lines[1], " 0 0 00000 0 0");
  EXPECT_EQ(lines[1 + 0b10000], "16 0 10000 1 1");
  EXPECT_EQ(lines[1 + 32 + 0b01010], "42 1 01010 0 0");
  EXPECT_EQ(out.str().find("MISMATCH"), std::string::npos);
}

TEST(Parity, SingleValuesAndSweep) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_parity(42, 7, out, err), kExitOk);
  EXPECT_EQ(out.str(), "n=7 -> 1 PASS\n");
  out.str("");
  EXPECT_EQ(cmd_parity(42, 0, out, err), kExitOk);
  EXPECT_EQ(out.str(), "n=0 -> 0 PASS\n");
  out.str("");
  EXPECT_EQ(cmd_parity(42, std::nullopt, out, err), kExitOk);
  std::size_t passes = 0;
  for (std::size_t pos = 0; (pos = out.str().find(" PASS\n", pos)) != std::string::npos; ++pos) ++passes;
  EXPECT_EQ(passes, 43u);
  EXPECT_EQ(cmd_parity(42, 43, out, err), kExitError);
  EXPECT_EQ(cmd_parity(42, -1, out, err), kExitError);
}

TEST(NetSpecCommand, OutputParses) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_netspec("dilated", 16, 64.0, out, err), kExitOk);
  EXPECT_EQ(parse_ray_netspec(out.str()), build_dilated_ray_net(16));
  out.str("");
  EXPECT_EQ(cmd_netspec("coloring-lstm", 0, 64.0, out, err), kExitOk);
  EXPECT_EQ(parse_convlstm_netspec(out.str()), build_coloring_convlstm(64.0));
  EXPECT_EQ(cmd_netspec("dilated", 12, 64.0, out, err), kExitError);
  EXPECT_EQ(cmd_netspec("transformer", 8, 64.0, out, err), kExitError);
}
