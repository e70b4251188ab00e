#include "insideness/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "insideness/dataset_io.hpp"
#include "insideness/enumeration.hpp"
#include "insideness/errors.hpp"
#include "insideness/generators.hpp"
#include "insideness/netpbm.hpp"
#include "insideness/netspec_io.hpp"

namespace insideness {
namespace {

std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string bits5(unsigned bits) {
  std::string s;
  for (int k = 4; k >= 0; --k) s += (bits >> k) & 1u ? '1' : '0';
  return s;
}

}  // namespace

std::string to_string(Solver s) {
  switch (s) {
    case Solver::Flood: return "flood";
    case Solver::RayOracle: return "ray-oracle";
    case Solver::RayNet: return "ray-net";
    case Solver::DilatedNet: return "dilated-net";
    case Solver::Rnn: return "rnn";
    case Solver::ConvLstm: return "convlstm";
    case Solver::Stacked: return "stacked";
  }
  return "unknown";
}

const std::vector<Solver>& all_solvers() {
  static const std::vector<Solver> all{Solver::Flood, Solver::RayOracle, Solver::RayNet,
                                       Solver::DilatedNet, Solver::Rnn, Solver::ConvLstm,
                                       Solver::Stacked};
  return all;
}

std::optional<Solver> parse_solver(const std::string& name) {
  for (Solver s : all_solvers()) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

bool is_recurrent(Solver s) {
  return s == Solver::Rnn || s == Solver::ConvLstm || s == Solver::Stacked;
}

SolverSet::SolverSet(double q)
    : q_(q), coloring_(build_coloring_convlstm(q)), identity_(build_identity_convlstm(q)) {}

const RayNetSpec& SolverSet::ray_net(int side) {
  auto it = ray_.find(side);
  if (it == ray_.end()) it = ray_.emplace(side, build_ray_net(std::max(side, 3))).first;
  return it->second;
}

const RayNetSpec& SolverSet::dilated_net(int side) {
  auto it = dilated_.find(side);
  if (it == dilated_.end()) it = dilated_.emplace(side, dilated_ray_net_for(side)).first;
  return it->second;
}

SolveResult SolverSet::solve(Solver s, const BinaryImage& img) {
  const int side = std::max(img.height(), img.width());
  switch (s) {
    case Solver::Flood: return {flood_fill_outside(img), std::nullopt, true};
    case Solver::RayOracle: return {ray_parity_insideness(img), std::nullopt, true};
    case Solver::RayNet: return {eval_net(ray_net(side), img), std::nullopt, true};
    case Solver::DilatedNet: return {eval_net(dilated_net(side), img), std::nullopt, true};
    case Solver::Rnn: {
      auto run = run_coloring(img, q_);
      return {std::move(run.mask), run.steps, run.monotone};
    }
    case Solver::ConvLstm:
    case Solver::Stacked: {
      JordanCurve::from_image(img);
      std::vector<ConvLstmSpec> cells{coloring_};
      if (s == Solver::Stacked) cells.push_back(identity_);
      auto run = stack_convlstms(cells, img);
      return {mask_from_outside_map(img, run.output), run.steps, run.monotone};
    }
  }
  throw std::invalid_argument("unknown solver");
}

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  auto params = parse_family_label(opt.dataset);
  if (!params) {
    err << "gen: unknown dataset '" << opt.dataset << "'\n";
    return kExitError;
  }
  if (opt.train < 0 || opt.val < 0 || opt.test < 0) {
    err << "gen: split sizes must be non-negative\n";
    return kExitError;
  }
  if (opt.size) params->image_size = *opt.size;
  if (params->image_size < 8) {
    err << "gen: image size must be >= 8\n";
    return kExitError;
  }
  params->seed = opt.seed;
  params->max_retries = opt.max_retries;
  try {
    const Dataset ds = build_dataset(*params, opt.train, opt.val, opt.test);
    const auto m = write_dataset(ds, opt.out_dir);
    out << "wrote " << m.records.size() << " curves (" << m.dataset << ", " << params->image_size
        << "x" << params->image_size << ") to " << opt.out_dir.string() << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    err << "gen: " << e.what() << "\n";
    return kExitError;
  }
}

VerificationReport verify_dataset(const std::filesystem::path& dir, Solver solver,
                                  bool include_curve, double q) {
  const LoadedDataset ds = load_dataset(dir);
  SolverSet solvers(q);
  VerificationReport r;
  r.solver = to_string(solver);
  r.dataset = ds.manifest.dataset;
  r.include_curve = include_curve;
  r.images = ds.images.size();
  std::size_t compared = 0;
  std::size_t mismatched = 0;
  std::size_t exact = 0;
  std::vector<int> steps;
  StepStats stats;
  for (std::size_t i = 0; i < ds.images.size(); ++i) {
    const auto& img = ds.images[i];
    const auto& truth = ds.masks[i];
    try {
      const SolveResult res = solvers.solve(solver, img);
      const Accuracy acc = per_image_accuracy(res.mask, truth, include_curve);
      compared += acc.compared;
      mismatched += acc.mismatched;
      if (acc.per_image == 1) {
        ++exact;
      } else {
        r.failures.push_back({i, ds.manifest.records[i].image, acc.mismatched, ""});
      }
      if (res.steps) {
        steps.push_back(*res.steps);
        if (*res.steps > img.height() * img.width()) ++stats.over_bound;
        if (!res.monotone) ++stats.non_monotone;
      }
    } catch (const std::exception& e) {
      r.failures.push_back({i, ds.manifest.records[i].image, 0, e.what()});
    }
  }
  r.per_pixel = compared ? static_cast<double>(compared - mismatched) / static_cast<double>(compared) : 1.0;
  r.per_image = r.images ? static_cast<double>(exact) / static_cast<double>(r.images) : 1.0;
  if (is_recurrent(solver)) {
    if (!steps.empty()) {
      stats.min = *std::min_element(steps.begin(), steps.end());
      stats.max = *std::max_element(steps.begin(), steps.end());
      double sum = 0;
      for (int s : steps) sum += s;
      stats.mean = sum / static_cast<double>(steps.size());
    }
    r.steps = stats;
  }
  return r;
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "solver: " << r.solver << "\n"
     << "dataset: " << r.dataset << "\n"
     << "images: " << r.images << "\n"
     << "include_curve: " << (r.include_curve ? "true" : "false") << "\n"
     << "per_pixel_accuracy: " << fixed6(r.per_pixel) << "\n"
     << "per_image_accuracy: " << fixed6(r.per_image) << "\n";
  if (r.steps) {
    os << "steps: min " << r.steps->min << " max " << r.steps->max << " mean "
       << fixed6(r.steps->mean) << " over_bound " << r.steps->over_bound << " non_monotone "
       << r.steps->non_monotone << "\n";
  }
  os << "failures: " << r.failures.size() << "\n";
  for (const auto& f : r.failures) {
    os << "  " << f.index << " " << f.image << " mismatched " << f.mismatched;
    if (!f.error.empty()) os << " error: " << f.error;
    os << "\n";
  }
  return os.str();
}

std::string report_to_json(const VerificationReport& r) {
  using ordered_json = nlohmann::ordered_json;
  ordered_json j;
  j["solver"] = r.solver;
  j["dataset"] = r.dataset;
  j["images"] = r.images;
  j["include_curve"] = r.include_curve;
  // Fixed six-digit strings keep the JSON byte-stable across platforms.
  j["per_pixel_accuracy"] = fixed6(r.per_pixel);
  j["per_image_accuracy"] = fixed6(r.per_image);
  if (r.steps) {
    j["steps"] = ordered_json{{"min", r.steps->min},
                              {"max", r.steps->max},
                              {"mean", fixed6(r.steps->mean)},
                              {"over_bound", r.steps->over_bound},
                              {"non_monotone", r.steps->non_monotone}};
  }
  j["failures"] = ordered_json::array();
  for (const auto& f : r.failures) {
    ordered_json fj{{"index", f.index}, {"image", f.image}, {"mismatched", f.mismatched}};
    if (!f.error.empty()) fj["error"] = f.error;
    j["failures"].push_back(fj);
  }
  return j.dump(2) + "\n";
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  auto solver = parse_solver(opt.solver);
  if (!solver) {
    err << "verify: unknown solver '" << opt.solver << "'\n";
    return kExitError;
  }
  try {
    const auto report = verify_dataset(opt.dataset_dir, *solver, opt.include_curve, opt.q);
    const auto dir = opt.report_dir.value_or(opt.dataset_dir);
    std::filesystem::create_directories(dir);
    const std::string text = report_to_text(report);
    write_file(dir / "report.txt", text);
    write_file(dir / "report.json", report_to_json(report));
    out << text;
    return report.per_image == 1.0 ? kExitOk : kExitFailed;
  } catch (const std::exception& e) {
    err << "verify: " << e.what() << "\n";
    return kExitError;
  }
}

int cmd_enumerate(const EnumerateOptions& opt, std::ostream& out, std::ostream& err) {
  if (!opt.image_size && !opt.grid) {
    err << "enumerate: give --image-size or --grid\n";
    return kExitError;
  }
  try {
    std::vector<BinaryImage> emitted;
    std::string label;
    if (opt.grid) {
      const int k = *opt.grid;
      const auto cycles = enumerate_grid_cycles(k, k, opt.emit_dir.has_value());
      out << "grid " << k << "x" << k << " cycles " << cycles.count << "\n";
      for (const auto& c : cycles.cycles) emitted.push_back(pad(upsample_cycle(c, k, k)));
      label = "upsampled" + std::to_string(2 * k + 1);
    }
    if (opt.image_size) {
      const int n = *opt.image_size;
      const bool has_bound = n >= 5 && n % 2 == 1;
      if (!has_bound && !opt.exact) {
        err << "enumerate: the lower bound needs an odd image size >= 5\n";
        return kExitError;
      }
      if (has_bound) out << "image " << n << "x" << n << " lower bound " << jordan_lower_bound(n) << "\n";
      if (opt.exact) {
        const auto curves = enumerate_jordan_curves_exact(n, opt.emit_dir.has_value());
        out << "image " << n << "x" << n << " exact " << curves.count << "\n";
        if (opt.emit_dir) {
          emitted = curves.curves;
          label = "exact" + std::to_string(n);
        }
      } else if (opt.emit_dir) {
        const int k = (n - 1) / 2;
        emitted.clear();
        for (const auto& c : enumerate_grid_cycles(k, k, true).cycles) {
          emitted.push_back(pad(upsample_cycle(c, k, k)));
        }
        label = "upsampled" + std::to_string(n);
      }
    }
    if (opt.emit_dir) {
      DatasetManifest m;
      m.dataset = label;
      m.generated = false;
      m.params.image_size = emitted.empty() ? 0 : emitted.front().height();
      m.n_train = static_cast<int>(emitted.size());
      std::vector<InsidenessMask> masks;
      for (const auto& img : emitted) masks.push_back(flood_fill_outside(img));
      write_dataset_files(*opt.emit_dir, m, emitted, masks,
                          std::vector<Split>(emitted.size(), Split::Train), {});
      out << "wrote " << emitted.size() << " curves to " << opt.emit_dir->string() << "\n";
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "enumerate: " << e.what() << "\n";
    return kExitError;
  }
}

int cmd_truth_table(double q, std::ostream& out) {
  int failures = 0;
  out << "index X hidden target rnn\n";
  for (const auto& row : coloring_truth_table()) {
    const double h = coloring_step_single(row.x, row.bits, q);
    const int bin = h > 0.5 ? 1 : 0;
    if (bin != row.out) ++failures;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%2d %d %s %d %d%s\n", row.index(), row.x, bits5(row.bits).c_str(),
                  row.out, bin, bin == row.out ? "" : " MISMATCH");
    out << buf;
  }
  return failures == 0 ? kExitOk : kExitFailed;
}

int cmd_parity(int C, std::optional<int> n, std::ostream& out, std::ostream& err) {
  if (C < 0) {
    err << "parity: C must be >= 0\n";
    return kExitError;
  }
  if (n && (*n < 0 || *n > C)) {
    err << "parity: n must lie in [0, " << C << "]\n";
    return kExitError;
  }
  const auto head = build_parity_head(C);
  int failures = 0;
  const int lo = n ? *n : 0;
  const int hi = n ? *n : C;
  for (int k = lo; k <= hi; ++k) {
    const double y = eval_parity_head(head, k);
    const bool ok = y == static_cast<double>(k % 2);
    if (!ok) ++failures;
    out << "n=" << k << " -> " << y << (ok ? " PASS" : " FAIL") << "\n";
  }
  return failures == 0 ? kExitOk : kExitFailed;
}

int cmd_netspec(const std::string& kind, int N, double q, std::ostream& out, std::ostream& err) {
  try {
    if (kind == "ray") {
      out << write_netspec(build_ray_net(N));
    } else if (kind == "dilated") {
      out << write_netspec(build_dilated_ray_net(N));
    } else if (kind == "coloring-lstm") {
      out << write_netspec(build_coloring_convlstm(q));
    } else if (kind == "identity-lstm") {
      out << write_netspec(build_identity_convlstm(q));
    } else {
      err << "netspec: unknown net '" << kind << "'\n";
      return kExitError;
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "netspec: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace insideness
