#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "insideness/coloring.hpp"
#include "insideness/oracle.hpp"
#include "insideness/ray_net.hpp"

namespace insideness {

// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // a check ran and did not pass
inline constexpr int kExitError = 2;   // bad arguments, I/O or generation error

enum class Solver { Flood, RayOracle, RayNet, DilatedNet, Rnn, ConvLstm, Stacked };

std::string to_string(Solver s);
std::optional<Solver> parse_solver(const std::string& name);
const std::vector<Solver>& all_solvers();
bool is_recurrent(Solver s);

struct SolveResult {
  InsidenessMask mask;
  std::optional<int> steps;  // recurrent solvers only
  bool monotone = true;
};

// Runs any solver on an image; networks are built once per image side.
class SolverSet {
 public:
  explicit SolverSet(double q = kDefaultSaturation);

  SolveResult solve(Solver s, const BinaryImage& img);

 private:
  const RayNetSpec& ray_net(int side);
  const RayNetSpec& dilated_net(int side);

  double q_;
  std::map<int, RayNetSpec> ray_;
  std::map<int, RayNetSpec> dilated_;
  ConvLstmSpec coloring_;
  ConvLstmSpec identity_;
};

struct GenOptions {
  std::string dataset;  // polar4 ... polar24, spiral, digs, randomwalk
  int train = 0;
  int val = 0;
  int test = 0;
  std::optional<int> size;
  std::uint64_t seed = 0;
  int max_retries = 10'000;
  std::filesystem::path out_dir;
};

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);

struct ImageFailure {
  std::size_t index = 0;
  std::string image;
  std::size_t mismatched = 0;
  std::string error;  // set when the solver threw
};

struct StepStats {
  int min = 0;
  int max = 0;
  double mean = 0.0;
  int over_bound = 0;  // images whose steps exceed H * W
  int non_monotone = 0;
};

struct VerificationReport {
  std::string solver;
  std::string dataset;
  bool include_curve = false;
  std::size_t images = 0;
  double per_pixel = 0.0;
  double per_image = 0.0;
  std::vector<ImageFailure> failures;
  std::optional<StepStats> steps;
};

// Throws FormatError / std::runtime_error for unreadable datasets.
VerificationReport verify_dataset(const std::filesystem::path& dir, Solver solver,
                                  bool include_curve, double q = kDefaultSaturation);
std::string report_to_text(const VerificationReport& r);
std::string report_to_json(const VerificationReport& r);

struct VerifyOptions {
  std::filesystem::path dataset_dir;
  std::string solver;
  bool include_curve = false;
  double q = kDefaultSaturation;
  std::optional<std::filesystem::path> report_dir;  // defaults to dataset_dir
};

// Writes report.txt and report.json; kExitOk iff per-image accuracy is 1.0.
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);

struct EnumerateOptions {
  std::optional<int> image_size;
  std::optional<int> grid;
  bool exact = false;
  std::optional<std::filesystem::path> emit_dir;
};

int cmd_enumerate(const EnumerateOptions& opt, std::ostream& out, std::ostream& err);

int cmd_truth_table(double q, std::ostream& out);

int cmd_parity(int C, std::optional<int> n, std::ostream& out, std::ostream& err);

// kind: ray | dilated | coloring-lstm | identity-lstm.
int cmd_netspec(const std::string& kind, int N, double q, std::ostream& out, std::ostream& err);

}  // namespace insideness
