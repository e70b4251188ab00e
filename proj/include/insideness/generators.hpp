#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "insideness/digital_geometry.hpp"
#include "insideness/oracle.hpp"

namespace insideness {

enum class Family { Polar, Spiral, Digs, RandomWalk };

std::string to_string(Family f);
// Accepts "polar", "spiral", "digs", "randomwalk" / "random-walk".
std::optional<Family> parse_family(const std::string& name);

inline constexpr int kDefaultMaxRetries = 10'000;

struct GeneratorParams {
  Family family = Family::Polar;
  int image_size = 32;
  int max_vertices = 24;  // Polar only
  std::uint64_t seed = 0;
  int max_retries = kDefaultMaxRetries;

  friend bool operator==(const GeneratorParams&, const GeneratorParams&) = default;
};

int default_image_size(Family f);

// A generated curve plus the family-specific quantities its envelope is stated in.
struct GeneratedCurve {
  JordanCurve curve;
  PixelCoord anchor;  // polar centre, spiral / walk start, digs rectangle top-left
  int pieces = 0;     // polar vertices, spiral segments, digs count, walk length
  int attempts = 0;   // candidates drawn, the accepted one included
};

// Every generator rejects (never repairs) candidates that fail
// validate_jordan_curve or have a diagonal self-contact, and throws
// RetryExhausted after max_retries rejected candidates.
GeneratedCurve generate(const GeneratorParams& params);

JordanCurve gen_polar(std::uint64_t seed, int max_vertices, int size = 32,
                      int max_retries = kDefaultMaxRetries);
JordanCurve gen_spiral(std::uint64_t seed, int size = 42, int max_retries = kDefaultMaxRetries);
JordanCurve gen_digs(std::uint64_t seed, int size = 42, int max_retries = kDefaultMaxRetries);
JordanCurve gen_random_walk(std::uint64_t seed, int size, int max_retries = kDefaultMaxRetries);

// 4-connected digital straight segment from a to b, both endpoints included.
std::vector<PixelCoord> digital_segment(PixelCoord a, PixelCoord b);

// Polar radii live in [kPolarMinRadius, polar_max_radius(size)].
inline constexpr double kPolarMinRadius = 3.0;
int polar_max_radius(int size);

// |F_a xor F_b| / max(|F_a|, |F_b|). Throws std::invalid_argument on size mismatch.
double curve_difference(const JordanCurve& a, const JordanCurve& b);
inline constexpr double kDissimilarityThreshold = 0.25;
bool dissimilar(const JordanCurve& a, const JordanCurve& b);

enum class Split { Train, Validation, Test };
std::string to_string(Split s);

struct Provenance {
  Family family = Family::Polar;
  GeneratorParams params;
  int n_train = 0;
  int n_val = 0;
  int n_test = 0;
  std::vector<std::uint64_t> curve_seeds;  // one per curve, dataset order

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Dataset {
  std::vector<JordanCurve> curves;
  std::vector<InsidenessMask> masks;
  std::vector<Split> splits;
  Provenance manifest;
};

// Train curves first, then validation and test candidates that are accepted
// only when dissimilar to every train curve. Curve i of a split uses a seed
// derived from (params.seed, split, candidate index).
Dataset build_dataset(const GeneratorParams& params, int n_train, int n_val, int n_test);

}  // namespace insideness
