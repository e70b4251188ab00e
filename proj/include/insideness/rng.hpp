#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace insideness {

// SplitMix64 finaliser; used to derive independent per-curve seeds.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index);

// std::mt19937_64 engine with distribution code written out here, because the
// standard distributions are implementation-defined and would make datasets
// differ between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  std::uint64_t next() { return engine_(); }
  // Uniform integer in [lo, hi] (inclusive); unbiased via rejection.
  int uniform_int(int lo, int hi);
  // Uniform double in [0, 1) with 53 random bits.
  double uniform01();
  double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(0, static_cast<int>(i - 1)));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace insideness
