#include "insideness/enumeration.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "insideness/digital_geometry.hpp"
#include "insideness/errors.hpp"

namespace insideness {
namespace {

struct Grid {
  int rows;
  int cols;
  std::vector<std::vector<int>> adj;

  Grid(int r, int c) : rows(r), cols(c), adj(static_cast<std::size_t>(r * c)) {
    for (int v = 0; v < r * c; ++v) {
      const int vr = v / c;
      const int vc = v % c;
      auto& a = adj[static_cast<std::size_t>(v)];
      if (vr > 0) a.push_back(v - c);
      if (vc > 0) a.push_back(v - 1);
      if (vc + 1 < c) a.push_back(v + 1);
      if (vr + 1 < r) a.push_back(v + c);
    }
  }
  PixelCoord coord(int v) const { return {v / cols, v % cols}; }
};

class CycleSearch {
 public:
  CycleSearch(const Grid& g, bool want) : g_(g), want_(want), on_path_(g.adj.size(), 0) {}

  CycleEnumeration run() {
    for (int s = 0; s < static_cast<int>(g_.adj.size()); ++s) {
      start_ = s;
      path_ = {s};
      on_path_[static_cast<std::size_t>(s)] = 1;
      extend(s);
      on_path_[static_cast<std::size_t>(s)] = 0;
    }
    return std::move(result_);
  }

 private:
  void extend(int v) {
    for (int n : g_.adj[static_cast<std::size_t>(v)]) {
      if (n == start_ && path_.size() >= 4 && path_[1] < path_.back()) {
        ++result_.count;
        if (want_) {
          GridCycle c;
          for (int p : path_) c.push_back(g_.coord(p));
          c.push_back(g_.coord(start_));
          result_.cycles.push_back(std::move(c));
        }
        continue;
      }
      if (n <= start_ || on_path_[static_cast<std::size_t>(n)]) continue;
      on_path_[static_cast<std::size_t>(n)] = 1;
      path_.push_back(n);
      extend(n);
      path_.pop_back();
      on_path_[static_cast<std::size_t>(n)] = 0;
    }
  }

  const Grid& g_;
  bool want_;
  std::vector<std::uint8_t> on_path_;
  std::vector<int> path_;
  int start_ = 0;
  CycleEnumeration result_;
};

// Induced cycles of length >= 8 on the interior grid. A path vertex other
// than the current one may not be 4-adjacent to a new vertex (the start is
// allowed only when the new vertex closes the cycle), which is exactly the
// condition that every curve pixel has two curve neighbours.
class CurveSearch {
 public:
  CurveSearch(int n, bool want)
      : n_(n), inner_(n - 2), want_(want), on_path_(static_cast<std::size_t>(inner_ * inner_), 0) {}

  CurveEnumeration run() {
    for (int s = 0; s < inner_ * inner_; ++s) {
      start_ = s;
      path_ = {s};
      on_path_[static_cast<std::size_t>(s)] = 1;
      extend(s);
      on_path_[static_cast<std::size_t>(s)] = 0;
    }
    CurveEnumeration out;
    out.count = seen_.size();
    if (want_) {
      for (std::uint64_t bits : seen_) out.curves.push_back(render_bits(bits));
    }
    return out;
  }

 private:
  std::vector<int> neighbours(int v) const {
    std::vector<int> out;
    const int r = v / inner_;
    const int c = v % inner_;
    if (r > 0) out.push_back(v - inner_);
    if (c > 0) out.push_back(v - 1);
    if (c + 1 < inner_) out.push_back(v + 1);
    if (r + 1 < inner_) out.push_back(v + inner_);
    return out;
  }

  void extend(int v) {
    for (int n : neighbours(v)) {
      if (n <= start_ || on_path_[static_cast<std::size_t>(n)]) continue;
      bool touches_start = false;
      bool blocked = false;
      for (int m : neighbours(n)) {
        if (m == v || !on_path_[static_cast<std::size_t>(m)]) continue;
        if (m == start_) {
          touches_start = true;
        } else {
          blocked = true;
        }
      }
      if (blocked) continue;
      if (touches_start) {
        // n would close the cycle; the start must not be v itself.
        if (path_.size() + 1 >= 8 && path_.size() >= 2) record(n);
        continue;
      }
      on_path_[static_cast<std::size_t>(n)] = 1;
      path_.push_back(n);
      extend(n);
      path_.pop_back();
      on_path_[static_cast<std::size_t>(n)] = 0;
    }
  }

  void record(int last) {
    std::uint64_t bits = 0;
    for (int p : path_) bits |= std::uint64_t{1} << p;
    bits |= std::uint64_t{1} << last;
    seen_.insert(bits);
  }

  BinaryImage render_bits(std::uint64_t bits) const {
    BinaryImage img(n_, n_);
    for (int p = 0; p < inner_ * inner_; ++p) {
      if (bits & (std::uint64_t{1} << p)) img.set({1 + p / inner_, 1 + p % inner_}, true);
    }
    return img;
  }

  int n_;
  int inner_;
  bool want_;
  std::vector<std::uint8_t> on_path_;
  std::vector<int> path_;
  int start_ = 0;
  std::set<std::uint64_t> seen_;
};

}  // namespace

CycleEnumeration enumerate_grid_cycles(int rows, int cols, bool want_cycles) {
  if (rows < 2 || cols < 2) throw std::invalid_argument("enumerate_grid_cycles: rows and cols must be >= 2");
  if (rows * cols > kMaxGridVertices) {
    throw SizeTooLarge("enumerate_grid_cycles: " + std::to_string(rows) + "x" + std::to_string(cols) +
                       " exceeds " + std::to_string(kMaxGridVertices) + " vertices");
  }
  Grid g(rows, cols);
  return CycleSearch(g, want_cycles).run();
}

BinaryImage upsample_cycle(const GridCycle& cycle, int rows, int cols) {
  if (cycle.size() < 5 || cycle.front() != cycle.back()) {
    throw std::invalid_argument("upsample_cycle: expected a closed cycle of at least 4 vertices");
  }
  BinaryImage img(2 * rows - 1, 2 * cols - 1);
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
    const PixelCoord a = cycle[i];
    const PixelCoord b = cycle[i + 1];
    if (!are_4_adjacent(a, b) || a.row < 0 || a.row >= rows || a.col < 0 || a.col >= cols) {
      throw std::invalid_argument("upsample_cycle: not a grid cycle");
    }
    img.set({2 * a.row, 2 * a.col}, true);
    img.set({a.row + b.row, a.col + b.col}, true);
  }
  return img;
}

BinaryImage pad(const BinaryImage& img, int margin) {
  if (margin < 0) throw std::invalid_argument("pad: negative margin");
  BinaryImage out(img.height() + 2 * margin, img.width() + 2 * margin);
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      if (img(r, c)) out.set({r + margin, c + margin}, true);
    }
  }
  return out;
}

std::uint64_t jordan_lower_bound(int N) {
  if (N < 5 || N % 2 == 0) throw std::invalid_argument("jordan_lower_bound: N must be odd and >= 5");
  const int k = (N - 1) / 2;
  return enumerate_grid_cycles(k, k).count;
}

CurveEnumeration enumerate_jordan_curves_exact(int N, bool want_curves) {
  if (N < 1) throw std::invalid_argument("enumerate_jordan_curves_exact: N must be positive");
  if (N > kMaxExactImageSide) {
    throw SizeTooLarge("enumerate_jordan_curves_exact: N=" + std::to_string(N) + " exceeds " +
                       std::to_string(kMaxExactImageSide));
  }
  if (N < 5) return {};
  return CurveSearch(N, want_curves).run();
}

}  // namespace insideness
