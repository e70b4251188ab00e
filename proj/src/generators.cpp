#include "insideness/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "insideness/errors.hpp"
#include "insideness/rng.hpp"

namespace insideness {
namespace {

struct Rect {
  int r0, c0, r1, c1;  // inclusive bounds

  bool contains(PixelCoord p) const { return p.row >= r0 && p.row <= r1 && p.col >= c0 && p.col <= c1; }
};

// Chebyshev distance between two pixel rectangles; 0 when they overlap.
int chebyshev_gap(const Rect& a, const Rect& b) {
  const int dr = std::max({0, a.r0 - b.r1, b.r0 - a.r1});
  const int dc = std::max({0, a.c0 - b.c1, b.c0 - a.c1});
  return std::max(dr, dc);
}

// Accepts a candidate image if it is a Jordan curve without diagonal self-contact.
std::optional<JordanCurve> accept(const BinaryImage& img) {
  auto v = validate_jordan_curve(img);
  auto* curve = std::get_if<JordanCurve>(&v);
  if (!curve || diagonal_self_contact(*curve)) return std::nullopt;
  return std::move(*curve);
}

// Region pixels that are 8-adjacent to the complement (image outside counts as complement).
BinaryImage boundary_ring(const BinaryImage& region) {
  BinaryImage ring(region.height(), region.width());
  for (int r = 0; r < region.height(); ++r) {
    for (int c = 0; c < region.width(); ++c) {
      if (!region(r, c)) continue;
      bool edge = false;
      for (int dr = -1; dr <= 1 && !edge; ++dr) {
        for (int dc = -1; dc <= 1 && !edge; ++dc) {
          PixelCoord q{r + dr, c + dc};
          edge = !region.contains(q) || !region.at(q);
        }
      }
      if (edge) ring.set({r, c}, true);
    }
  }
  return ring;
}

[[noreturn]] void exhausted(const char* family, int attempts) {
  throw RetryExhausted(std::string(family) + " generator: no valid curve after " +
                       std::to_string(attempts) + " attempts");
}

// ---- Polar ----------------------------------------------------------------

std::optional<GeneratedCurve> polar_candidate(Rng& rng, int max_vertices, int size) {
  const int rmax = polar_max_radius(size);
  const PixelCoord centre{rng.uniform_int(1 + rmax, size - 2 - rmax),
                          rng.uniform_int(1 + rmax, size - 2 - rmax)};
  const int k = rng.uniform_int(3, max_vertices);
  std::vector<double> angles(static_cast<std::size_t>(k));
  for (auto& a : angles) a = rng.uniform_real(0.0, 2.0 * std::numbers::pi);
  std::sort(angles.begin(), angles.end());

  std::vector<PixelCoord> vertices;
  for (double a : angles) {
    const double radius = rng.uniform_real(kPolarMinRadius, static_cast<double>(rmax));
    vertices.push_back({centre.row + static_cast<int>(std::lround(radius * std::sin(a))),
                        centre.col + static_cast<int>(std::lround(radius * std::cos(a)))});
  }

  std::vector<PixelCoord> path;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    auto seg = digital_segment(vertices[i], vertices[(i + 1) % vertices.size()]);
    path.insert(path.end(), seg.begin(), seg.end() - 1);
  }
  std::set<PixelCoord> distinct(path.begin(), path.end());
  if (distinct.size() != path.size()) return std::nullopt;
  for (auto p : path) {
    const double dr = p.row - centre.row;
    const double dc = p.col - centre.col;
    if (dr * dr + dc * dc > static_cast<double>(rmax * rmax)) return std::nullopt;
  }
  auto curve = accept(render(path, {size, size}));
  if (!curve) return std::nullopt;
  return GeneratedCurve{std::move(*curve), centre, k, 0};
}

// ---- Spiral ---------------------------------------------------------------

constexpr std::array<PixelCoord, 4> kDirections{{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};

struct SpiralMove {
  int dir;
  int length;
  int thickness;
};

Rect segment_rect(PixelCoord from, PixelCoord d, int first, int length, int thickness) {
  const PixelCoord a{from.row + d.row * first, from.col + d.col * first};
  const PixelCoord b{from.row + d.row * length, from.col + d.col * length};
  Rect r{std::min(a.row, b.row), std::min(a.col, b.col), std::max(a.row, b.row),
         std::max(a.col, b.col)};
  if (d.row == 0) {
    r.r0 -= thickness;
    r.r1 += thickness;
  } else {
    r.c0 -= thickness;
    r.c1 += thickness;
  }
  return r;
}

std::optional<GeneratedCurve> spiral_candidate(Rng& rng, int size) {
  const int lo = std::min(10, size - 2);
  const int hi = std::min(20, size - 2);
  const PixelCoord start{rng.uniform_int(lo, hi), rng.uniform_int(lo, hi)};

  BinaryImage region(size, size);
  std::optional<Rect> prev;
  int prev_dir = -1;
  PixelCoord tip = start;
  int segments = 0;

  std::vector<SpiralMove> moves;
  for (int d = 0; d < 4; ++d) {
    for (int len = 3; len <= 10; ++len) {
      for (int t = 1; t <= 4; ++t) moves.push_back({d, len, t});
    }
  }

  auto fits = [&](const Rect& rect) {
    if (rect.r0 < 1 || rect.c0 < 1 || rect.r1 > size - 2 || rect.c1 > size - 2) return false;
    for (int r = rect.r0 - 1; r <= rect.r1 + 1; ++r) {
      for (int c = rect.c0 - 1; c <= rect.c1 + 1; ++c) {
        PixelCoord q{r, c};
        if (region.contains(q) && region.at(q) && !(prev && prev->contains(q))) return false;
      }
    }
    return true;
  };

  for (;;) {
    // Shuffling and taking the first fitting move draws uniformly among the
    // moves that fit; an empty result means the walk is finished.
    rng.shuffle(moves);
    std::optional<Rect> chosen;
    const SpiralMove* move = nullptr;
    for (const auto& m : moves) {
      if (prev_dir >= 0 && (m.dir ^ 1) == prev_dir) continue;  // no reversal
      Rect rect = segment_rect(tip, kDirections[static_cast<std::size_t>(m.dir)],
                               segments == 0 ? 0 : 1, m.length, m.thickness);
      if (fits(rect)) {
        chosen = rect;
        move = &m;
        break;
      }
    }
    if (!chosen) break;
    for (int r = chosen->r0; r <= chosen->r1; ++r) {
      for (int c = chosen->c0; c <= chosen->c1; ++c) region.set({r, c}, true);
    }
    const PixelCoord d = kDirections[static_cast<std::size_t>(move->dir)];
    tip = {tip.row + d.row * move->length, tip.col + d.col * move->length};
    prev = chosen;
    prev_dir = move->dir;
    ++segments;
  }
  if (segments == 0) return std::nullopt;
  auto curve = accept(boundary_ring(region));
  if (!curve) return std::nullopt;
  return GeneratedCurve{std::move(*curve), start, segments, 0};
}

// ---- Digs -----------------------------------------------------------------

constexpr int kDigWall = 3;        // minimum wall of region pixels around a dig
constexpr int kDigPlacementTries = 50;

std::optional<GeneratedCurve> digs_candidate(Rng& rng, int size) {
  const int min_side = std::max(2 * kDigWall + 1, size / 4);
  const int h = rng.uniform_int(min_side, size - 2);
  const int w = rng.uniform_int(min_side, size - 2);
  const int r0 = rng.uniform_int(1, size - 1 - h);
  const int c0 = rng.uniform_int(1, size - 1 - w);
  const int ndigs = rng.uniform_int(1, 10);

  std::vector<Rect> digs;
  for (int i = 0; i < ndigs; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < kDigPlacementTries && !placed; ++attempt) {
      const int side = rng.uniform_int(0, 3);  // top, bottom, left, right
      const bool horizontal_side = side < 2;
      const int along = horizontal_side ? w : h;
      const int across = horizontal_side ? h : w;
      const int thickness = rng.uniform_int(1, along - 2 * kDigWall);
      const int offset = rng.uniform_int(kDigWall, along - kDigWall - thickness);
      int depth = rng.uniform_int(1, across - kDigWall);

      auto dig_rect = [&](int d) {
        switch (side) {
          case 0: return Rect{r0, c0 + offset, r0 + d - 1, c0 + offset + thickness - 1};
          case 1: return Rect{r0 + h - d, c0 + offset, r0 + h - 1, c0 + offset + thickness - 1};
          case 2: return Rect{r0 + offset, c0, r0 + offset + thickness - 1, c0 + d - 1};
          default: return Rect{r0 + offset, c0 + w - d, r0 + offset + thickness - 1, c0 + w - 1};
        }
      };
      auto clear = [&](const Rect& rect) {
        return std::all_of(digs.begin(), digs.end(),
                           [&](const Rect& o) { return chebyshev_gap(rect, o) > kDigWall; });
      };
      // Shorten the dig until it keeps clear of the earlier ones.
      while (depth >= 1 && !clear(dig_rect(depth))) --depth;
      if (depth >= 1) {
        digs.push_back(dig_rect(depth));
        placed = true;
      }
    }
    if (!placed) return std::nullopt;
  }

  BinaryImage region(size, size);
  for (int r = r0; r < r0 + h; ++r) {
    for (int c = c0; c < c0 + w; ++c) region.set({r, c}, true);
  }
  for (const auto& d : digs) {
    for (int r = d.r0; r <= d.r1; ++r) {
      for (int c = d.c0; c <= d.c1; ++c) region.set({r, c}, false);
    }
  }
  auto curve = accept(boundary_ring(region));
  if (!curve) return std::nullopt;
  return GeneratedCurve{std::move(*curve), {r0, c0}, ndigs, 0};
}

// ---- Random walk ----------------------------------------------------------

constexpr int kMinCurveLength = 8;

// Depth-first self-avoiding walk. A step may only touch (8-adjacency) the
// current pixel and its predecessor, except the step that closes the curve,
// which may also touch the start and its successor.
std::optional<GeneratedCurve> random_walk_candidate(Rng& rng, int size) {
  const int interior_lo = 1;
  const int interior_hi = size - 2;
  const PixelCoord start{rng.uniform_int(interior_lo, interior_hi),
                         rng.uniform_int(interior_lo, interior_hi)};
  const long budget = 64L * size * size;

  std::vector<int> position(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), -1);
  auto pos = [&](PixelCoord p) -> int& {
    return position[static_cast<std::size_t>(p.row) * static_cast<std::size_t>(size) +
                    static_cast<std::size_t>(p.col)];
  };

  std::vector<PixelCoord> path{start};
  pos(start) = 0;

  struct Frame {
    std::vector<PixelCoord> options;
    std::size_t next = 0;
  };

  auto allowed = [&](PixelCoord n, bool closing) {
    const int k = static_cast<int>(path.size()) - 1;
    for (int dr = -1; dr <= 1; ++dr) {
      for (int dc = -1; dc <= 1; ++dc) {
        if (dr == 0 && dc == 0) continue;
        PixelCoord m{n.row + dr, n.col + dc};
        if (m.row < 0 || m.col < 0 || m.row >= size || m.col >= size) continue;
        const int i = pos(m);
        if (i < 0 || i == k || i == k - 1) continue;
        if (closing && (i == 0 || i == 1)) continue;
        return false;
      }
    }
    return true;
  };

  // Returns the valid next pixels in random order; sets closes[i] when the
  // option completes the curve.
  auto options_from = [&](PixelCoord c) {
    std::vector<PixelCoord> out;
    for (auto d : kDirections) {
      PixelCoord n{c.row + d.row, c.col + d.col};
      if (n.row < interior_lo || n.col < interior_lo || n.row > interior_hi || n.col > interior_hi) {
        continue;
      }
      if (pos(n) >= 0) continue;
      const bool touches_start = path.size() > 1 && are_4_adjacent(n, start);
      if (touches_start && static_cast<int>(path.size()) + 1 < kMinCurveLength) continue;
      if (!allowed(n, touches_start)) continue;
      out.push_back(n);
    }
    rng.shuffle(out);
    return out;
  };

  std::vector<Frame> stack;
  stack.push_back({options_from(start), 0});
  long expansions = 0;
  while (!stack.empty()) {
    if (++expansions > budget) return std::nullopt;
    Frame& top = stack.back();
    if (top.next == top.options.size()) {
      stack.pop_back();
      pos(path.back()) = -1;
      path.pop_back();
      continue;
    }
    const PixelCoord n = top.options[top.next++];
    if (path.size() > 1 && are_4_adjacent(n, start)) {
      std::vector<PixelCoord> cycle = path;
      cycle.push_back(n);
      auto curve = accept(render(cycle, {size, size}));
      if (!curve) continue;
      return GeneratedCurve{std::move(*curve), start, static_cast<int>(cycle.size()), 0};
    }
    pos(n) = static_cast<int>(path.size());
    path.push_back(n);
    stack.push_back({options_from(n), 0});
  }
  return std::nullopt;
}

void check_size(const char* family, int size, int minimum) {
  if (size < minimum) {
    throw std::invalid_argument(std::string(family) + " generator needs image size >= " +
                                std::to_string(minimum));
  }
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::Polar: return "polar";
    case Family::Spiral: return "spiral";
    case Family::Digs: return "digs";
    case Family::RandomWalk: return "randomwalk";
  }
  return "unknown";
}

std::optional<Family> parse_family(const std::string& name) {
  if (name == "polar") return Family::Polar;
  if (name == "spiral") return Family::Spiral;
  if (name == "digs") return Family::Digs;
  if (name == "randomwalk" || name == "random-walk") return Family::RandomWalk;
  return std::nullopt;
}

int default_image_size(Family f) { return f == Family::Polar ? 32 : 42; }

int polar_max_radius(int size) { return std::min(14, (size - 3) / 2); }

std::vector<PixelCoord> digital_segment(PixelCoord a, PixelCoord b) {
  const int nr = std::abs(b.row - a.row);
  const int nc = std::abs(b.col - a.col);
  const int sr = b.row > a.row ? 1 : -1;
  const int sc = b.col > a.col ? 1 : -1;
  std::vector<PixelCoord> out{a};
  PixelCoord p = a;
  // Step along whichever axis keeps the walk closest to the ideal segment:
  // compare (ic + 1/2) / nc with (ir + 1/2) / nr in integer arithmetic.
  for (int ir = 0, ic = 0; ir < nr || ic < nc;) {
    if ((1 + 2 * ic) * nr < (1 + 2 * ir) * nc) {
      p.col += sc;
      ++ic;
    } else {
      p.row += sr;
      ++ir;
    }
    out.push_back(p);
  }
  return out;
}

GeneratedCurve generate(const GeneratorParams& params) {
  Rng rng(params.seed);
  const int size = params.image_size;
  const char* name = "";
  switch (params.family) {
    case Family::Polar:
      name = "polar";
      check_size(name, size, 9);
      if (params.max_vertices < 3) throw std::invalid_argument("polar generator needs max_vertices >= 3");
      break;
    case Family::Spiral: name = "spiral"; check_size(name, size, 12); break;
    case Family::Digs: name = "digs"; check_size(name, size, 16); break;
    case Family::RandomWalk: name = "randomwalk"; check_size(name, size, 5); break;
  }
  for (int attempt = 1; attempt <= params.max_retries; ++attempt) {
    std::optional<GeneratedCurve> out;
    switch (params.family) {
      case Family::Polar: out = polar_candidate(rng, params.max_vertices, size); break;
      case Family::Spiral: out = spiral_candidate(rng, size); break;
      case Family::Digs: out = digs_candidate(rng, size); break;
      case Family::RandomWalk: out = random_walk_candidate(rng, size); break;
    }
    if (out) {
      out->attempts = attempt;
      return std::move(*out);
    }
  }
  exhausted(name, params.max_retries);
}

JordanCurve gen_polar(std::uint64_t seed, int max_vertices, int size, int max_retries) {
  return generate({Family::Polar, size, max_vertices, seed, max_retries}).curve;
}

JordanCurve gen_spiral(std::uint64_t seed, int size, int max_retries) {
  return generate({Family::Spiral, size, 0, seed, max_retries}).curve;
}

JordanCurve gen_digs(std::uint64_t seed, int size, int max_retries) {
  return generate({Family::Digs, size, 0, seed, max_retries}).curve;
}

JordanCurve gen_random_walk(std::uint64_t seed, int size, int max_retries) {
  return generate({Family::RandomWalk, size, 0, seed, max_retries}).curve;
}

double curve_difference(const JordanCurve& a, const JordanCurve& b) {
  if (a.dims() != b.dims()) throw std::invalid_argument("curve_difference: dimension mismatch");
  const auto da = a.image().data();
  const auto db = b.image().data();
  std::size_t diff = 0;
  for (std::size_t i = 0; i < da.size(); ++i) diff += (da[i] != db[i]) ? 1 : 0;
  const auto denom = std::max(a.length(), b.length());
  return static_cast<double>(diff) / static_cast<double>(denom);
}

bool dissimilar(const JordanCurve& a, const JordanCurve& b) {
  return curve_difference(a, b) >= kDissimilarityThreshold;
}

std::string to_string(Split s) {
  switch (s) {
    case Split::Train: return "train";
    case Split::Validation: return "val";
    case Split::Test: return "test";
  }
  return "unknown";
}

Dataset build_dataset(const GeneratorParams& params, int n_train, int n_val, int n_test) {
  if (n_train < 0 || n_val < 0 || n_test < 0) {
    throw std::invalid_argument("build_dataset: split sizes must be non-negative");
  }
  Dataset ds;
  ds.manifest.family = params.family;
  ds.manifest.params = params;
  ds.manifest.n_train = n_train;
  ds.manifest.n_val = n_val;
  ds.manifest.n_test = n_test;

  auto add = [&](JordanCurve curve, Split split, std::uint64_t seed) {
    ds.masks.push_back(flood_fill_outside(curve.image()));
    ds.curves.push_back(std::move(curve));
    ds.splits.push_back(split);
    ds.manifest.curve_seeds.push_back(seed);
  };

  for (int i = 0; i < n_train; ++i) {
    GeneratorParams p = params;
    p.seed = derive_seed(params.seed, 0, static_cast<std::uint64_t>(i));
    add(generate(p).curve, Split::Train, p.seed);
  }
  const std::vector<JordanCurve> train(ds.curves.begin(), ds.curves.end());

  auto fill = [&](Split split, std::uint64_t stream, int count) {
    std::uint64_t candidate = 0;
    for (int i = 0; i < count; ++i) {
      int rejected = 0;
      for (;;) {
        GeneratorParams p = params;
        p.seed = derive_seed(params.seed, stream, candidate++);
        JordanCurve curve = generate(p).curve;
        const bool ok = std::all_of(train.begin(), train.end(),
                                    [&](const JordanCurve& t) { return dissimilar(curve, t); });
        if (ok) {
          add(std::move(curve), split, p.seed);
          break;
        }
        if (++rejected >= params.max_retries) {
          throw RetryExhausted("build_dataset: no " + to_string(split) +
                               " curve dissimilar to the train set after " +
                               std::to_string(rejected) + " candidates");
        }
      }
    }
  };
  fill(Split::Validation, 1, n_val);
  fill(Split::Test, 2, n_test);
  return ds;
}

}  // namespace insideness
