#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

#include "pltop/linalg.hpp"

namespace pltop {

inline constexpr int kDefaultStrongGpCap = 12;

// Violating data of a (strong) general position check: the subsets whose
// affine hulls are in excess intersection. For plain general position there
// is a single subset.
struct PositionWitness {
  std::vector<std::vector<Point>> subsets;
  std::string describe() const {
    std::ostringstream os;
    for (size_t i = 0; i < subsets.size(); ++i) {
      os << (i ? " | " : "") << "{";
      for (size_t j = 0; j < subsets[i].size(); ++j)
        os << (j ? "," : "") << point_str(subsets[i][j]);
      os << "}";
    }
    return os.str();
  }
};

namespace detail {

inline void check_uniform_dim(const std::vector<Point>& v, int d) {
  for (const auto& p : v)
    if (p.dim() != d) throw input_error("point with wrong ambient dimension");
}

// Enumerates subsets of {0..n-1} of size 2..max_size in increasing index
// order, invoking fn with each; fn returns false to stop early.
template <typename Fn>
bool foreach_small_subset_from(int n, int max_size, std::vector<int>& idx, int start,
                               Fn&& fn) {
  for (int i = start; i < n; ++i) {
    idx.push_back(i);
    if (static_cast<int>(idx.size()) >= 2 && !fn(idx)) return false;
    if (static_cast<int>(idx.size()) < max_size)
      if (!foreach_small_subset_from(n, max_size, idx, i + 1, fn)) return false;
    idx.pop_back();
  }
  return true;
}

template <typename Fn>
bool foreach_small_subset(int n, int max_size, Fn&& fn) {
  std::vector<int> idx;
  return foreach_small_subset_from(n, max_size, idx, 0, fn);
}

}  // namespace detail

// No i-flat contains i+2 of the points, for every i < d. Equivalently every
// subset of at most d+1 points is affinely independent (duplicates fail).
inline bool in_general_position(const std::vector<Point>& points, int d,
                                PositionWitness* witness = nullptr) {
  detail::check_uniform_dim(points, d);
  const int n = static_cast<int>(points.size());
  bool ok = detail::foreach_small_subset(n, d + 1, [&](const std::vector<int>& idx) {
    std::vector<Point> sub;
    for (int i : idx) sub.push_back(points[static_cast<size_t>(i)]);
    if (!affinely_independent(sub)) {
      if (witness) witness->subsets = {sub};
      return false;
    }
    return true;
  });
  return ok;
}

namespace detail {

struct Block {
  std::vector<int> idx;  // affinely independent member indices, increasing
  uint32_t mask = 0;
  AffineFlat flat;  // its affine hull
  int dim = 0;
};

// All affinely independent index subsets of size 1..d+1.
inline std::vector<Block> independent_blocks(const std::vector<Point>& pts, int d) {
  std::vector<Block> out;
  const int n = static_cast<int>(pts.size());
  // Grow subsets depth-first, pruning dependent ones (supersets of a
  // dependent set are dependent).
  struct Frame {
    std::vector<int> idx;
    int next;
  };
  std::vector<Frame> stack;
  for (int i = n - 1; i >= 0; --i) stack.push_back({{i}, i + 1});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    std::vector<Point> sub;
    for (int i : f.idx) sub.push_back(pts[static_cast<size_t>(i)]);
    if (!affinely_independent(sub)) continue;
    Block b;
    b.idx = f.idx;
    for (int i : f.idx) b.mask |= (1u << i);
    b.flat = flat_from_points(sub);
    b.dim = static_cast<int>(f.idx.size()) - 1;
    out.push_back(std::move(b));
    if (static_cast<int>(f.idx.size()) < d + 1)
      for (int j = n - 1; j >= f.next; --j) {
        Frame g{f.idx, j + 1};
        g.idx.push_back(j);
        stack.push_back(std::move(g));
      }
  }
  std::sort(out.begin(), out.end(),
            [](const Block& a, const Block& b) { return a.idx < b.idx; });
  return out;
}

}  // namespace detail

// Strong general position: for every collection of r >= 2 pairwise disjoint
// nonempty subsets V_1..V_r,
//     dim (Aff V_1 cap ... cap Aff V_r)  <=  sum dim Aff(V_i) - d(r-1),
// with an empty intersection passing vacuously. Only collections of affinely
// independent subsets need checking: replacing V_i by a maximal affinely
// independent subset changes neither side.
inline bool in_strong_general_position(const std::vector<Point>& points, int d,
                                       PositionWitness* witness = nullptr,
                                       int cap = kDefaultStrongGpCap) {
  detail::check_uniform_dim(points, d);
  const int n = static_cast<int>(points.size());
  if (n > cap || n > 32) {
    std::ostringstream os;
    os << "strong general position check on " << n << " points exceeds cap "
       << std::min(cap, 32);
    throw cap_exceeded(os.str());
  }
  // Duplicate points violate the condition outright ({v} vs {v'} with v=v').
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (points[static_cast<size_t>(i)] == points[static_cast<size_t>(j)]) {
        if (witness)
          witness->subsets = {{points[static_cast<size_t>(i)]},
                              {points[static_cast<size_t>(j)]}};
        return false;
      }

  const auto blocks = detail::independent_blocks(points, d);
  struct Frame {
    size_t next_block;
    uint32_t used;
    AffineFlat meet;  // intersection of hulls so far (nonempty)
    int rhs;          // sum of dims
    int r;
    std::vector<size_t> chosen;
  };
  std::vector<Frame> stack;
  for (size_t bi = blocks.size(); bi-- > 0;)
    stack.push_back({bi + 1, blocks[bi].mask, blocks[bi].flat,
                     blocks[bi].dim, 1, {bi}});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.r >= 2) {
      const int slack = f.rhs - d * (f.r - 1);
      if (f.meet.dim() > slack) {
        if (witness) {
          witness->subsets.clear();
          for (size_t bi : f.chosen) {
            std::vector<Point> sub;
            for (int i : blocks[bi].idx) sub.push_back(points[static_cast<size_t>(i)]);
            witness->subsets.push_back(std::move(sub));
          }
        }
        return false;
      }
    }
    for (size_t bi = blocks.size(); bi-- > f.next_block;) {
      if (blocks[bi].mask & f.used) continue;
      auto meet = intersect_flats(f.meet, blocks[bi].flat);
      if (!meet) continue;  // empty forever below this family
      Frame g{bi + 1, f.used | blocks[bi].mask, std::move(*meet),
              f.rhs + blocks[bi].dim, f.r + 1, f.chosen};
      g.chosen.push_back(bi);
      stack.push_back(std::move(g));
    }
  }
  return true;
}

}  // namespace pltop
