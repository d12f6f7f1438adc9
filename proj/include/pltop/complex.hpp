#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pltop/linalg.hpp"

namespace pltop {

using Simplex = std::vector<int>;  // sorted vertex indices

// Finite abstract simplicial complex given by its facets (downward closure
// implied). Optionally carries a geometric realization and named marked
// subcomplexes (facet lists).
struct AbstractComplex {
  int vertex_count = 0;
  std::set<Simplex> facets;
  std::optional<std::vector<Point>> realization;
  std::map<std::string, std::set<Simplex>> marks;

  int dim() const {
    int d = -1;
    for (const auto& f : facets) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
  }
};

namespace detail {

inline Simplex sorted_simplex(Simplex s, int vertex_count) {
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw input_error("facet with repeated vertex");
  if (s.empty() || s.front() < 0 || s.back() >= vertex_count)
    throw input_error("facet vertex index out of range");
  return s;
}

inline bool simplex_subset(const Simplex& a, const Simplex& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace detail

inline AbstractComplex make_complex(int vertex_count, std::vector<Simplex> facets) {
  AbstractComplex k;
  k.vertex_count = vertex_count;
  std::set<Simplex> all;
  for (auto& f : facets) all.insert(detail::sorted_simplex(std::move(f), vertex_count));
  for (const auto& f : all) {
    bool maximal = true;
    for (const auto& g : all)
      if (f != g && detail::simplex_subset(f, g)) {
        maximal = false;
        break;
      }
    if (maximal) k.facets.insert(f);
  }
  return k;
}

// Downward closure: every nonempty face of every facet.
inline std::set<Simplex> all_simplices(const AbstractComplex& k) {
  std::set<Simplex> out;
  std::vector<Simplex> queue(k.facets.begin(), k.facets.end());
  while (!queue.empty()) {
    Simplex s = std::move(queue.back());
    queue.pop_back();
    if (!out.insert(s).second) continue;
    if (s.size() <= 1) continue;
    for (size_t drop = 0; drop < s.size(); ++drop) {
      Simplex f;
      for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) f.push_back(s[i]);
      queue.push_back(std::move(f));
    }
  }
  return out;
}

// Number of i-simplices for i = 0..dim.
inline std::vector<size_t> f_vector(const AbstractComplex& k) {
  std::vector<size_t> f(static_cast<size_t>(k.dim() + 1), 0);
  for (const auto& s : all_simplices(k)) f[s.size() - 1]++;
  return f;
}

inline long euler_characteristic(const AbstractComplex& k) {
  long chi = 0;
  int sign = 1;
  for (size_t count : f_vector(k)) {
    chi += sign * static_cast<long>(count);
    sign = -sign;
  }
  return chi;
}

// The complex generated by a facet list (as a standalone complex over the
// same vertex index space).
inline AbstractComplex subcomplex(const AbstractComplex& k, const std::set<Simplex>& facets) {
  AbstractComplex s;
  s.vertex_count = k.vertex_count;
  std::vector<Simplex> fs(facets.begin(), facets.end());
  return make_complex(k.vertex_count, std::move(fs));
}

// Does the facet list span a copy of the boundary of the (l+1)-simplex,
// i.e. l+2 vertices with every (l+1)-subset present as a facet?
inline bool is_boundary_sphere_copy(const std::set<Simplex>& facets, int l) {
  std::set<int> verts;
  for (const auto& f : facets) verts.insert(f.begin(), f.end());
  if (static_cast<int>(verts.size()) != l + 2) return false;
  size_t expected = static_cast<size_t>(l + 2);
  if (facets.size() != expected) return false;
  for (const auto& f : facets)
    if (static_cast<int>(f.size()) != l + 1) return false;
  return true;  // l+2 distinct (l+1)-subsets of an (l+2)-set are all of them
}

// Boundary of the (n+1)-simplex: the standard triangulation of S^n.
inline AbstractComplex boundary_sphere(int n) {
  if (n < 0) throw input_error("boundary_sphere: n must be >= 0");
  std::vector<Simplex> facets;
  const int nv = n + 2;
  for (int skip = 0; skip < nv; ++skip) {
    Simplex f;
    for (int i = 0; i < nv; ++i)
      if (i != skip) f.push_back(i);
    facets.push_back(std::move(f));
  }
  return make_complex(nv, std::move(facets));
}

namespace detail {

// Monotone staircase paths from (0,0) to (i,j); each path yields one top
// simplex of the product triangulation of a pair of facets.
inline void staircase_paths(int i, int j, std::vector<std::pair<int, int>>& path,
                            std::vector<std::vector<std::pair<int, int>>>& out) {
  const auto [a, b] = path.back();
  if (a == i && b == j) {
    out.push_back(path);
    return;
  }
  if (a < i) {
    path.emplace_back(a + 1, b);
    staircase_paths(i, j, path, out);
    path.pop_back();
  }
  if (b < j) {
    path.emplace_back(a, b + 1);
    staircase_paths(i, j, path, out);
    path.pop_back();
  }
}

}  // namespace detail

// Staircase triangulation of |A| x |B|. Vertices are pairs (a,b) indexed
// a * B.vertex_count + b; vertex order within facets is index order. The
// restriction to A x {v} (or {v} x B) is a copy of A (or B).
inline AbstractComplex staircase_product(const AbstractComplex& a, const AbstractComplex& b) {
  const int nb = b.vertex_count;
  std::vector<Simplex> facets;
  for (const auto& fa : a.facets)
    for (const auto& fb : b.facets) {
      const int i = static_cast<int>(fa.size()) - 1;
      const int j = static_cast<int>(fb.size()) - 1;
      std::vector<std::pair<int, int>> path{{0, 0}};
      std::vector<std::vector<std::pair<int, int>>> paths;
      detail::staircase_paths(i, j, path, paths);
      for (const auto& p : paths) {
        Simplex cell;
        for (const auto& [s, t] : p)
          cell.push_back(fa[static_cast<size_t>(s)] * nb + fb[static_cast<size_t>(t)]);
        facets.push_back(std::move(cell));
      }
    }
  return make_complex(a.vertex_count * nb, std::move(facets));
}

// The 2l-torus S^l x S^l as a staircase product of two copies of the
// boundary of the (l+1)-simplex, with the meridian m = S^l x {v0} and the
// parallel p = {v0} x S^l marked.
inline AbstractComplex torus_gadget(int l) {
  if (l < 1) throw input_error("torus_gadget: l must be >= 1");
  const AbstractComplex s = boundary_sphere(l);
  AbstractComplex t = staircase_product(s, s);
  const int nb = s.vertex_count;
  std::set<Simplex> m, p;
  for (const auto& f : s.facets) {
    Simplex fm, fp;
    for (int v : f) {
      fm.push_back(v * nb);  // (v, 0)
      fp.push_back(v);       // (0, v)
    }
    std::sort(fm.begin(), fm.end());
    std::sort(fp.begin(), fp.end());
    m.insert(std::move(fm));
    p.insert(std::move(fp));
  }
  t.marks["m"] = std::move(m);
  t.marks["p"] = std::move(p);
  return t;
}

// One cell sigma x tau of a deleted product, where sigma and tau are
// disjoint simplices of the base complex.
struct ProductCell {
  Simplex left, right;
  bool operator==(const ProductCell& o) const = default;
  bool operator<(const ProductCell& o) const {
    if (left != o.left) return left < o.left;
    return right < o.right;
  }
};

// The simplicial deleted product: all ordered pairs of disjoint simplices,
// closed under faces by construction, with the swap involution.
struct DeletedProduct {
  std::vector<ProductCell> cells;  // sorted

  std::map<std::pair<int, int>, size_t> counts_by_bidim() const {
    std::map<std::pair<int, int>, size_t> out;
    for (const auto& c : cells)
      out[{static_cast<int>(c.left.size()) - 1, static_cast<int>(c.right.size()) - 1}]++;
    return out;
  }

  bool involution_fixed_point_free() const {
    for (const auto& c : cells)
      if (c.left == c.right) return false;
    return true;
  }
};

inline DeletedProduct deleted_product(const AbstractComplex& k) {
  const auto simplices = all_simplices(k);
  DeletedProduct out;
  for (const auto& s : simplices)
    for (const auto& t : simplices) {
      bool disjoint = true;
      for (int v : s)
        if (std::binary_search(t.begin(), t.end(), v)) {
          disjoint = false;
          break;
        }
      if (disjoint) out.cells.push_back({s, t});
    }
  std::sort(out.cells.begin(), out.cells.end());
  return out;
}

}  // namespace pltop
