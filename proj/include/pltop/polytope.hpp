#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "pltop/linalg.hpp"

namespace pltop {

// Closed halfspace  normal . x <= offset.
struct Halfspace {
  Row normal;
  Rational offset;
  bool operator==(const Halfspace& o) const = default;
  bool operator<(const Halfspace& o) const {
    if (normal != o.normal) return normal < o.normal;
    return offset < o.offset;
  }
};

inline Rational eval(const Halfspace& h, const Point& p) { return dot(h.normal, p); }

// A bounded convex polytope of any dimension, stored by its extreme points
// (sorted). An empty vertex list is the empty polytope (dim -1).
struct Polytope {
  int ambient = 0;
  int dim = -1;
  std::vector<Point> verts;

  bool empty() const { return verts.empty(); }
  bool operator==(const Polytope& o) const {
    return ambient == o.ambient && verts == o.verts;
  }
  bool operator<(const Polytope& o) const {
    if (ambient != o.ambient) return ambient < o.ambient;
    return verts < o.verts;
  }
};

inline Polytope empty_polytope(int ambient) { return Polytope{ambient, -1, {}}; }

// Internal fast path: callers guarantee `verts` are exactly the extreme
// points. Sorts and fills in the affine dimension.
inline Polytope polytope_from_vertices(int ambient, std::vector<Point> verts) {
  if (verts.empty()) return empty_polytope(ambient);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  const int dim = affine_dim(verts);
  return Polytope{ambient, dim, std::move(verts)};
}

inline AffineFlat flat_of(const Polytope& p) {
  if (p.empty()) throw input_error("flat_of empty polytope");
  return flat_from_points(p.verts);
}

namespace detail {

// Canonical representative of a functional restricted to a flat: kill the
// components that the flat's equations determine, then scale the first
// nonzero coefficient to +-1. Nullopt when constant on the flat.
inline std::optional<Halfspace> canonical_on_flat(const AffineFlat& flat, Row normal,
                                                  Rational offset) {
  const int d = flat.ambient;
  for (const auto& row : flat.eq) {
    int pc = -1;
    for (int i = 0; i < d; ++i)
      if (row[static_cast<size_t>(i)] != 0) {
        pc = i;
        break;
      }
    const Rational coeff = normal[static_cast<size_t>(pc)];
    if (coeff == 0) continue;
    for (int i = 0; i < d; ++i) normal[static_cast<size_t>(i)] -= coeff * row[static_cast<size_t>(i)];
    offset -= coeff * row[static_cast<size_t>(d)];
  }
  int first = -1;
  for (int i = 0; i < d; ++i)
    if (normal[static_cast<size_t>(i)] != 0) {
      first = i;
      break;
    }
  if (first < 0) return std::nullopt;
  Rational scale = abs(normal[static_cast<size_t>(first)]);
  for (auto& c : normal) c /= scale;
  offset /= scale;
  return Halfspace{std::move(normal), std::move(offset)};
}

}  // namespace detail

// Facet-supporting halfspaces of p, canonicalized relative to Aff(p).
// Brute force: every dim(p)-subset of vertices that spans a hyperplane of
// Aff(p) with all remaining vertices on one side contributes a facet.
inline std::vector<Halfspace> facets_of(const Polytope& p) {
  if (p.dim <= 0) return {};
  const AffineFlat flat = flat_of(p);
  const int n = static_cast<int>(p.verts.size());
  std::set<Halfspace> out;
  std::vector<int> idx(static_cast<size_t>(p.dim));
  // Enumerate increasing index tuples of size p.dim.
  for (int i = 0; i < p.dim; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    std::vector<Point> sub;
    for (int i : idx) sub.push_back(p.verts[static_cast<size_t>(i)]);
    if (affinely_independent(sub)) {
      Matrix dirs;
      for (size_t i = 1; i < sub.size(); ++i) dirs.push_back((sub[i] - sub[0]).x);
      std::vector<Row> candidates;
      if (dirs.empty()) {
        for (int i = 0; i < p.ambient; ++i) {  // single point: all functionals
          Row e(static_cast<size_t>(p.ambient), Rational(0));
          e[static_cast<size_t>(i)] = 1;
          candidates.push_back(std::move(e));
        }
      } else {
        candidates = nullspace(std::move(dirs));
      }
      for (const auto& n0 : candidates) {
        auto h = detail::canonical_on_flat(flat, n0, dot(n0, sub[0]));
        if (!h) continue;
        // Orient so the polytope lies in the <= side; reject mixed signs.
        int sign = 0;
        bool facet = true;
        for (const auto& v : p.verts) {
          const Rational val = eval(*h, v) - h->offset;
          if (val == 0) continue;
          const int s = val > 0 ? 1 : -1;
          if (sign == 0)
            sign = s;
          else if (sign != s) {
            facet = false;
            break;
          }
        }
        if (!facet || sign == 0) continue;
        if (sign > 0) {
          for (auto& c : h->normal) c = -c;
          h->offset = -h->offset;
        }
        out.insert(std::move(*h));
        break;  // restrictions of other basis functionals are proportional
      }
    }
    // next combination
    int k = p.dim - 1;
    while (k >= 0 && idx[static_cast<size_t>(k)] == n - p.dim + k) --k;
    if (k < 0) break;
    ++idx[static_cast<size_t>(k)];
    for (int j = k + 1; j < p.dim; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return {out.begin(), out.end()};
}

inline bool contains(const Polytope& p, const Point& x) {
  if (p.empty()) return false;
  if (!flat_of(p).contains(x)) return false;
  for (const auto& h : facets_of(p))
    if (eval(h, x) > h.offset) return false;
  return true;
}

inline Point centroid(const Polytope& p) {
  if (p.empty()) throw input_error("centroid of empty polytope");
  Point c(std::vector<Rational>(static_cast<size_t>(p.ambient), Rational(0)));
  for (const auto& v : p.verts) c = c + v;
  return rat(1, static_cast<long>(p.verts.size())) * c;
}

// x lies in the union of proper faces of p (empty for a 0-polytope).
inline bool boundary_contains(const Polytope& p, const Point& x) {
  if (p.empty() || p.dim == 0) return false;
  if (!flat_of(p).contains(x)) return false;
  bool tight = false;
  for (const auto& h : facets_of(p)) {
    const Rational v = eval(h, x);
    if (v > h.offset) return false;
    if (v == h.offset) tight = true;
  }
  return tight;
}

// x in the relative interior of p.
inline bool relint_contains(const Polytope& p, const Point& x) {
  if (p.empty()) return false;
  if (!flat_of(p).contains(x)) return false;
  for (const auto& h : facets_of(p))
    if (eval(h, x) >= h.offset) return false;
  return p.dim > 0 || p.verts[0] == x;
}

// All vertices (hence all) of `inner` lie in `outer`.
inline bool polytope_subset(const Polytope& inner, const Polytope& outer) {
  if (inner.empty()) return true;
  if (outer.empty()) return false;
  const AffineFlat flat = flat_of(outer);
  const auto hs = facets_of(outer);
  for (const auto& v : inner.verts) {
    if (!flat.contains(v)) return false;
    for (const auto& h : hs)
      if (eval(h, v) > h.offset) return false;
  }
  return true;
}

// inner subset of the boundary of outer. For convex inner it is enough that
// inner lies in outer and the centroid of inner sits on some facet plane.
inline bool subset_of_boundary(const Polytope& inner, const Polytope& outer) {
  if (inner.empty()) return true;
  if (outer.dim <= 0) return false;
  if (!polytope_subset(inner, outer)) return false;
  const Point c = centroid(inner);
  for (const auto& h : facets_of(outer))
    if (eval(h, c) == h.offset) return true;
  return false;
}

// Brute-force vertex enumeration of { x in flat : all halfspaces }:
// every flat.dim()-subset of inequalities turned tight that pins a unique
// feasible point yields a vertex, and every vertex arises this way.
inline std::vector<Point> hrep_vertices(const AffineFlat& flat,
                                        const std::vector<Halfspace>& hs) {
  const int d = flat.ambient;
  const int g = flat.dim();
  std::vector<Point> out;
  auto feasible = [&](const Point& x) {
    for (const auto& h : hs)
      if (eval(h, x) > h.offset) return false;
    return true;
  };
  if (g == 0) {
    Point x = flat_point(flat);
    if (feasible(x)) out.push_back(std::move(x));
    return out;
  }
  const int m = static_cast<int>(hs.size());
  if (m < g) return out;  // unbounded or empty; inputs are bounded, so empty
  std::vector<int> idx(static_cast<size_t>(g));
  for (int i = 0; i < g; ++i) idx[static_cast<size_t>(i)] = i;
  std::set<Point> seen;
  while (true) {
    Matrix sys = flat.eq;
    for (int i : idx) {
      Row row = hs[static_cast<size_t>(i)].normal;
      row.push_back(hs[static_cast<size_t>(i)].offset);
      sys.push_back(std::move(row));
    }
    auto f = flat_from_equations(d, std::move(sys));
    if (f && f->dim() == 0) {
      Point x = flat_point(*f);
      if (feasible(x)) seen.insert(std::move(x));
    }
    int k = g - 1;
    while (k >= 0 && idx[static_cast<size_t>(k)] == m - g + k) --k;
    if (k < 0) break;
    ++idx[static_cast<size_t>(k)];
    for (int j = k + 1; j < g; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return {seen.begin(), seen.end()};
}

// Exact intersection of two bounded polytopes; empty() result when disjoint.
inline Polytope intersect_polytopes(const Polytope& a, const Polytope& b) {
  if (a.ambient != b.ambient)
    throw input_error("intersect_polytopes: ambient dimension mismatch");
  if (a.empty() || b.empty()) return empty_polytope(a.ambient);
  auto meet = intersect_flats(flat_of(a), flat_of(b));
  if (!meet) return empty_polytope(a.ambient);
  std::vector<Halfspace> hs;
  std::set<Halfspace> dedupe;
  for (const auto* p : {&a, &b})
    for (const auto& h : facets_of(*p)) {
      auto c = detail::canonical_on_flat(*meet, h.normal, h.offset);
      if (!c) {
        // Constant on the meet flat: either vacuous or excludes it entirely.
        Point probe = meet->dim() == 0 ? flat_point(*meet) : Point{};
        if (meet->dim() == 0) {
          if (eval(h, probe) > h.offset) return empty_polytope(a.ambient);
          continue;
        }
        // Evaluate on any point of the flat (solve once below via vertices);
        // simplest: keep the raw inequality, hrep_vertices checks it anyway.
        hs.push_back(h);
        continue;
      }
      if (dedupe.insert(*c).second) hs.push_back(*c);
    }
  return polytope_from_vertices(a.ambient, hrep_vertices(*meet, hs));
}

// The two closed pieces of p on either side of the hyperplane n.x = c.
inline std::pair<Polytope, Polytope> cut_polytope(const Polytope& p, const Row& n,
                                                  const Rational& c) {
  if (p.empty()) return {p, p};
  const AffineFlat flat = flat_of(p);
  auto hs = facets_of(p);
  auto le = hs;
  le.push_back(Halfspace{n, c});
  Row neg = n;
  for (auto& x : neg) x = -x;
  auto ge = hs;
  ge.push_back(Halfspace{std::move(neg), -c});
  return {polytope_from_vertices(p.ambient, hrep_vertices(flat, le)),
          polytope_from_vertices(p.ambient, hrep_vertices(flat, ge))};
}

// Extreme points of an arbitrary finite point set: facets are found from all
// points, then the vertices are recovered from the H-representation.
inline Polytope hull_of(int ambient, std::vector<Point> pts) {
  if (pts.empty()) return empty_polytope(ambient);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Polytope rough{ambient, affine_dim(pts), std::move(pts)};
  if (rough.dim == 0) return rough;
  return polytope_from_vertices(ambient, hrep_vertices(flat_of(rough), facets_of(rough)));
}

// s is a face of t (possibly t itself): the facets of t tight on every
// vertex of s must cut out exactly s's vertex set.
inline bool is_face_of(const Polytope& s, const Polytope& t) {
  if (s.empty() || t.empty()) return false;
  std::set<Point> tverts(t.verts.begin(), t.verts.end());
  for (const auto& v : s.verts)
    if (!tverts.count(v)) return false;
  std::vector<Halfspace> tight;
  for (const auto& h : facets_of(t)) {
    bool all = true;
    for (const auto& v : s.verts)
      if (eval(h, v) != h.offset) {
        all = false;
        break;
      }
    if (all) tight.push_back(h);
  }
  std::vector<Point> cut;
  for (const auto& v : t.verts) {
    bool all = true;
    for (const auto& h : tight)
      if (eval(h, v) != h.offset) {
        all = false;
        break;
      }
    if (all) cut.push_back(v);
  }
  return cut == s.verts;
}

// Every face of p (p itself included, the empty face excluded), deduplicated.
inline std::vector<Polytope> faces_of(const Polytope& p) {
  std::vector<Polytope> out;
  if (p.empty()) return out;
  std::set<std::vector<Point>> seen;
  std::vector<Polytope> queue{p};
  seen.insert(p.verts);
  while (!queue.empty()) {
    Polytope cur = std::move(queue.back());
    queue.pop_back();
    for (const auto& h : facets_of(cur)) {
      std::vector<Point> fverts;
      for (const auto& v : cur.verts)
        if (eval(h, v) == h.offset) fverts.push_back(v);
      Polytope face = polytope_from_vertices(cur.ambient, std::move(fverts));
      if (seen.insert(face.verts).second) queue.push_back(std::move(face));
    }
    out.push_back(std::move(cur));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pltop
