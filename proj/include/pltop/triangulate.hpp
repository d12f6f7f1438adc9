#pragma once

#include <map>
#include <vector>

#include "pltop/chain.hpp"
#include "pltop/polytope.hpp"

namespace pltop {

namespace detail {

// Supporting functional of a boundary face F of the current hull, oriented
// so the triangulated side is negative. `inside` is a vertex of the unique
// top simplex containing F that is not in F.
struct FaceFunctional {
  Row normal;
  Rational level;  // value on F
};

inline FaceFunctional face_functional(const std::vector<Point>& face, const Point& inside) {
  const int d = face[0].dim();
  Matrix dirs;
  for (size_t i = 1; i < face.size(); ++i) dirs.push_back((face[i] - face[0]).x);
  std::vector<Row> candidates;
  if (dirs.empty()) {
    for (int i = 0; i < d; ++i) {
      Row e(static_cast<size_t>(d), Rational(0));
      e[static_cast<size_t>(i)] = 1;
      candidates.push_back(std::move(e));
    }
  } else {
    candidates = nullspace(std::move(dirs));
  }
  for (const auto& n : candidates) {
    Rational w = dot(n, inside) - dot(n, face[0]);
    if (w == 0) continue;
    Row normal = n;
    if (w > 0)
      for (auto& c : normal) c = -c;
    Rational level = dot(normal, face[0]);
    return FaceFunctional{std::move(normal), std::move(level)};
  }
  throw input_error("degenerate simplex in placing triangulation");
}

}  // namespace detail

// Incremental placing triangulation: vertices are inserted in the given
// order; a vertex inside the current affine hull is joined to every strictly
// visible boundary face, a vertex outside it is joined to every top simplex.
// The insertion order must be a permutation of the polytope's vertices.
// Restricting the result to a face of p gives the placing triangulation of
// that face under the induced order, which is what makes triangulations of
// adjacent cells agree on shared faces.
inline std::vector<GeomSimplex> placing_triangulation(const Polytope& p,
                                                      const std::vector<Point>& order) {
  if (p.empty()) return {};
  {
    std::vector<Point> check = order;
    std::sort(check.begin(), check.end());
    if (check != p.verts)
      throw input_error("placing order is not a permutation of the vertices");
  }
  std::vector<std::vector<Point>> tops;  // sorted vertex tuples
  std::vector<Point> inserted;
  for (const auto& v : order) {
    if (inserted.empty()) {
      tops.push_back({v});
      inserted.push_back(v);
      continue;
    }
    const AffineFlat flat = flat_from_points(inserted);
    std::vector<std::vector<Point>> joins;
    if (!flat.contains(v)) {
      for (auto& s : tops) {
        auto j = s;
        j.push_back(v);
        std::sort(j.begin(), j.end());
        joins.push_back(std::move(j));
      }
      tops = std::move(joins);
    } else {
      // Boundary faces appear in exactly one top simplex.
      std::map<std::vector<Point>, std::pair<int, Point>> faces;  // face -> count, inside pt
      for (const auto& s : tops) {
        for (size_t drop = 0; drop < s.size(); ++drop) {
          std::vector<Point> face;
          for (size_t i = 0; i < s.size(); ++i)
            if (i != drop) face.push_back(s[i]);
          auto [it, fresh] = faces.try_emplace(std::move(face), 0, s[drop]);
          it->second.first++;
        }
      }
      for (const auto& [face, info] : faces) {
        if (info.first != 1) continue;
        const auto fn = detail::face_functional(face, info.second);
        if (dot(fn.normal, v) > fn.level) {
          auto j = face;
          j.push_back(v);
          std::sort(j.begin(), j.end());
          joins.push_back(std::move(j));
        }
      }
      tops.insert(tops.end(), joins.begin(), joins.end());
    }
    inserted.push_back(v);
  }
  std::vector<GeomSimplex> out;
  out.reserve(tops.size());
  for (auto& t : tops) out.push_back(GeomSimplex{std::move(t)});
  std::sort(out.begin(), out.end());
  return out;
}

// Canonical order: lexicographic on coordinates.
inline std::vector<GeomSimplex> placing_triangulation(const Polytope& p) {
  return placing_triangulation(p, p.verts);
}

}  // namespace pltop
