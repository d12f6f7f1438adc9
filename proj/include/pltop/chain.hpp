#pragma once

#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "pltop/polytope.hpp"

namespace pltop {

// A geometric c-simplex: c+1 affinely independent points kept in canonical
// (lexicographic) order, so simplices compare and hash by value.
struct GeomSimplex {
  std::vector<Point> verts;

  int dim() const { return static_cast<int>(verts.size()) - 1; }
  int ambient() const { return verts.empty() ? 0 : verts[0].dim(); }

  bool operator==(const GeomSimplex& o) const { return verts == o.verts; }
  bool operator<(const GeomSimplex& o) const { return verts < o.verts; }
};

inline GeomSimplex make_simplex(std::vector<Point> verts) {
  if (verts.empty()) throw input_error("simplex needs at least one vertex");
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
    throw input_error("simplex with repeated vertex");
  if (!affinely_independent(verts))
    throw input_error("simplex vertices are affinely dependent");
  return GeomSimplex{std::move(verts)};
}

inline Polytope simplex_polytope(const GeomSimplex& s) {
  return Polytope{s.ambient(), s.dim(), s.verts};
}

// Mod-2 chain: a finite set of c-simplices in R^d. Inserting a simplex twice
// cancels it, so symmetric difference is the chain sum.
struct Chain {
  int dim = -1;
  int ambient = 0;
  std::set<GeomSimplex> simplices;

  bool empty() const { return simplices.empty(); }
  size_t size() const { return simplices.size(); }

  bool operator==(const Chain& o) const {
    return dim == o.dim && ambient == o.ambient && simplices == o.simplices;
  }

  void toggle(GeomSimplex s) {
    if (s.dim() != dim) throw input_error("chain: simplex of wrong dimension");
    if (s.ambient() != ambient) throw input_error("chain: simplex of wrong ambient");
    auto it = simplices.find(s);
    if (it != simplices.end())
      simplices.erase(it);
    else
      simplices.insert(std::move(s));
  }
};

inline Chain make_chain(int dim, int ambient) { return Chain{dim, ambient, {}}; }

inline Chain chain_of(int dim, int ambient, std::vector<GeomSimplex> ss) {
  Chain c = make_chain(dim, ambient);
  for (auto& s : ss) c.toggle(std::move(s));
  return c;
}

inline Chain sym_diff(const Chain& a, const Chain& b) {
  if (a.dim != b.dim || a.ambient != b.ambient)
    throw input_error("chain sum: dimension mismatch");
  Chain r = a;
  for (const auto& s : b.simplices) r.toggle(s);
  return r;
}

// V(C): the set of vertices of the chain's simplices.
inline std::set<Point> vertices_of(const Chain& c) {
  std::set<Point> out;
  for (const auto& s : c.simplices) out.insert(s.verts.begin(), s.verts.end());
  return out;
}

// The (c-1)-simplices that are faces of an odd number of chain simplices,
// matched by exact vertex-set equality. The boundary of a 0-chain is the
// empty (-1)-chain.
inline Chain boundary(const Chain& c) {
  Chain out = make_chain(c.dim - 1, c.ambient);
  if (c.dim <= 0) return out;
  for (const auto& s : c.simplices) {
    for (size_t drop = 0; drop < s.verts.size(); ++drop) {
      std::vector<Point> face;
      for (size_t i = 0; i < s.verts.size(); ++i)
        if (i != drop) face.push_back(s.verts[i]);
      out.toggle(GeomSimplex{std::move(face)});  // dropping keeps sorted order
    }
  }
  return out;
}

inline bool is_cycle(const Chain& c) { return boundary(c).empty(); }

// Pairwise intersections are common faces: for simplices the intersection
// must equal the convex hull of the shared vertices (any vertex subset of a
// simplex spans a face of it).
inline bool is_simplicial(const Chain& c,
                          std::pair<GeomSimplex, GeomSimplex>* witness = nullptr) {
  std::vector<const GeomSimplex*> ss;
  for (const auto& s : c.simplices) ss.push_back(&s);
  for (size_t i = 0; i < ss.size(); ++i)
    for (size_t j = i + 1; j < ss.size(); ++j) {
      const Polytope meet = intersect_polytopes(simplex_polytope(*ss[i]),
                                                simplex_polytope(*ss[j]));
      if (meet.empty()) continue;
      std::vector<Point> shared;
      std::set_intersection(ss[i]->verts.begin(), ss[i]->verts.end(),
                            ss[j]->verts.begin(), ss[j]->verts.end(),
                            std::back_inserter(shared));
      if (meet.verts != shared) {
        if (witness) *witness = {*ss[i], *ss[j]};
        return false;
      }
    }
  return true;
}

inline std::string simplex_str(const GeomSimplex& s) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < s.verts.size(); ++i) os << (i ? " " : "") << point_str(s.verts[i]);
  os << "]";
  return os.str();
}

}  // namespace pltop
