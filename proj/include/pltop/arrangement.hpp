#pragma once

#include <map>
#include <set>
#include <vector>

#include "pltop/polytope.hpp"

namespace pltop {

struct RefineOptions {
  size_t max_cells = 4096;
};

namespace detail {

// Cutting flats with the geometry they came from: affine hulls of every face
// of every input and of every pairwise intersection. A cell is only cut
// along flats whose source actually touches it, so far-away cells never
// split each other (the hull of an edge extends arbitrarily far).
// Facet hulls alone would miss interior crossings: two crossing segments
// meet in a point that is a facet of neither, but is a pairwise
// intersection.
inline std::map<AffineFlat, std::vector<Polytope>> cut_flats(
    const std::vector<Polytope>& inputs) {
  std::map<AffineFlat, std::vector<Polytope>> flats;
  auto add_faces = [&flats](const Polytope& p) {
    for (const auto& f : faces_of(p)) flats[flat_from_points(f.verts)].push_back(f);
  };
  for (const auto& p : inputs) add_faces(p);
  for (size_t i = 0; i < inputs.size(); ++i)
    for (size_t j = i + 1; j < inputs.size(); ++j) {
      const Polytope meet = intersect_polytopes(inputs[i], inputs[j]);
      if (!meet.empty()) add_faces(meet);
    }
  return flats;
}

}  // namespace detail

// Common refinement of a family of polytopes: closed cells with pairwise
// disjoint relative interiors whose union is the union of the inputs; every
// input is the union of the cells it contains. Cells are cut along every
// relevant flat that traces a hyperplane inside their affine hull, in
// canonical flat order, and identical cells arising from overlapping inputs
// are merged.
inline std::vector<Polytope> refine_arrangement(const std::vector<Polytope>& inputs,
                                                const RefineOptions& opt = {}) {
  if (inputs.empty()) return {};
  const int d = inputs[0].ambient;
  for (const auto& p : inputs) {
    if (p.ambient != d) throw input_error("refine_arrangement: mixed ambient dimensions");
    if (p.empty()) throw input_error("refine_arrangement: empty input cell");
  }
  const auto flats = detail::cut_flats(inputs);
  std::set<Polytope> out;
  size_t total = 0;
  for (const auto& input : inputs) {
    std::vector<Polytope> pieces{input};
    for (const auto& [f, sources] : flats) {
      std::vector<Polytope> next;
      for (auto& x : pieces) {
        const AffineFlat fx = flat_of(x);
        auto trace = intersect_flats(f, fx);
        if (!trace || trace->dim() != fx.dim() - 1) {
          next.push_back(std::move(x));
          continue;
        }
        bool touches = false;
        for (const auto& src : sources)
          if (!intersect_polytopes(src, x).empty()) {
            touches = true;
            break;
          }
        if (!touches) {
          next.push_back(std::move(x));
          continue;
        }
        // First equation of f not implied by Aff(x); its hyperplane meets
        // Aff(x) exactly in the trace.
        const Row* cut = nullptr;
        for (const auto& row : f.eq) {
          Matrix sys = fx.eq;
          sys.push_back(row);
          if (rref(sys) > static_cast<int>(fx.eq.size())) {
            cut = &row;
            break;
          }
        }
        if (!cut) {
          next.push_back(std::move(x));
          continue;
        }
        Row normal(cut->begin(), cut->end() - 1);
        auto [lo, hi] = cut_polytope(x, normal, cut->back());
        // A side that lost dimension is a face of the other; drop it.
        if (!lo.empty() && lo.dim == x.dim) next.push_back(std::move(lo));
        if (!hi.empty() && hi.dim == x.dim) next.push_back(std::move(hi));
        if (next.size() + total > opt.max_cells)
          throw cap_exceeded("refine_arrangement: cell cap exceeded");
      }
      pieces = std::move(next);
    }
    total += pieces.size();
    for (auto& x : pieces) out.insert(std::move(x));
  }
  return {out.begin(), out.end()};
}

}  // namespace pltop
