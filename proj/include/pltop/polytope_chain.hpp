#pragma once

#include <utility>
#include <vector>

#include "pltop/arrangement.hpp"
#include "pltop/chain.hpp"
#include "pltop/triangulate.hpp"

namespace pltop {

// A finite set of c-polytopes in R^d (list semantics; duplicates are caught
// by the verifier as overlapping cells).
struct PolytopeChain {
  int dim = -1;
  int ambient = 0;
  std::vector<Polytope> cells;
};

inline PolytopeChain make_polytope_chain(int dim, int ambient,
                                         std::vector<Polytope> cells) {
  for (const auto& c : cells) {
    if (c.ambient != ambient) throw input_error("polytope chain: ambient mismatch");
    if (c.dim != dim) throw input_error("polytope chain: cell of wrong dimension");
  }
  return PolytopeChain{dim, ambient, std::move(cells)};
}

// ([P:s], [P:s]^inc) mod 2: how often s occurs as a face of a cell, and how
// often s is contained in the boundary of a cell.
inline std::pair<int, int> incidence_counts(const PolytopeChain& P, const Polytope& s) {
  if (s.empty() || s.dim != P.dim - 1)
    throw input_error("incidence_counts: s must be a (c-1)-polytope");
  int face = 0, inc = 0;
  for (const auto& t : P.cells) {
    face ^= is_face_of(s, t) ? 1 : 0;
    inc ^= subset_of_boundary(s, t) ? 1 : 0;
  }
  return {face, inc};
}

struct LemmaEqOutcome {
  enum class Status { cycle, hyp1_violation, hyp2_violation, refinement_failure };
  Status status = Status::cycle;
  Chain cycle;                                   // Status::cycle
  std::pair<Polytope, Polytope> offending_pair;  // hyp1 / refinement failure
  Polytope offending_cell;                       // hyp2
  std::string detail;

  bool ok() const { return status == Status::cycle; }
};

// Verifier/extractor for "the union of P is the support of a simplicial
// c-cycle": checks the two hypotheses
//   1. pairwise intersections have dimension <= c-1 and lie in both
//      boundaries,
//   2. [P:s]^inc = 0 for every (c-1)-polytope s,
// and on success produces the cycle by refining the cells into a common
// arrangement and triangulating each piece with the canonical placing order.
// Hypothesis 2 is decided on the finite set of arrangement cells of the cell
// boundaries: any s with odd incidence contains such an arrangement cell
// with odd incidence, so the finite check is equivalent.
inline LemmaEqOutcome lemma_eq_cycle(const PolytopeChain& P, const RefineOptions& opt = {}) {
  LemmaEqOutcome out;
  // Hypothesis 1.
  for (size_t i = 0; i < P.cells.size(); ++i)
    for (size_t j = i + 1; j < P.cells.size(); ++j) {
      const Polytope meet = intersect_polytopes(P.cells[i], P.cells[j]);
      if (meet.empty()) continue;
      if (meet.dim > P.dim - 1 || !subset_of_boundary(meet, P.cells[i]) ||
          !subset_of_boundary(meet, P.cells[j])) {
        out.status = LemmaEqOutcome::Status::hyp1_violation;
        out.offending_pair = {P.cells[i], P.cells[j]};
        out.detail = "cells intersect outside their boundaries";
        return out;
      }
    }
  // Hypothesis 2 on arrangement cells of the boundaries.
  if (P.dim >= 1) {
    std::set<Polytope> facet_polys;
    for (const auto& t : P.cells)
      for (const auto& f : faces_of(t))
        if (f.dim == P.dim - 1) facet_polys.insert(f);
    const std::vector<Polytope> facet_list(facet_polys.begin(), facet_polys.end());
    for (const auto& cell : refine_arrangement(facet_list, opt)) {
      if (cell.dim != P.dim - 1) continue;
      int inc = 0;
      for (const auto& t : P.cells) inc ^= subset_of_boundary(cell, t) ? 1 : 0;
      if (inc) {
        out.status = LemmaEqOutcome::Status::hyp2_violation;
        out.offending_cell = cell;
        out.detail = "odd boundary incidence";
        return out;
      }
    }
  }
  // Construct the simplicial cycle. Under hypothesis 1 every full-dimensional
  // arrangement piece lies in exactly one cell, so the pieces triangulate the
  // union with multiplicity one.
  Chain chain = make_chain(P.dim, P.ambient);
  for (const auto& piece : refine_arrangement(P.cells, opt)) {
    if (piece.dim != P.dim) continue;
    for (auto& s : placing_triangulation(piece)) chain.toggle(std::move(s));
  }
  std::pair<GeomSimplex, GeomSimplex> wit;
  if (!is_simplicial(chain, &wit)) {
    out.status = LemmaEqOutcome::Status::refinement_failure;
    out.offending_pair = {simplex_polytope(wit.first), simplex_polytope(wit.second)};
    out.detail = "refined pieces do not meet face-to-face";
    return out;
  }
  const Chain bd = boundary(chain);
  if (!bd.empty()) {
    out.status = LemmaEqOutcome::Status::hyp2_violation;
    out.offending_cell = simplex_polytope(*bd.simplices.begin());
    out.detail = "constructed chain has nonempty boundary";
    return out;
  }
  out.cycle = std::move(chain);
  return out;
}

}  // namespace pltop
