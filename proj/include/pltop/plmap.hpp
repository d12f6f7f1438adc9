#pragma once

#include <optional>
#include <sstream>
#include <vector>

#include "pltop/complex.hpp"
#include "pltop/polytope_chain.hpp"
#include "pltop/predicates.hpp"

namespace pltop {

// A PL map determined by a realized domain triangulation and one image point
// per domain vertex; affine extension over each domain simplex. The domain
// must be a closed n-manifold triangulation: uniform facet dimension,
// nondegenerate realized facets, every (n-1)-face in exactly two facets.
struct PLMap {
  AbstractComplex domain;  // realization required
  std::vector<Point> images;
  int target_dim = 0;

  int n() const { return domain.dim(); }
  int m() const { return (*domain.realization)[0].dim(); }
};

inline PLMap make_plmap(AbstractComplex domain, std::vector<Point> images, int target_dim) {
  if (!domain.realization) throw input_error("plmap: domain needs a realization");
  if (domain.realization->size() != static_cast<size_t>(domain.vertex_count))
    throw input_error("plmap: realization size mismatch");
  if (images.size() != static_cast<size_t>(domain.vertex_count))
    throw input_error("plmap: one image point per domain vertex required");
  if (domain.facets.empty()) throw input_error("plmap: empty domain");
  const int n = domain.dim();
  const int md = (*domain.realization)[0].dim();
  for (const auto& p : *domain.realization)
    if (p.dim() != md) throw input_error("plmap: mixed realization dimensions");
  for (const auto& p : images)
    if (p.dim() != target_dim) throw input_error("plmap: image point of wrong dimension");
  std::map<Simplex, int> ridge_count;
  for (const auto& f : domain.facets) {
    if (static_cast<int>(f.size()) - 1 != n)
      throw input_error("plmap: domain facets must have uniform dimension");
    std::vector<Point> realized;
    for (int v : f) realized.push_back((*domain.realization)[static_cast<size_t>(v)]);
    if (!affinely_independent(realized))
      throw input_error("plmap: degenerate realized facet");
    for (size_t drop = 0; drop < f.size(); ++drop) {
      Simplex r;
      for (size_t i = 0; i < f.size(); ++i)
        if (i != drop) r.push_back(f[i]);
      ridge_count[r]++;
    }
  }
  if (n >= 1)
    for (const auto& [r, cnt] : ridge_count)
      if (cnt != 2) throw input_error("plmap: domain is not a closed manifold");
  return PLMap{std::move(domain), std::move(images), target_dim};
}

namespace detail {

inline Polytope realized_facet(const PLMap& f, const Simplex& facet) {
  std::vector<Point> pts;
  for (int v : facet) pts.push_back((*f.domain.realization)[static_cast<size_t>(v)]);
  return polytope_from_vertices(f.m(), std::move(pts));
}

inline std::vector<Point> image_points(const PLMap& f, const Simplex& s) {
  std::vector<Point> pts;
  for (int v : s) pts.push_back(f.images[static_cast<size_t>(v)]);
  return pts;
}

// Barycentric coordinates of x in the realized simplex, if x lies in it.
inline std::optional<std::vector<Rational>> barycentric(const std::vector<Point>& verts,
                                                        const Point& x) {
  const int d = x.dim();
  Matrix sys;  // rows: one per ambient coordinate plus the affine constraint
  for (int r = 0; r < d; ++r) {
    Row row;
    for (const auto& v : verts) row.push_back(v[r]);
    row.push_back(x[r]);
    sys.push_back(std::move(row));
  }
  Row ones(verts.size(), Rational(1));
  ones.push_back(Rational(1));
  sys.push_back(std::move(ones));
  auto flat = flat_from_equations(static_cast<int>(verts.size()), std::move(sys));
  if (!flat || flat->dim() != 0) return std::nullopt;
  Point lambda = flat_point(*flat);
  for (int i = 0; i < lambda.dim(); ++i)
    if (lambda[i] < 0) return std::nullopt;
  return lambda.x;
}

}  // namespace detail

// Affine extension value at a point of the realized domain; consistent on
// shared faces because the barycentric weights of a face point are supported
// on the face.
inline Point evaluate(const PLMap& f, const Point& x) {
  if (x.dim() != f.m()) throw input_error("evaluate: point of wrong ambient dimension");
  for (const auto& facet : f.domain.facets) {
    std::vector<Point> realized;
    for (int v : facet) realized.push_back((*f.domain.realization)[static_cast<size_t>(v)]);
    auto lambda = detail::barycentric(realized, x);
    if (!lambda) continue;
    Point out(std::vector<Rational>(static_cast<size_t>(f.target_dim), Rational(0)));
    for (size_t i = 0; i < facet.size(); ++i)
      out = out + (*lambda)[i] * f.images[static_cast<size_t>(facet[i])];
    return out;
  }
  throw input_error("evaluate: point outside the realized domain");
}

// The image chain: one target simplex per domain facet, mod 2. Degenerate
// image simplices are a degeneracy of the map, not of the machinery.
inline Chain image_chain(const PLMap& f) {
  Chain c = make_chain(f.n(), f.target_dim);
  for (const auto& facet : f.domain.facets) {
    auto pts = detail::image_points(f, facet);
    if (!affinely_independent(pts))
      throw degeneracy_error("image simplex is degenerate");
    c.toggle(make_simplex(std::move(pts)));
  }
  return c;
}

// Image of a marked subcomplex.
inline Chain marked_chain(const PLMap& f, const std::string& mark) {
  auto it = f.domain.marks.find(mark);
  if (it == f.domain.marks.end()) throw input_error("unknown mark '" + mark + "'");
  if (it->second.empty()) throw input_error("empty mark '" + mark + "'");
  const int dim = static_cast<int>(it->second.begin()->size()) - 1;
  Chain c = make_chain(dim, f.target_dim);
  for (const auto& s : it->second) {
    auto pts = detail::image_points(f, s);
    if (!affinely_independent(pts))
      throw degeneracy_error("image simplex of mark '" + mark + "' is degenerate");
    c.toggle(make_simplex(std::move(pts)));
  }
  return c;
}

enum class PositionKind { general, strong };

struct PositionReport {
  PositionKind kind = PositionKind::general;
  bool holds = false;
  PositionWitness witness;  // meaningful iff !holds
  std::string note;
};

// The distinct vertex images of the domain triangulation.
inline std::vector<Point> vertex_images(const PLMap& f) {
  std::set<Point> w(f.images.begin(), f.images.end());
  return {w.begin(), w.end()};
}

// Position of a point set W with respect to a chain:
//  strong: W and V(C) are disjoint and their union is in strong general
//          position;
//  general: per simplex, W avoids its vertices and the vertices together
//           with W are in general position.
inline PositionReport position_wrt_chain(const std::vector<Point>& w, const Chain& c,
                                         PositionKind kind,
                                         int cap = kDefaultStrongGpCap) {
  PositionReport rep;
  rep.kind = kind;
  const auto vc = vertices_of(c);
  if (kind == PositionKind::strong) {
    for (const auto& p : w)
      if (vc.count(p)) {
        rep.holds = false;
        rep.witness.subsets = {{p}};
        rep.note = "point coincides with a chain vertex";
        return rep;
      }
    std::vector<Point> joint = w;
    joint.insert(joint.end(), vc.begin(), vc.end());
    rep.holds = in_strong_general_position(joint, c.ambient, &rep.witness, cap);
    if (!rep.holds) rep.note = "strong general position fails";
    return rep;
  }
  for (const auto& s : c.simplices) {
    for (const auto& p : w)
      for (const auto& v : s.verts)
        if (p == v) {
          rep.holds = false;
          rep.witness.subsets = {{p}};
          rep.note = "point coincides with a simplex vertex";
          return rep;
        }
    std::vector<Point> joint = s.verts;
    joint.insert(joint.end(), w.begin(), w.end());
    if (!in_general_position(joint, c.ambient, &rep.witness)) {
      rep.holds = false;
      rep.note = "general position fails for a simplex";
      return rep;
    }
  }
  rep.holds = true;
  return rep;
}

inline PositionReport position_wrt_chain(const PLMap& f, const Chain& c, PositionKind kind,
                                         int cap = kDefaultStrongGpCap) {
  if (f.target_dim != c.ambient)
    throw input_error("position_wrt_chain: chain lives in a different space");
  return position_wrt_chain(vertex_images(f), c, kind, cap);
}

struct ResimplOutcome {
  enum class Status { ok, precondition_failed, postcondition_failed };
  Status status = Status::ok;
  Chain chain;            // ok
  PositionReport report;  // the failing position report otherwise
  std::string detail;

  bool ok() const { return status == Status::ok; }
};

// Rebuild a chain as a simplicial chain with the same mod-2 support, keeping
// the point set U in general position with respect to the result. Requires
// U in strong general position with respect to C. The construction is
// arrangement refinement plus placing triangulation; whether it always
// achieves the general position postcondition is open, so a postcondition
// failure is a reportable outcome, never a silent one.
inline ResimplOutcome resimplicialize(const Chain& c, const std::vector<Point>& u,
                                      int cap = kDefaultStrongGpCap,
                                      const RefineOptions& opt = {}) {
  ResimplOutcome out;
  out.report = position_wrt_chain(u, c, PositionKind::strong, cap);
  if (!out.report.holds) {
    out.status = ResimplOutcome::Status::precondition_failed;
    out.detail = "U is not in strong general position with respect to C";
    return out;
  }
  // Fast path: nothing to rebuild.
  if (is_simplicial(c) && position_wrt_chain(u, c, PositionKind::general).holds) {
    out.chain = c;
    return out;
  }
  std::vector<Polytope> cells;
  for (const auto& s : c.simplices) cells.push_back(simplex_polytope(s));
  Chain rebuilt = make_chain(c.dim, c.ambient);
  for (const auto& piece : refine_arrangement(cells, opt)) {
    if (piece.dim != c.dim) continue;
    int multiplicity = 0;
    for (const auto& cell : cells) multiplicity ^= polytope_subset(piece, cell) ? 1 : 0;
    if (!multiplicity) continue;
    for (auto& s : placing_triangulation(piece)) rebuilt.toggle(std::move(s));
  }
  if (!is_simplicial(rebuilt)) {
    out.status = ResimplOutcome::Status::postcondition_failed;
    out.detail = "refined chain is not simplicial";
    return out;
  }
  out.report = position_wrt_chain(u, rebuilt, PositionKind::general);
  if (!out.report.holds) {
    out.status = ResimplOutcome::Status::postcondition_failed;
    out.detail = "U is not in general position with respect to the rebuilt chain";
    return out;
  }
  out.chain = std::move(rebuilt);
  return out;
}

namespace detail {

// gamma cap f^{-1}(sigma) in barycentric chart coordinates of the facet,
// vertex-enumerated and mapped back to the realized domain.
inline Polytope facet_preimage_piece(const PLMap& f, const Simplex& facet,
                                     const GeomSimplex& sigma) {
  const int n = f.n();
  std::vector<Point> realized, imaged;
  for (int v : facet) {
    realized.push_back((*f.domain.realization)[static_cast<size_t>(v)]);
    imaged.push_back(f.images[static_cast<size_t>(v)]);
  }
  // chart: t in R^n, lambda_0 = 1 - sum t, x = r0 + sum t_i (r_i - r0),
  // f(x) = w0 + sum t_i (w_i - w0)
  const Polytope sp = simplex_polytope(sigma);
  const AffineFlat sflat = flat_of(sp);
  Matrix eqs;
  for (const auto& row : sflat.eq) {
    // row . f(t) = rhs  ->  sum_i (row . (w_i - w0)) t_i = rhs - row . w0
    Row r;
    Rational base = 0;
    for (int j = 0; j < f.target_dim; ++j) base += row[static_cast<size_t>(j)] * imaged[0][j];
    for (int i = 1; i <= n; ++i) {
      Rational coeff = 0;
      for (int j = 0; j < f.target_dim; ++j)
        coeff += row[static_cast<size_t>(j)] * (imaged[static_cast<size_t>(i)][j] - imaged[0][j]);
      r.push_back(coeff);
    }
    r.push_back(row[static_cast<size_t>(f.target_dim)] - base);
    eqs.push_back(std::move(r));
  }
  auto chart_flat = flat_from_equations(n, std::move(eqs));
  if (!chart_flat) return empty_polytope(f.m());
  std::vector<Halfspace> hs;
  for (const auto& h : facets_of(sp)) {
    Row r;
    Rational base = 0;
    for (int j = 0; j < f.target_dim; ++j) base += h.normal[static_cast<size_t>(j)] * imaged[0][j];
    for (int i = 1; i <= n; ++i) {
      Rational coeff = 0;
      for (int j = 0; j < f.target_dim; ++j)
        coeff += h.normal[static_cast<size_t>(j)] * (imaged[static_cast<size_t>(i)][j] - imaged[0][j]);
      r.push_back(coeff);
    }
    hs.push_back(Halfspace{std::move(r), h.offset - base});
  }
  // simplex constraints: t_i >= 0 and sum t_i <= 1
  for (int i = 0; i < n; ++i) {
    Row r(static_cast<size_t>(n), Rational(0));
    r[static_cast<size_t>(i)] = -1;
    hs.push_back(Halfspace{std::move(r), Rational(0)});
  }
  hs.push_back(Halfspace{Row(static_cast<size_t>(n), Rational(1)), Rational(1)});
  std::vector<Point> chart_verts = hrep_vertices(*chart_flat, hs);
  std::vector<Point> mapped;
  for (const auto& t : chart_verts) {
    Point x = realized[0];
    for (int i = 1; i <= n; ++i)
      x = x + t[i - 1] * (realized[static_cast<size_t>(i)] - realized[0]);
    mapped.push_back(std::move(x));
  }
  return polytope_from_vertices(f.m(), std::move(mapped));
}

}  // namespace detail

// The preimage of a cycle pipeline: rebuild C simplicially against the
// vertex images, intersect every domain facet with the preimage of every
// simplex, and certify the assembled pieces as a simplicial (c+n-d)-cycle.
// The per-case dimension bounds from the underlying case analysis are
// asserted during assembly; a failure there or in the cycle certificate is
// raised as alarm_error since it would contradict the case analysis.
inline Chain preimage_cycle(const PLMap& f, const Chain& c,
                            int cap = kDefaultStrongGpCap, const RefineOptions& opt = {}) {
  const int n = f.n(), d = f.target_dim;
  if (c.ambient != d) throw input_error("preimage_cycle: chain lives in a different space");
  if (c.dim >= d)
    throw precondition_error("preimage_cycle: requires chain dimension < target dimension");
  const int expected = c.dim + n - d;
  // f avoids the boundary of C: exact disjointness on the compact image.
  const Chain bc = boundary(c);
  if (!bc.empty()) {
    for (const auto& facet : f.domain.facets) {
      const Polytope img =
          hull_of(d, detail::image_points(f, facet));
      for (const auto& b : bc.simplices)
        if (!intersect_polytopes(img, simplex_polytope(b)).empty())
          throw precondition_error("preimage_cycle: image meets the chain boundary");
    }
  }
  const auto pos = position_wrt_chain(f, c, PositionKind::strong, cap);
  if (!pos.holds)
    throw precondition_error("preimage_cycle: map not in strong general position: " +
                             pos.witness.describe());
  const auto resimpl = resimplicialize(c, vertex_images(f), cap, opt);
  if (!resimpl.ok())
    throw precondition_error("preimage_cycle: resimplicialization failed: " + resimpl.detail);
  const Chain& cs = resimpl.chain;
  if (expected < 0) {
    // Preimage must be empty: images of facets cannot reach a chain of
    // codimension above n under strong general position.
    for (const auto& facet : f.domain.facets)
      for (const auto& sigma : cs.simplices)
        if (!detail::facet_preimage_piece(f, facet, sigma).empty())
          throw alarm_error("preimage_cycle: nonempty piece below expected dimension");
    return make_chain(expected, f.m());
  }
  std::vector<Polytope> pieces;
  for (const auto& facet : f.domain.facets)
    for (const auto& sigma : cs.simplices) {
      Polytope piece = detail::facet_preimage_piece(f, facet, sigma);
      if (piece.empty()) continue;
      if (piece.dim != expected) {
        std::ostringstream os;
        os << "preimage_cycle: piece of dimension " << piece.dim << ", expected "
           << expected << " (degenerate position)";
        throw alarm_error(os.str());
      }
      pieces.push_back(std::move(piece));
    }
  // Case-analysis dimension assertions for touching pieces.
  for (size_t i = 0; i < pieces.size(); ++i)
    for (size_t j = i + 1; j < pieces.size(); ++j) {
      const Polytope meet = intersect_polytopes(pieces[i], pieces[j]);
      if (meet.empty()) continue;
      if (meet.dim > expected - 1 || !subset_of_boundary(meet, pieces[i]) ||
          !subset_of_boundary(meet, pieces[j]))
        throw alarm_error("preimage_cycle: pieces intersect outside their boundaries");
    }
  auto outcome = lemma_eq_cycle(make_polytope_chain(expected, f.m(), pieces), opt);
  if (!outcome.ok())
    throw alarm_error("preimage_cycle: cycle certificate failed: " + outcome.detail);
  return outcome.cycle;
}

}  // namespace pltop
