#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pltop/plmap.hpp"

namespace pltop {

// Singular cone: a generic apex joined to every simplex of the base chain.
// When the base is a cycle and no join degenerates, boundary(cells) = base.
struct Cone {
  Point apex;
  Chain base;
  Chain cells;
};

inline Cone cone(const Point& apex, const Chain& base) {
  if (base.empty()) throw input_error("cone over an empty chain");
  if (apex.dim() != base.ambient) throw input_error("cone apex of wrong dimension");
  Cone out{apex, base, make_chain(base.dim + 1, base.ambient)};
  for (const auto& s : base.simplices) {
    std::vector<Point> verts = s.verts;
    verts.push_back(apex);
    if (!affinely_independent(verts))
      throw degeneracy_error("cone apex degenerate with a base simplex");
    out.cells.toggle(make_simplex(std::move(verts)));
  }
  return out;
}

// Deterministic apex schedule on the moment curve ((Mt), (Mt)^2, ..., (Mt)^d):
// any hyperplane meets it in at most d parameters, so finitely many
// degeneracies are always escaped.
inline Point apex_point(int d, long t, long m = 257) {
  std::vector<Rational> x;
  Rational base(m * t);
  Rational cur = 1;
  for (int i = 0; i < d; ++i) {
    cur *= base;
    x.push_back(cur);
  }
  return Point{std::move(x)};
}

// Number of transversal intersection points of two chains with
// complementary dimensions, mod 2. Every intersecting simplex pair must
// meet in a single point interior to both; anything else is a reported
// degeneracy for the caller to retry around.
inline int transversal_parity(const Chain& a, const Chain& b) {
  if (a.ambient != b.ambient) throw input_error("transversal_parity: ambient mismatch");
  if (a.dim + b.dim != a.ambient)
    throw input_error("transversal_parity: dimensions must sum to the ambient dimension");
  int parity = 0;
  for (const auto& sa : a.simplices)
    for (const auto& sb : b.simplices) {
      const Polytope pa = simplex_polytope(sa), pb = simplex_polytope(sb);
      const Polytope meet = intersect_polytopes(pa, pb);
      if (meet.empty()) continue;
      if (meet.dim != 0)
        throw degeneracy_error("non-transversal intersection (positive dimension)");
      const Point& x = meet.verts[0];
      if (!relint_contains(pa, x) || !relint_contains(pb, x))
        throw degeneracy_error("non-transversal intersection (boundary touch)");
      parity ^= 1;
    }
  return parity;
}

struct LinkingOptions {
  long first_apex = 1;
  long max_tries = 64;
  long apex_scale = 257;  // the M of the moment-curve schedule
};

// Linking number mod 2 of two disjoint cycles of complementary dimensions
// (dim X + dim Y = d - 1): the parity of transversal intersections of a
// generic cone over X with Y. Deterministic retry over the apex schedule;
// the result is apex independent.
inline int linking_mod2(const Chain& x, const Chain& y, const LinkingOptions& opt = {}) {
  if (x.ambient != y.ambient) throw input_error("linking_mod2: ambient mismatch");
  const int d = x.ambient;
  if (x.dim + y.dim != d - 1)
    throw precondition_error("linking_mod2: dimensions must sum to d-1");
  if (!is_cycle(x) || !is_cycle(y))
    throw precondition_error("linking_mod2: both chains must be cycles");
  for (const auto& sx : x.simplices)
    for (const auto& sy : y.simplices)
      if (!intersect_polytopes(simplex_polytope(sx), simplex_polytope(sy)).empty())
        throw precondition_error("linking_mod2: supports are not disjoint");
  for (long t = opt.first_apex; t < opt.first_apex + opt.max_tries; ++t) {
    try {
      return transversal_parity(cone(apex_point(d, t, opt.apex_scale), x).cells, y);
    } catch (const degeneracy_error&) {
    }
  }
  throw degeneracy_error("linking_mod2: no admissible apex in the schedule window");
}

// The three-component configuration of the singular Borromean rings
// property: a 2l-torus with marked meridian and parallel plus two k-spheres,
// all mapped into R^(k+l+1). l = 0 is admitted for the explicit l = 0
// construction; the no-map statement itself needs k > l >= 1.
struct BorromeanConfig {
  int k = 1;
  int l = 0;
  PLMap torus;
  PLMap sphere_p;
  PLMap sphere_m;
  std::string m_mark = "m";
  std::string p_mark = "p";

  int ambient() const { return k + l + 1; }
};

inline void validate(const BorromeanConfig& cfg) {
  if (cfg.k <= cfg.l || cfg.l < 0)
    throw input_error("borromean config: needs k > l >= 0");
  const int d = cfg.ambient();
  if (cfg.torus.target_dim != d || cfg.sphere_p.target_dim != d ||
      cfg.sphere_m.target_dim != d)
    throw input_error("borromean config: all components must map to R^(k+l+1)");
  if (cfg.torus.n() != 2 * cfg.l) throw input_error("borromean config: torus must be 2l-dimensional");
  if (cfg.sphere_p.n() != cfg.k || cfg.sphere_m.n() != cfg.k)
    throw input_error("borromean config: spheres must be k-dimensional");
  if (!cfg.torus.domain.marks.count(cfg.m_mark) || !cfg.torus.domain.marks.count(cfg.p_mark))
    throw input_error("borromean config: torus lacks the m/p marks");
}

struct BorromeanReport {
  bool disjoint = false;
  std::optional<std::pair<GeomSimplex, GeomSimplex>> touching;
  // defined only when disjoint:
  int lk_pp = 0, lk_pm = 0, lk_mm = 0, lk_mp = 0;
  bool links_computed = false;
  bool property1 = false, property2 = false, property3 = false;

  bool all_properties() const { return property1 && property2 && property3; }
};

// Checks the three properties of the no-map statement on one configuration:
// pairwise disjoint images; the p-sphere links the parallel once and the
// meridian zero times; the m-sphere links the meridian once and the parallel
// zero times.
inline BorromeanReport borromean_check(const BorromeanConfig& cfg,
                                       const LinkingOptions& opt = {}) {
  validate(cfg);
  BorromeanReport rep;
  const Chain t_img = image_chain(cfg.torus);
  const Chain sp_img = image_chain(cfg.sphere_p);
  const Chain sm_img = image_chain(cfg.sphere_m);
  rep.disjoint = true;
  const std::array<const Chain*, 3> comps{&t_img, &sp_img, &sm_img};
  for (size_t i = 0; i < 3 && rep.disjoint; ++i)
    for (size_t j = i + 1; j < 3 && rep.disjoint; ++j)
      for (const auto& a : comps[i]->simplices) {
        for (const auto& b : comps[j]->simplices)
          if (!intersect_polytopes(simplex_polytope(a), simplex_polytope(b)).empty()) {
            rep.disjoint = false;
            rep.touching = {a, b};
            break;
          }
        if (!rep.disjoint) break;
      }
  rep.property1 = rep.disjoint;
  if (!rep.disjoint) return rep;
  const Chain fp = marked_chain(cfg.torus, cfg.p_mark);
  const Chain fm = marked_chain(cfg.torus, cfg.m_mark);
  rep.lk_pp = linking_mod2(sp_img, fp, opt);
  rep.lk_pm = linking_mod2(sp_img, fm, opt);
  rep.lk_mm = linking_mod2(sm_img, fm, opt);
  rep.lk_mp = linking_mod2(sm_img, fp, opt);
  rep.links_computed = true;
  rep.property2 = rep.lk_pp == 1 && rep.lk_pm == 0;
  rep.property3 = rep.lk_mm == 1 && rep.lk_mp == 0;
  return rep;
}

namespace detail {

// Parity of triple intersections, each required to be a single point
// interior to all three simplices.
inline int triple_parity(const Chain& a, const Chain& b, const Chain& c) {
  int parity = 0;
  for (const auto& sa : a.simplices) {
    const Polytope pa = simplex_polytope(sa);
    for (const auto& sb : b.simplices) {
      const Polytope pb = simplex_polytope(sb);
      const Polytope ab = intersect_polytopes(pa, pb);
      if (ab.empty()) continue;
      for (const auto& sc : c.simplices) {
        const Polytope pc = simplex_polytope(sc);
        const Polytope abc = intersect_polytopes(ab, pc);
        if (abc.empty()) continue;
        if (abc.dim != 0) throw degeneracy_error("triple intersection of positive dimension");
        const Point& x = abc.verts[0];
        if (!relint_contains(pa, x) || !relint_contains(pb, x) || !relint_contains(pc, x))
          throw degeneracy_error("triple intersection on a simplex boundary");
        parity ^= 1;
      }
    }
  }
  return parity;
}

}  // namespace detail

struct LeibnizReport {
  std::array<int, 3> terms{0, 0, 0};  // |fT . Cp . Cm|, |CT . fSp . Cm|, |CT . Cp . fSm|
  long apex_round = 0;
  bool sum_even() const { return (terms[0] ^ terms[1] ^ terms[2]) == 0; }
  // The pattern (1,0,0) is exactly the unrealizable contradiction pattern.
  bool counterexample_alarm() const {
    return terms == std::array<int, 3>{1, 0, 0};
  }
};

// The three boundary terms of the product-rule expansion of
// boundary(C_T cap C_p cap C_m), computed by exact triple intersection of
// the image chains and singular cones. Their mod-2 sum vanishes for every
// realizable configuration.
inline LeibnizReport leibniz_terms(const BorromeanConfig& cfg,
                                   const LinkingOptions& opt = {}) {
  validate(cfg);
  if (cfg.l < 1) throw precondition_error("leibniz_terms: requires k > l >= 1");
  const Chain t_img = image_chain(cfg.torus);
  const Chain sp_img = image_chain(cfg.sphere_p);
  const Chain sm_img = image_chain(cfg.sphere_m);
  {
    const auto rep = borromean_check(cfg, opt);
    if (!rep.disjoint)
      throw precondition_error("leibniz_terms: component images are not disjoint");
  }
  const int d = cfg.ambient();
  for (long t = opt.first_apex; t < opt.first_apex + opt.max_tries; ++t) {
    try {
      const Cone ct = cone(apex_point(d, 3 * t - 2, opt.apex_scale), t_img);
      const Cone cp = cone(apex_point(d, 3 * t - 1, opt.apex_scale), sp_img);
      const Cone cm = cone(apex_point(d, 3 * t, opt.apex_scale), sm_img);
      LeibnizReport rep;
      rep.terms[0] = detail::triple_parity(t_img, cp.cells, cm.cells);
      rep.terms[1] = detail::triple_parity(ct.cells, sp_img, cm.cells);
      rep.terms[2] = detail::triple_parity(ct.cells, cp.cells, sm_img);
      rep.apex_round = t;
      return rep;
    } catch (const degeneracy_error&) {
    }
  }
  throw degeneracy_error("leibniz_terms: no admissible apex triple in the schedule window");
}

namespace detail {

// Rational points on the unit sphere S^k spanning a simplex with the origin
// strictly inside: the standard basis plus one strictly negative point.
inline std::vector<Point> rational_sphere_simplex(int k) {
  std::vector<Point> pts;
  const int d = k + 1;
  for (int i = 0; i < d; ++i) {
    std::vector<Rational> x(static_cast<size_t>(d), Rational(0));
    x[static_cast<size_t>(i)] = 1;
    pts.push_back(Point{std::move(x)});
  }
  // stereographic image of (-1/t, ..., -1/t) with t = max(2, k):
  // all coordinates strictly negative, exactly on the sphere
  const long t = std::max(2L, static_cast<long>(k));
  const Rational norm2 = rat(static_cast<long>(k), t * t);  // |y|^2 = k/t^2
  const Rational denom = norm2 + 1;
  std::vector<Rational> w;
  for (int i = 0; i < k; ++i) w.push_back(rat(-2, t) / denom);
  w.push_back((norm2 - 1) / denom);
  pts.push_back(Point{std::move(w)});
  return pts;
}

}  // namespace detail

// The explicit l = 0 configuration: the 0-torus {-1,+1} x {-1,+1} embedded
// in the first two coordinates of R^(k+1), spheres of radius one around
// e1 - e2 and e2 - e1. It satisfies all three properties, which is why
// l >= 1 is essential for the no-map statement.
inline BorromeanConfig remark_a_config(int k) {
  if (k < 1) throw input_error("remark_a_config: k must be >= 1");
  const int d = k + 1;
  // torus: staircase product of two copies of S^0; vertex (i,j) -> index 2i+j
  // realized at ((-1)^i, (-1)^j), so vertex 0 is (+1,+1)
  const AbstractComplex s0 = boundary_sphere(0);
  AbstractComplex tdom = staircase_product(s0, s0);
  std::vector<Point> treal, timg;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const long a = i == 0 ? 1 : -1, b = j == 0 ? 1 : -1;
      treal.push_back(Point{{Rational(a), Rational(b)}});
      std::vector<Rational> img{Rational(a), Rational(b)};
      img.resize(static_cast<size_t>(d), Rational(0));
      timg.push_back(Point{std::move(img)});
    }
  // m = {+-1} x {1}: second factor at vertex 0; p = {1} x {+-1}
  tdom.marks["m"] = {{0}, {2}};
  tdom.marks["p"] = {{0}, {1}};
  tdom.realization = std::move(treal);
  BorromeanConfig cfg;
  cfg.k = k;
  cfg.l = 0;
  cfg.torus = make_plmap(std::move(tdom), std::move(timg), d);
  const auto unit = detail::rational_sphere_simplex(k);
  auto make_sphere = [&](long sign) {
    AbstractComplex dom = boundary_sphere(k);
    std::vector<Point> img;
    for (const auto& u : unit) {
      Point q = u;
      q[0] += sign;
      q[1] -= sign;
      img.push_back(std::move(q));
    }
    dom.realization = unit;
    return make_plmap(std::move(dom), std::move(img), d);
  };
  cfg.sphere_p = make_sphere(+1);  // centered at e1 - e2
  cfg.sphere_m = make_sphere(-1);  // centered at e2 - e1
  return cfg;
}

}  // namespace pltop
