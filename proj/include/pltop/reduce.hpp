#pragma once

#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pltop/complex.hpp"

namespace pltop {

// CNF formula with 1-based signed literals, DIMACS style.
struct CnfFormula {
  int variable_count = 0;
  std::vector<std::vector<int>> clauses;
};

inline CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula phi;
  bool header = false;
  std::vector<int> clause;
  std::string line;
  int lineno = 0;
  long declared_clauses = -1;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c" || first[0] == 'c') continue;
    if (first == "p") {
      std::string kind;
      if (!(ls >> kind >> phi.variable_count >> declared_clauses) || kind != "cnf")
        throw input_error("dimacs line " + std::to_string(lineno) + ": bad problem line");
      header = true;
      continue;
    }
    if (!header)
      throw input_error("dimacs line " + std::to_string(lineno) + ": clause before header");
    ls.clear();
    ls.str(line);
    long lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (clause.empty())
          throw input_error("dimacs line " + std::to_string(lineno) + ": empty clause");
        phi.clauses.push_back(clause);
        clause.clear();
      } else {
        if (std::abs(lit) > phi.variable_count)
          throw input_error("dimacs line " + std::to_string(lineno) +
                            ": literal out of range");
        clause.push_back(static_cast<int>(lit));
      }
    }
  }
  if (!header) throw input_error("dimacs: missing problem line");
  if (!clause.empty()) throw input_error("dimacs: last clause not 0-terminated");
  if (declared_clauses >= 0 && declared_clauses != static_cast<long>(phi.clauses.size()))
    throw input_error("dimacs: clause count differs from header");
  return phi;
}

// Sphere and torus building blocks for the parameter pair (k, d) with
// l = d - k - 1; valid when k >= 2 and k+2 <= d <= 3k/2 + 1 (then
// 1 <= l <= k/2, so the assembled complex is k-dimensional).
struct GadgetKit {
  int k = 0, d = 0, l = 0;
  AbstractComplex sphere;  // boundary of the (k+1)-simplex
  AbstractComplex torus;   // 2l-torus with marks m, p
};

inline GadgetKit build_gadget_kit(int k, int d) {
  if (k < 2 || d < k + 2 || 2 * d > 3 * k + 2) {
    std::ostringstream os;
    os << "gadget kit parameters out of range: need k >= 2 and k+2 <= d <= 3k/2+1, got k="
       << k << ", d=" << d;
    throw input_error(os.str());
  }
  GadgetKit kit;
  kit.k = k;
  kit.d = d;
  kit.l = d - k - 1;
  kit.sphere = boundary_sphere(k);
  kit.torus = torus_gadget(kit.l);
  return kit;
}

// One torus gadget tying two sphere gadgets together.
struct TorusLink {
  std::string torus_id;
  std::string sphere_q;
  std::string sphere_r;
  std::string convention = "identify-boundary-sphere";
};

struct LinkagePlan {
  std::vector<std::string> spheres;
  std::vector<TorusLink> tori;
};

// Default plan convention (a documented placeholder, not the published
// wiring): one sphere per literal occurrence, one torus per pair of
// complementary occurrences of the same variable.
inline LinkagePlan default_plan(const CnfFormula& phi) {
  LinkagePlan plan;
  struct Occ {
    int lit;
    std::string id;
  };
  std::vector<Occ> occs;
  for (size_t ci = 0; ci < phi.clauses.size(); ++ci)
    for (size_t li = 0; li < phi.clauses[ci].size(); ++li) {
      std::ostringstream id;
      id << "s_c" << ci << "_l" << li;
      plan.spheres.push_back(id.str());
      occs.push_back({phi.clauses[ci][li], id.str()});
    }
  int tcount = 0;
  for (size_t i = 0; i < occs.size(); ++i)
    for (size_t j = i + 1; j < occs.size(); ++j)
      if (occs[i].lit == -occs[j].lit) {
        std::ostringstream id;
        id << "t" << tcount++;
        plan.tori.push_back({id.str(), occs[i].id, occs[j].id, "identify-boundary-sphere"});
      }
  return plan;
}

struct AssembledComplex {
  AbstractComplex complex;
  // provenance: gadget id -> (kind, first vertex of its block)
  std::vector<std::pair<std::string, std::string>> gadgets;
  LinkagePlan plan;
};

// Assemble the instance complex from sphere and torus gadgets following the
// plan. The one implemented convention, "identify-boundary-sphere",
// identifies the torus meridian with the standard copy of the boundary of
// the (l+1)-simplex on the first l+2 vertices of sphere_q, and the parallel
// likewise on sphere_r; the corner vertex shared by meridian and parallel is
// pinned to sphere_q, so the two spheres meet in that single point.
inline AssembledComplex assemble_k_phi(const CnfFormula& phi, int k, int d,
                                       const LinkagePlan& plan) {
  const GadgetKit kit = build_gadget_kit(k, d);
  (void)phi;  // the formula enters through the plan; kept for the interface
  const int l = kit.l;
  const int sphere_verts = k + 2;
  const int torus_fresh = (l + 1) * (l + 1);  // interior vertices; m and p are glued
  std::map<std::string, int> sphere_base;
  AssembledComplex out;
  out.plan = plan;
  int next = 0;
  for (const auto& sid : plan.spheres) {
    if (sphere_base.count(sid)) throw input_error("duplicate sphere id '" + sid + "'");
    sphere_base[sid] = next;
    out.gadgets.push_back({sid, "sphere@" + std::to_string(next)});
    next += sphere_verts;
  }
  std::vector<Simplex> facets;
  for (const auto& [sid, base] : sphere_base)
    for (const auto& f : kit.sphere.facets) {
      Simplex g;
      for (int v : f) g.push_back(base + v);
      facets.push_back(std::move(g));
    }
  std::map<std::string, int> torus_seen;
  std::map<std::string, std::pair<std::set<Simplex>, std::set<Simplex>>> torus_marks;
  for (const auto& t : plan.tori) {
    if (t.torus_id.empty() || torus_seen.count(t.torus_id))
      throw input_error("missing or duplicate torus id '" + t.torus_id + "'");
    torus_seen[t.torus_id] = 1;
    if (t.convention != "identify-boundary-sphere")
      throw input_error("unknown attachment convention '" + t.convention + "'");
    if (!sphere_base.count(t.sphere_q) || !sphere_base.count(t.sphere_r))
      throw input_error("torus '" + t.torus_id + "' references a missing sphere");
    if (t.sphere_q == t.sphere_r)
      throw input_error("torus '" + t.torus_id + "' must reference two distinct spheres");
    const int qbase = sphere_base[t.sphere_q];
    const int rbase = sphere_base[t.sphere_r];
    const int tbase = next;
    out.gadgets.push_back({t.torus_id, "torus@" + std::to_string(tbase)});
    next += torus_fresh;
    const int nb = l + 2;
    // vertex (i,j) of the torus: (i,0) -> sphere_q[i], (0,j) -> sphere_r[j]
    // with the corner (0,0) pinned to sphere_q[0]; interior vertices fresh
    auto glue = [&](int v) {
      const int i = v / nb, j = v % nb;
      if (j == 0) return qbase + i;
      if (i == 0) return rbase + j;
      return tbase + (i - 1) * (nb - 1) + (j - 1);
    };
    auto glue_set = [&](const std::set<Simplex>& fs) {
      std::set<Simplex> glued;
      for (const auto& f : fs) {
        Simplex g;
        for (int v : f) g.push_back(glue(v));
        std::sort(g.begin(), g.end());
        glued.insert(std::move(g));
      }
      return glued;
    };
    for (const auto& g : glue_set(kit.torus.facets)) facets.push_back(g);
    torus_marks[t.torus_id] = {glue_set(kit.torus.marks.at("m")),
                               glue_set(kit.torus.marks.at("p"))};
    torus_marks[t.torus_id + ".facets"] = {glue_set(kit.torus.facets), {}};
  }
  out.complex = make_complex(next, std::move(facets));
  for (auto& [tid, marks] : torus_marks) {
    if (tid.ends_with(".facets")) {
      out.complex.marks[tid.substr(0, tid.size() - 7) + ".torus"] = std::move(marks.first);
    } else {
      out.complex.marks[tid + ".m"] = std::move(marks.first);
      out.complex.marks[tid + ".p"] = std::move(marks.second);
    }
  }
  if (out.complex.dim() != k)
    throw alarm_error("assembled complex dimension differs from k");
  // size stays linear in the plan: every gadget contributes its own facets
  const size_t expected = plan.spheres.size() * kit.sphere.facets.size() +
                          plan.tori.size() * kit.torus.facets.size();
  if (out.complex.facets.size() != expected)
    throw alarm_error("assembled complex lost or merged facets");
  return out;
}

}  // namespace pltop
