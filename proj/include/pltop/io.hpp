#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pltop/complex.hpp"
#include "pltop/link.hpp"
#include "pltop/polytope_chain.hpp"
#include "pltop/reduce.hpp"

namespace pltop {

using json = nlohmann::json;

// Rationals serialize as strings "p/q" (the "/q" omitted when q = 1);
// points as arrays of such strings.

inline json point_to_json(const Point& p) {
  json a = json::array();
  for (int i = 0; i < p.dim(); ++i) a.push_back(rat_str(p[i]));
  return a;
}

inline Point point_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw input_error("point: expected a nonempty array");
  std::vector<Rational> x;
  for (const auto& c : j) {
    if (c.is_number_integer())
      x.push_back(Rational(c.get<long>()));
    else if (c.is_string())
      x.push_back(rat_parse(c.get<std::string>()));
    else
      throw input_error("point: coordinates are strings like \"p/q\"");
  }
  return Point{std::move(x)};
}

inline json points_to_json(int ambient, const std::vector<Point>& pts) {
  json j;
  j["ambient"] = ambient;
  j["points"] = json::array();
  for (const auto& p : pts) j["points"].push_back(point_to_json(p));
  return j;
}

inline std::pair<int, std::vector<Point>> points_from_json(const json& j) {
  if (!j.contains("ambient") || !j.contains("points"))
    throw input_error("points file: needs 'ambient' and 'points'");
  const int d = j["ambient"].get<int>();
  std::vector<Point> pts;
  for (const auto& pj : j["points"]) {
    Point p = point_from_json(pj);
    if (p.dim() != d) throw input_error("points file: point of wrong dimension");
    pts.push_back(std::move(p));
  }
  return {d, std::move(pts)};
}

inline json chain_to_json(const Chain& c) {
  json j;
  j["dim"] = c.dim;
  j["ambient"] = c.ambient;
  j["simplices"] = json::array();
  for (const auto& s : c.simplices) {
    json sj = json::array();
    for (const auto& v : s.verts) sj.push_back(point_to_json(v));
    j["simplices"].push_back(std::move(sj));
  }
  return j;
}

inline Chain chain_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("ambient") || !j.contains("simplices"))
    throw input_error("chain: needs 'dim', 'ambient' and 'simplices'");
  Chain c = make_chain(j["dim"].get<int>(), j["ambient"].get<int>());
  for (const auto& sj : j["simplices"]) {
    std::vector<Point> verts;
    for (const auto& vj : sj) {
      Point p = point_from_json(vj);
      if (p.dim() != c.ambient) throw input_error("chain: vertex of wrong dimension");
      verts.push_back(std::move(p));
    }
    c.toggle(make_simplex(std::move(verts)));
  }
  return c;
}

inline json polytope_chain_to_json(const PolytopeChain& p) {
  json j;
  j["dim"] = p.dim;
  j["ambient"] = p.ambient;
  j["cells"] = json::array();
  for (const auto& cell : p.cells) {
    json cj = json::array();
    for (const auto& v : cell.verts) cj.push_back(point_to_json(v));
    j["cells"].push_back(std::move(cj));
  }
  return j;
}

inline PolytopeChain polytope_chain_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("ambient") || !j.contains("cells"))
    throw input_error("polytope chain: needs 'dim', 'ambient' and 'cells'");
  const int ambient = j["ambient"].get<int>();
  std::vector<Polytope> cells;
  for (const auto& cj : j["cells"]) {
    std::vector<Point> verts;
    for (const auto& vj : cj) {
      Point p = point_from_json(vj);
      if (p.dim() != ambient) throw input_error("polytope chain: vertex of wrong dimension");
      verts.push_back(std::move(p));
    }
    cells.push_back(hull_of(ambient, std::move(verts)));
  }
  return make_polytope_chain(j["dim"].get<int>(), ambient, std::move(cells));
}

inline json complex_to_json(const AbstractComplex& k) {
  json j;
  j["vertices"] = k.vertex_count;
  j["facets"] = json::array();
  for (const auto& f : k.facets) j["facets"].push_back(f);
  if (k.realization) {
    j["realization"] = json::array();
    for (const auto& p : *k.realization) j["realization"].push_back(point_to_json(p));
  }
  if (!k.marks.empty()) {
    json m;
    for (const auto& [name, fs] : k.marks) {
      json a = json::array();
      for (const auto& f : fs) a.push_back(f);
      m[name] = std::move(a);
    }
    j["marks"] = std::move(m);
  }
  return j;
}

inline AbstractComplex complex_from_json(const json& j) {
  if (!j.contains("vertices") || !j.contains("facets"))
    throw input_error("complex: needs 'vertices' and 'facets'");
  std::vector<Simplex> facets;
  for (const auto& fj : j["facets"]) facets.push_back(fj.get<Simplex>());
  AbstractComplex k = make_complex(j["vertices"].get<int>(), std::move(facets));
  if (j.contains("realization")) {
    std::vector<Point> pts;
    for (const auto& pj : j["realization"]) pts.push_back(point_from_json(pj));
    if (pts.size() != static_cast<size_t>(k.vertex_count))
      throw input_error("complex: realization size mismatch");
    k.realization = std::move(pts);
  }
  if (j.contains("marks"))
    for (const auto& [name, fsj] : j["marks"].items()) {
      std::set<Simplex> fs;
      for (const auto& fj : fsj)
        fs.insert(detail::sorted_simplex(fj.get<Simplex>(), k.vertex_count));
      k.marks[name] = std::move(fs);
    }
  return k;
}

inline json plmap_to_json(const PLMap& f) {
  json j;
  j["domain"] = complex_to_json(f.domain);
  j["images"] = json::array();
  for (const auto& p : f.images) j["images"].push_back(point_to_json(p));
  j["target_dim"] = f.target_dim;
  return j;
}

inline PLMap plmap_from_json(const json& j) {
  if (!j.contains("domain") || !j.contains("images") || !j.contains("target_dim"))
    throw input_error("plmap: needs 'domain', 'images' and 'target_dim'");
  AbstractComplex dom = complex_from_json(j["domain"]);
  std::vector<Point> images;
  for (const auto& pj : j["images"]) images.push_back(point_from_json(pj));
  return make_plmap(std::move(dom), std::move(images), j["target_dim"].get<int>());
}

inline json config_to_json(const BorromeanConfig& cfg) {
  json j;
  j["k"] = cfg.k;
  j["l"] = cfg.l;
  j["torus"] = plmap_to_json(cfg.torus);
  j["sphere_p"] = plmap_to_json(cfg.sphere_p);
  j["sphere_m"] = plmap_to_json(cfg.sphere_m);
  j["m_mark"] = cfg.m_mark;
  j["p_mark"] = cfg.p_mark;
  return j;
}

inline BorromeanConfig config_from_json(const json& j) {
  for (const char* key : {"k", "l", "torus", "sphere_p", "sphere_m"})
    if (!j.contains(key)) throw input_error(std::string("borromean config: missing '") + key + "'");
  BorromeanConfig cfg;
  cfg.k = j["k"].get<int>();
  cfg.l = j["l"].get<int>();
  cfg.torus = plmap_from_json(j["torus"]);
  cfg.sphere_p = plmap_from_json(j["sphere_p"]);
  cfg.sphere_m = plmap_from_json(j["sphere_m"]);
  cfg.m_mark = j.value("m_mark", "m");
  cfg.p_mark = j.value("p_mark", "p");
  validate(cfg);
  return cfg;
}

inline json deleted_product_to_json(const DeletedProduct& dp) {
  json j;
  j["cells"] = json::array();
  for (const auto& c : dp.cells) {
    json cj;
    cj["left"] = c.left;
    cj["right"] = c.right;
    j["cells"].push_back(std::move(cj));
  }
  return j;
}

inline json plan_to_json(const LinkagePlan& plan) {
  json j;
  j["spheres"] = plan.spheres;
  j["tori"] = json::array();
  for (const auto& t : plan.tori) {
    json tj;
    tj["torus"] = t.torus_id;
    tj["sphere_q"] = t.sphere_q;
    tj["sphere_r"] = t.sphere_r;
    tj["convention"] = t.convention;
    j["tori"].push_back(std::move(tj));
  }
  return j;
}

inline LinkagePlan plan_from_json(const json& j) {
  LinkagePlan plan;
  if (j.contains("spheres")) plan.spheres = j["spheres"].get<std::vector<std::string>>();
  if (j.contains("tori"))
    for (const auto& tj : j["tori"]) {
      TorusLink t;
      t.torus_id = tj.at("torus").get<std::string>();
      t.sphere_q = tj.at("sphere_q").get<std::string>();
      t.sphere_r = tj.at("sphere_r").get<std::string>();
      t.convention = tj.value("convention", "identify-boundary-sphere");
      plan.tori.push_back(std::move(t));
    }
  return plan;
}

// Human-readable schema summary served by the CLI's --schema flag.
inline json schemas_json() {
  json s;
  s["rational"] = "string \"p/q\" in lowest terms, \"/q\" omitted when q = 1";
  s["point"] = "array of rationals, length = ambient dimension";
  s["points"] = {{"ambient", "int"}, {"points", "[point]"}};
  s["chain"] = {{"dim", "int"}, {"ambient", "int"}, {"simplices", "[[point] x (dim+1)]"}};
  s["polytope_chain"] = {{"dim", "int"}, {"ambient", "int"}, {"cells", "[[point]] (vertex lists)"}};
  s["complex"] = {{"vertices", "int"},
                  {"facets", "[[int]]"},
                  {"realization", "optional [point] (one per vertex)"},
                  {"marks", "optional {name: [[int]]}"}};
  s["plmap"] = {{"domain", "complex with realization"},
                {"images", "[point] (one per domain vertex)"},
                {"target_dim", "int"}};
  s["borromean_config"] = {{"k", "int"},          {"l", "int"},
                           {"torus", "plmap"},    {"sphere_p", "plmap"},
                           {"sphere_m", "plmap"}, {"m_mark", "string (default m)"},
                           {"p_mark", "string (default p)"}};
  s["deleted_product"] = {{"cells", "[{left: [int], right: [int]}]"}};
  s["plan"] = {{"spheres", "[string]"},
               {"tori", "[{torus, sphere_q, sphere_r, convention}]"}};
  s["result"] = {{"status", "ok | violation | error"},
                 {"payload", "operation specific"},
                 {"transcript", "[string]"}};
  return s;
}

}  // namespace pltop
