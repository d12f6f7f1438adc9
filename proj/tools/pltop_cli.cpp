// Batch command-line frontend: every pipeline of the library behind
// file-based, reproducible subcommands. Exit codes: 0 = ok, 2 = a check ran
// and reported a violation (machine-readable witness in the payload),
// 1 = the command could not run.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pltop/io.hpp"

using namespace pltop;

namespace {

struct CommandResult {
  std::string status = "ok";  // ok | violation | error
  json payload = json::object();
  std::vector<std::string> transcript;
  // Bare artifact written to --out when present: a generated complex or
  // chain on success, a re-checkable witness file on violation.
  json artifact;
};

struct Options {
  std::vector<std::string> inputs;
  std::string out;
  int k = -1, l = -1, d = -1;
  long seed = 0;
  int cap = kDefaultStrongGpCap;
  size_t max_cells = 4096;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw input_error("parse error in '" + path + "': " + e.what());
  }
  return j;
}

const std::string& input_at(const Options& opt, size_t i, const char* what) {
  if (i >= opt.inputs.size())
    throw input_error(std::string("missing input file: expected ") + what +
                      " as --in argument " + std::to_string(i + 1));
  return opt.inputs[i];
}

json simplex_json(const GeomSimplex& s) {
  json a = json::array();
  for (const auto& v : s.verts) a.push_back(point_to_json(v));
  return a;
}

json polytope_json(const Polytope& p) {
  json a = json::array();
  for (const auto& v : p.verts) a.push_back(point_to_json(v));
  return a;
}

json witness_points_json(int ambient, const PositionWitness& w) {
  std::set<Point> pts;
  for (const auto& sub : w.subsets) pts.insert(sub.begin(), sub.end());
  json j = points_to_json(ambient, {pts.begin(), pts.end()});
  json subsets = json::array();
  for (const auto& sub : w.subsets) {
    json a = json::array();
    for (const auto& p : sub) a.push_back(point_to_json(p));
    subsets.push_back(std::move(a));
  }
  j["subsets"] = std::move(subsets);
  return j;
}

CommandResult run_gen_sphere(const Options& opt) {
  if (opt.k < 0) throw input_error("gen-sphere: --k is required");
  CommandResult r;
  r.payload = complex_to_json(boundary_sphere(opt.k));
  r.artifact = r.payload;
  r.transcript.push_back("generated boundary sphere of dimension " + std::to_string(opt.k));
  return r;
}

CommandResult run_gen_torus(const Options& opt) {
  if (opt.l < 0) throw input_error("gen-torus: --l is required");
  CommandResult r;
  r.payload = complex_to_json(torus_gadget(opt.l));
  r.artifact = r.payload;
  r.transcript.push_back("generated 2l-torus with marked meridian and parallel, l = " +
                         std::to_string(opt.l));
  return r;
}

CommandResult run_gen_remark_a(const Options& opt) {
  if (opt.k < 0) throw input_error("gen-remark-a: --k is required");
  CommandResult r;
  r.payload = config_to_json(remark_a_config(opt.k));
  r.artifact = r.payload;
  r.transcript.push_back("generated the explicit l=0 configuration for k = " +
                         std::to_string(opt.k));
  return r;
}

CommandResult run_deleted_product(const Options& opt) {
  const auto k = complex_from_json(read_json_file(input_at(opt, 0, "complex")));
  const auto dp = deleted_product(k);
  CommandResult r;
  r.payload = deleted_product_to_json(dp);
  json counts = json::array();
  for (const auto& [bd, n] : dp.counts_by_bidim())
    counts.push_back({{"left_dim", bd.first}, {"right_dim", bd.second}, {"cells", n}});
  r.payload["counts_by_bidim"] = std::move(counts);
  r.payload["involution_fixed_point_free"] = dp.involution_fixed_point_free();
  r.artifact = r.payload;
  r.transcript.push_back("deleted product: " + std::to_string(dp.cells.size()) + " cells");
  return r;
}

CommandResult run_boundary(const Options& opt) {
  const Chain c = chain_from_json(read_json_file(input_at(opt, 0, "chain")));
  const Chain bd = boundary(c);
  CommandResult r;
  r.payload = chain_to_json(bd);
  r.artifact = r.payload;
  r.transcript.push_back("boundary: " + std::to_string(bd.size()) + " simplices");
  return r;
}

CommandResult run_check_cycle(const Options& opt) {
  const json input = read_json_file(input_at(opt, 0, "chain"));
  const Chain c = chain_from_json(input);
  const Chain bd = boundary(c);
  CommandResult r;
  if (bd.empty()) {
    r.payload["cycle"] = true;
    r.transcript.push_back("chain is a cycle");
  } else {
    r.status = "violation";
    r.payload["cycle"] = false;
    r.payload["witness"] = {{"chain", input}, {"boundary", chain_to_json(bd)}};
    r.artifact = input;
    r.transcript.push_back("boundary has " + std::to_string(bd.size()) + " simplices");
  }
  return r;
}

CommandResult run_check_simplicial(const Options& opt) {
  const Chain c = chain_from_json(read_json_file(input_at(opt, 0, "chain")));
  std::pair<GeomSimplex, GeomSimplex> w;
  CommandResult r;
  if (is_simplicial(c, &w)) {
    r.payload["simplicial"] = true;
  } else {
    r.status = "violation";
    r.payload["simplicial"] = false;
    r.payload["witness"] = {{"pair", json::array({simplex_json(w.first), simplex_json(w.second)})}};
    Chain pair = make_chain(c.dim, c.ambient);
    pair.toggle(w.first);
    pair.toggle(w.second);
    r.artifact = chain_to_json(pair);
    r.transcript.push_back("two simplices intersect outside a common face");
  }
  return r;
}

CommandResult run_check_gp(const Options& opt) {
  const auto [d, pts] = points_from_json(read_json_file(input_at(opt, 0, "points")));
  PositionWitness w;
  CommandResult r;
  if (in_general_position(pts, d, &w)) {
    r.payload["general_position"] = true;
  } else {
    r.status = "violation";
    r.payload["general_position"] = false;
    r.payload["witness"] = witness_points_json(d, w);
    r.artifact = r.payload["witness"];
  }
  return r;
}

CommandResult run_check_sgp(const Options& opt) {
  const auto [d, pts] = points_from_json(read_json_file(input_at(opt, 0, "points")));
  PositionWitness w;
  CommandResult r;
  if (in_strong_general_position(pts, d, &w, opt.cap)) {
    r.payload["strong_general_position"] = true;
  } else {
    r.status = "violation";
    r.payload["strong_general_position"] = false;
    r.payload["witness"] = witness_points_json(d, w);
    r.artifact = r.payload["witness"];
  }
  return r;
}

CommandResult run_resimplicialize(const Options& opt) {
  const Chain c = chain_from_json(read_json_file(input_at(opt, 0, "chain")));
  const auto [d, u] = points_from_json(read_json_file(input_at(opt, 1, "points")));
  if (d != c.ambient) throw input_error("resimplicialize: U lives in a different space");
  const auto out = resimplicialize(c, u, opt.cap, RefineOptions{opt.max_cells});
  CommandResult r;
  if (out.ok()) {
    r.payload["chain"] = chain_to_json(out.chain);
    r.artifact = r.payload["chain"];
    r.transcript.push_back("rebuilt chain with " + std::to_string(out.chain.size()) +
                           " simplices");
  } else {
    r.status = "violation";
    r.payload["reason"] = out.detail;
    r.payload["stage"] = out.status == ResimplOutcome::Status::precondition_failed
                             ? "precondition"
                             : "postcondition";
    r.payload["witness"] = witness_points_json(c.ambient, out.report.witness);
    r.transcript.push_back(out.detail);
  }
  return r;
}

CommandResult run_preimage(const Options& opt) {
  const PLMap f = plmap_from_json(read_json_file(input_at(opt, 0, "plmap")));
  const Chain c = chain_from_json(read_json_file(input_at(opt, 1, "chain")));
  CommandResult r;
  try {
    const Chain pre = preimage_cycle(f, c, opt.cap, RefineOptions{opt.max_cells});
    r.payload["chain"] = chain_to_json(pre);
    r.artifact = r.payload["chain"];
    r.payload["is_cycle"] = is_cycle(pre);
    r.transcript.push_back("preimage cycle with " + std::to_string(pre.size()) +
                           " simplices of dimension " + std::to_string(pre.dim));
  } catch (const precondition_error& e) {
    r.status = "violation";
    r.payload["reason"] = e.what();
    r.payload["stage"] = "precondition";
  } catch (const alarm_error& e) {
    r.status = "violation";
    r.payload["reason"] = e.what();
    r.payload["stage"] = "alarm";
    r.transcript.push_back("bug-or-counterexample alarm; keep the inputs for reproduction");
  }
  return r;
}

CommandResult run_linking(const Options& opt) {
  const Chain x = chain_from_json(read_json_file(input_at(opt, 0, "chain X")));
  const Chain y = chain_from_json(read_json_file(input_at(opt, 1, "chain Y")));
  CommandResult r;
  try {
    r.payload["linking_mod2"] = linking_mod2(x, y);
  } catch (const precondition_error& e) {
    r.status = "violation";
    r.payload["reason"] = e.what();
  }
  return r;
}

CommandResult run_borromean_check(const Options& opt) {
  const auto cfg = config_from_json(read_json_file(input_at(opt, 0, "borromean config")));
  const auto rep = borromean_check(cfg);
  CommandResult r;
  r.payload["disjoint"] = rep.disjoint;
  if (rep.touching) {
    r.payload["witness"] = {{"pair", json::array({simplex_json(rep.touching->first),
                                                  simplex_json(rep.touching->second)})}};
  }
  if (rep.links_computed) {
    r.payload["lk"] = {{"sphere_p_parallel", rep.lk_pp},
                       {"sphere_p_meridian", rep.lk_pm},
                       {"sphere_m_meridian", rep.lk_mm},
                       {"sphere_m_parallel", rep.lk_mp}};
  }
  r.payload["properties"] = {{"pairwise_disjoint", rep.property1},
                             {"sphere_p_links", rep.property2},
                             {"sphere_m_links", rep.property3}};
  r.transcript.push_back(std::string("disjoint: ") + (rep.disjoint ? "yes" : "no"));
  if (rep.links_computed) {
    std::ostringstream os;
    os << "linking bits (pp, pm, mm, mp): (" << rep.lk_pp << "," << rep.lk_pm << ","
       << rep.lk_mm << "," << rep.lk_mp << ")";
    r.transcript.push_back(os.str());
  }
  if (!rep.all_properties()) r.status = "violation";
  return r;
}

CommandResult run_leibniz(const Options& opt) {
  const auto cfg = config_from_json(read_json_file(input_at(opt, 0, "borromean config")));
  const auto rep = leibniz_terms(cfg);
  CommandResult r;
  r.payload["terms"] = rep.terms;
  r.payload["sum_mod2"] = rep.terms[0] ^ rep.terms[1] ^ rep.terms[2];
  r.payload["apex_round"] = rep.apex_round;
  r.payload["counterexample_alarm"] = rep.counterexample_alarm();
  std::ostringstream os;
  os << "terms (" << rep.terms[0] << "," << rep.terms[1] << "," << rep.terms[2] << ")";
  r.transcript.push_back(os.str());
  if (!rep.sum_even() || rep.counterexample_alarm()) {
    r.status = "violation";
    r.transcript.push_back("identity violated; keep the configuration for reproduction");
  }
  return r;
}

CommandResult run_lemma_eq(const Options& opt) {
  const auto p = polytope_chain_from_json(read_json_file(input_at(opt, 0, "polytope chain")));
  const auto out = lemma_eq_cycle(p, RefineOptions{opt.max_cells});
  CommandResult r;
  switch (out.status) {
    case LemmaEqOutcome::Status::cycle:
      r.payload["cycle"] = chain_to_json(out.cycle);
      r.artifact = r.payload["cycle"];
      r.transcript.push_back("simplicial cycle with " + std::to_string(out.cycle.size()) +
                             " simplices");
      break;
    case LemmaEqOutcome::Status::hyp1_violation:
      r.status = "violation";
      r.payload["hypothesis"] = 1;
      r.payload["witness"] = {{"pair", json::array({polytope_json(out.offending_pair.first),
                                                    polytope_json(out.offending_pair.second)})}};
      r.transcript.push_back(out.detail);
      break;
    case LemmaEqOutcome::Status::hyp2_violation:
      r.status = "violation";
      r.payload["hypothesis"] = 2;
      r.payload["witness"] = {{"cell", polytope_json(out.offending_cell)}};
      r.transcript.push_back(out.detail);
      break;
    case LemmaEqOutcome::Status::refinement_failure:
      r.status = "violation";
      r.payload["hypothesis"] = 0;
      r.payload["witness"] = {{"pair", json::array({polytope_json(out.offending_pair.first),
                                                    polytope_json(out.offending_pair.second)})}};
      r.transcript.push_back(out.detail);
      break;
  }
  return r;
}

CommandResult run_reduce(const Options& opt, const std::string& plan_file) {
  std::ifstream in(input_at(opt, 0, "dimacs formula"));
  if (!in) throw input_error("cannot open '" + opt.inputs[0] + "'");
  const CnfFormula phi = parse_dimacs(in);
  if (opt.k < 0 || opt.d < 0) throw input_error("reduce: --k and --d are required");
  const LinkagePlan plan =
      plan_file.empty() ? default_plan(phi) : plan_from_json(read_json_file(plan_file));
  const AssembledComplex out = assemble_k_phi(phi, opt.k, opt.d, plan);
  CommandResult r;
  r.payload["complex"] = complex_to_json(out.complex);
  r.artifact = r.payload["complex"];
  json gadgets = json::array();
  for (const auto& [id, where] : out.gadgets)
    gadgets.push_back({{"id", id}, {"block", where}});
  r.payload["provenance"] = {
      {"gadgets", std::move(gadgets)},
      {"plan", plan_to_json(out.plan)},
      {"convention",
       "identify-boundary-sphere: default plan-builder convention (placeholder wiring; "
       "one sphere per literal occurrence, one torus per complementary occurrence pair)"}};
  r.transcript.push_back("assembled complex: dimension " + std::to_string(out.complex.dim()) +
                         ", " + std::to_string(out.complex.facets.size()) + " facets");
  return r;
}

int emit(const CommandResult& r, const Options& opt, const std::string& reduce_sidecar) {
  json j;
  j["status"] = r.status;
  j["payload"] = r.payload;
  j["transcript"] = r.transcript;
  const std::string text = j.dump(2) + "\n";
  std::cout << text;
  if (!opt.out.empty()) {
    std::ofstream out(opt.out);
    if (!out) throw input_error("cannot write '" + opt.out + "'");
    out << (r.artifact.is_null() ? text : r.artifact.dump(2) + "\n");
    if (!reduce_sidecar.empty() && r.payload.contains("provenance")) {
      std::ofstream side(reduce_sidecar);
      if (!side) throw input_error("cannot write '" + reduce_sidecar + "'");
      side << r.payload["provenance"].dump(2) << "\n";
    }
  }
  if (r.status == "ok") return 0;
  if (r.status == "violation") return 2;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact mod-2 PL-topology toolkit"};
  app.require_subcommand(0, 1);
  bool schema = false;
  app.add_flag("--schema", schema, "print the JSON schemas and exit");

  Options opt;
  std::string plan_file;
  std::vector<std::pair<CLI::App*, std::function<CommandResult()>>> runners;
  auto add = [&](const char* name, const char* desc, std::function<CommandResult()> fn,
                 bool takes_inputs = true) {
    CLI::App* sub = app.add_subcommand(name, desc);
    if (takes_inputs) sub->add_option("--in", opt.inputs, "input file (repeatable)");
    sub->add_option("--out", opt.out, "write the result (or artifact) to this file");
    sub->add_option("--k", opt.k, "dimension parameter k");
    sub->add_option("--l", opt.l, "dimension parameter l");
    sub->add_option("--d", opt.d, "ambient dimension parameter d");
    sub->add_option("--seed", opt.seed,
                    "seed for randomized generation (all shipped subcommands are "
                    "deterministic; recorded for reproducibility)");
    sub->add_option("--cap", opt.cap, "strong-general-position enumeration cap");
    sub->add_option("--max-cells", opt.max_cells, "arrangement refinement cell cap");
    runners.push_back({sub, std::move(fn)});
    return sub;
  };

  add("gen-sphere", "standard triangulation of a sphere (boundary of a simplex)",
      [&] { return run_gen_sphere(opt); }, false);
  add("gen-torus", "staircase 2l-torus with marked meridian and parallel",
      [&] { return run_gen_torus(opt); }, false);
  add("gen-remark-a", "the explicit l=0 three-component configuration",
      [&] { return run_gen_remark_a(opt); }, false);
  add("deleted-product", "deleted product of a complex", [&] { return run_deleted_product(opt); });
  add("boundary", "mod-2 boundary of a chain", [&] { return run_boundary(opt); });
  add("check-cycle", "is the chain a cycle", [&] { return run_check_cycle(opt); });
  add("check-simplicial", "do chain simplices meet in common faces",
      [&] { return run_check_simplicial(opt); });
  add("check-gp", "general position of a point set", [&] { return run_check_gp(opt); });
  add("check-sgp", "strong general position of a point set",
      [&] { return run_check_sgp(opt); });
  add("resimplicialize", "rebuild a chain simplicially against a point set",
      [&] { return run_resimplicialize(opt); });
  add("preimage", "preimage of a cycle under a PL map", [&] { return run_preimage(opt); });
  add("linking", "mod-2 linking number of two cycles", [&] { return run_linking(opt); });
  add("borromean-check", "check the three-component linking properties",
      [&] { return run_borromean_check(opt); });
  add("leibniz", "the three product-rule boundary terms of a configuration",
      [&] { return run_leibniz(opt); });
  add("lemma-eq", "verify/extract a simplicial cycle from a polytope chain",
      [&] { return run_lemma_eq(opt); });
  CLI::App* red = add("reduce", "assemble the instance complex from a DIMACS formula",
                      [&] { return run_reduce(opt, plan_file); });
  red->add_option("--plan", plan_file, "linkage plan JSON (defaults to the built-in plan)");

  CLI11_PARSE(app, argc, argv);

  if (schema) {
    std::cout << schemas_json().dump(2) << "\n";
    return 0;
  }
  for (auto& [sub, fn] : runners) {
    if (!sub->parsed()) continue;
    const std::string sidecar =
        (sub->get_name() == "reduce" && !opt.out.empty()) ? opt.out + ".provenance.json" : "";
    try {
      return emit(fn(), opt, sidecar);
    } catch (const error& e) {
      CommandResult r;
      r.status = "error";
      r.payload["reason"] = e.what();
      return emit(r, opt, "");
    }
  }
  std::cout << app.help();
  return 1;
}
