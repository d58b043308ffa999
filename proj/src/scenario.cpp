#include "xmodcat/scenario.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "xmodcat/abelian.hpp"
#include "xmodcat/catalog.hpp"
#include "xmodcat/cohomology.hpp"
#include "xmodcat/error.hpp"
#include "xmodcat/exec.hpp"
#include "xmodcat/extension.hpp"
#include "xmodcat/functor.hpp"

namespace xmodcat {

namespace {

using io::Json;

struct Claims {
  Json list = Json::array();
  void add(const std::string& name, bool pass, const std::string& detail = "") {
    Json c = {{"name", name}, {"pass", pass}};
    if (!detail.empty()) c["detail"] = detail;
    list.push_back(c);
  }
  void add_report(const std::string& prefix, const AxiomReport& r) {
    for (const auto& c : r.checks)
      if (!c.informational)
        add(prefix + c.name, c.pass(), c.pass() ? "" : "first witness " + format_witness(c.witnesses.front()));
  }
  bool all_pass() const {
    return std::all_of(list.begin(), list.end(), [](const Json& c) { return c["pass"].get<bool>(); });
  }
};

struct Context {
  const Json& inputs;
  std::uint64_t guard;
  Json result = Json::object();
  Claims claims;
};

const Json& need(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorKind::SchemaError, where + ": missing field '" + key + "'");
  return j[key];
}

BraidedGammaCrossedModule raw_module(const Json& in, const char* key) {
  const Json& j = need(in, key, "inputs");
  if (j.is_string()) return *catalog_module(j.get<std::string>());
  return io::module_from_json(j, std::string("inputs.") + key);
}

ValidatedModule module_input(const Json& in, const char* key = "module") { return ValidatedModule(raw_module(in, key)); }

std::vector<Elem> psi_input(const Json& in, const ValidatedModule& m, const GammaModule& q) {
  if (!in.contains("psi")) return std::vector<Elem>(q.target.order(), 0);
  auto psi = io::int_list(in["psi"], "inputs.psi");
  const int nc = m.coker_d().group.order();
  if (psi.size() != static_cast<std::size_t>(q.target.order()) ||
      std::any_of(psi.begin(), psi.end(), [&](Elem x) { return x < 0 || x >= nc; }))
    throw Error(ErrorKind::SchemaError, "inputs.psi: expected one Coker d class per element of Q");
  if (!check_hom({q.target, m.coker_d().group, psi}) || !is_equivariant({q.target, m.coker_d().group, psi}, q, m.pi0()))
    throw Error(ErrorKind::SchemaError, "inputs.psi: not a Gamma-module homomorphism Q -> Coker d");
  return psi;
}

void run_validate(Context& c) {
  const auto m = raw_module(c.inputs, "module");
  const AxiomReport r = validate(m);
  c.result["checks"] = io::to_json(r);
  c.result["validated"] = r.all_pass();
  c.claims.add("validated", r.all_pass(), r.all_pass() ? "" : "failing " + r.failing().front());
  if (r.all_pass()) {
    c.result["symmetric"] = is_symmetric(m);
    c.result["abelian"] = is_abelian(m);
  }
}

void run_build(Context& c) {
  const auto m = module_input(c.inputs);
  const GradedCatGroup g = build_catgroup(m);
  c.result["objects"] = g.objects;
  c.result["morphisms"] = g.size();
  const bool count_ok = g.size() == m->nb() * m->nd() * m->ng();
  c.claims.add("morphism_count", count_ok, "|B||D||Gamma| = " + std::to_string(m->nb() * m->nd() * m->ng()));
  if (c.inputs.value("emit_category", false)) c.result["category"] = io::to_json(g);
  const AxiomReport r = check_axioms(g);
  c.result["axioms"] = io::to_json(r);
  c.claims.add_report("axiom:", r);
}

void run_check_axioms(Context& c) {
  if (c.inputs.contains("random")) {
    const Json& rnd = c.inputs["random"];
    const int count = rnd.value("count", 100);
    const int max_order = rnd.value("max_order", 8);
    const std::uint64_t seed = seed_from_env(rnd.value("seed", std::uint64_t{1}));
    std::mt19937_64 rng(seed);
    int failed = 0;
    Json failures = Json::array();
    for (int i = 0; i < count; ++i) {
      const auto raw = random_module(rng, max_order);
      const AxiomReport v = validate(raw);
      const AxiomReport r = v.all_pass() ? check_axioms(build_catgroup(ValidatedModule(raw))) : v;
      if (!r.all_pass()) {
        ++failed;
        failures.push_back({{"index", i}, {"failing", r.failing()}});
      }
    }
    c.result["seed"] = seed;
    c.result["count"] = count;
    c.result["failures"] = failures;
    c.claims.add("random_modules_coherent", failed == 0, std::to_string(failed) + " failures");
    return;
  }
  GradedCatGroup g;
  if (c.inputs.contains("reduced")) {
    g = build_reduced(io::cochain3_from_json(c.inputs["reduced"], "inputs.reduced"));
  } else {
    g = build_catgroup(module_input(c.inputs));
  }
  const AxiomReport r = check_axioms(g);
  c.result["objects"] = g.objects;
  c.result["morphisms"] = g.size();
  c.result["axioms"] = io::to_json(r);
  c.claims.add_report("axiom:", r);
}

void run_factor_set(Context& c) {
  const auto m = module_input(c.inputs);
  const GradedCatGroup g = build_catgroup(m);
  const FactorSet fs = extract_factor_set(g, g.lifts);
  const AxiomReport r = check_factor_set(g, fs);
  c.result["checks"] = io::to_json(r);
  const bool regular = is_regular_factor_set(g, fs);
  c.result["regular"] = regular;
  c.claims.add_report("factor_set:", r);
  c.claims.add("regular", regular);
}

void run_h2(Context& c) {
  const GammaModule q = io::gamma_module_from_json(need(c.inputs, "Q", "inputs"), "inputs.Q");
  const GammaModule b = io::gamma_module_from_json(need(c.inputs, "B", "inputs"), "inputs.B");
  if (!(q.gamma == b.gamma)) throw Error(ErrorKind::SchemaError, "inputs: Q and B have different gamma");
  const H2Linear lin(q, b);
  c.result["invariants"] = lin.invariants();
  c.result["order"] = lin.order();
  Json reps = Json::array();
  for (const auto& f : lin.representatives()) reps.push_back(io::to_json(f));
  c.result["representatives"] = reps;
  if (c.inputs.value("cross_check", true)) {
    const H2Brute brute = h2_brute(q, b, c.guard);
    c.result["brute_class_count"] = brute.class_count();
    c.result["brute_invariants"] = brute.invariants;
    const std::string diff = h2_paths_agree(lin, brute);
    c.claims.add("paths_agree", diff.empty(), diff);
  }
}

void run_obstruction(Context& c) {
  const Cochain3 h = io::cochain3_from_json(need(c.inputs, "h", "inputs"), "inputs.h");
  const Cochain3 h2 = io::cochain3_from_json(need(c.inputs, "h_prime", "inputs"), "inputs.h_prime");
  const auto phi = io::int_list(need(c.inputs, "phi", "inputs"), "inputs.phi");
  const auto f = io::int_list(need(c.inputs, "f", "inputs"), "inputs.f");
  if (phi.size() != static_cast<std::size_t>(h.m()) || f.size() != static_cast<std::size_t>(h.N.target.order()))
    throw Error(ErrorKind::SchemaError, "inputs: phi or f has the wrong size");
  for (Elem x : phi)
    if (x < 0 || x >= h2.m()) throw Error(ErrorKind::SchemaError, "inputs.phi: entry out of range");
  for (Elem x : f)
    if (x < 0 || x >= h2.N.target.order()) throw Error(ErrorKind::SchemaError, "inputs.f: entry out of range");
  c.claims.add("h_is_3cocycle", is_3cocycle(h));
  c.claims.add("h_prime_is_3cocycle", is_3cocycle(h2));
  const Cochain3 k = obstruction(phi, f, h, h2);
  c.result["k"] = io::to_json(k);
  c.claims.add("k_is_3cocycle", is_3cocycle(k));
  c.result["vanishes"] = class_vanishes(k, c.guard);
}

void run_schreier(Context& c) {
  const auto m = module_input(c.inputs);
  const GammaModule q = io::gamma_module_from_json(need(c.inputs, "Q", "inputs"), "inputs.Q");
  const auto psi = psi_input(c.inputs, m, q);
  const SchreierReport r = schreier_bijection_check(m, q, psi, c.guard);
  c.result["functor_classes"] = r.functor_classes;
  c.result["extension_classes"] = r.extension_classes;
  c.result["functors"] = r.functors;
  c.result["extensions"] = r.extensions;
  c.result["checks"] = io::to_json(r.checks);
  c.claims.add("cardinalities_match", r.functor_classes == r.extension_classes);
  c.claims.add_report("", r.checks);
}

void run_classify(Context& c) {
  const auto m = module_input(c.inputs);
  const GammaModule q = io::gamma_module_from_json(need(c.inputs, "Q", "inputs"), "inputs.Q");
  const auto psi = psi_input(c.inputs, m, q);
  const Classification cl = classify(m, q, psi, c.guard);
  c.result["obstructed"] = cl.obstructed;
  c.result["h2_invariants"] = cl.h2_invariants;
  c.result["class_count"] = cl.class_count;
  Json reps = Json::array();
  for (const auto& e : cl.representatives) reps.push_back(io::to_json(e));
  c.result["representatives"] = reps;
  c.result["enumerated_count"] = cl.enumerated_count;
  if (cl.enumerated_count >= 0)
    c.claims.add("count_matches_enumeration", static_cast<long>(cl.class_count) == cl.enumerated_count);
  bool distinct = true;
  for (std::size_t i = 0; i < cl.representatives.size(); ++i)
    for (std::size_t j = i + 1; j < cl.representatives.size(); ++j)
      if (are_equivalent(cl.representatives[i], cl.representatives[j], c.guard)) distinct = false;
  c.claims.add("representatives_inequivalent", distinct);
}

void run_roundtrip(Context& c) {
  const auto m = module_input(c.inputs);
  const auto target = c.inputs.contains("target") ? module_input(c.inputs, "target") : m;
  const GradedCatGroup g = build_catgroup(m);
  const ValidatedModule back = catgroup_to_crossed(g);
  c.claims.add("module_rebuild", back == m);
  c.claims.add("category_rebuild", build_catgroup(back) == g);
  const GradedCatGroup gt = build_catgroup(target);
  const auto morphisms = enumerate_morphisms(m, target, c.guard);
  std::size_t there = 0, back_again = 0;
  for (const auto& f : morphisms) {
    const GradedFunctor F = morphism_to_functor(f, m, target, g, gt);
    const CrossedMorphism f2 = functor_to_morphism(F, m, target, g, gt);
    if (f2 == f) ++there;
    if (morphism_to_functor(f2, m, target, g, gt) == F) ++back_again;
  }
  c.result["morphisms"] = morphisms.size();
  c.claims.add("morphism_functor_morphism", there == morphisms.size(),
               std::to_string(there) + "/" + std::to_string(morphisms.size()));
  c.claims.add("functor_morphism_functor", back_again == morphisms.size(),
               std::to_string(back_again) + "/" + std::to_string(morphisms.size()));
}

void apply_expectations(Context& c, const Json& expect) {
  if (!expect.is_object()) throw Error(ErrorKind::SchemaError, "expect: expected an object");
  for (auto it = expect.begin(); it != expect.end(); ++it) {
    // Either a result field or the name of a claim whose verdict is asserted.
    auto claim = std::find_if(c.claims.list.begin(), c.claims.list.end(),
                              [&](const Json& x) { return x["name"] == it.key(); });
    if (claim != c.claims.list.end() && it.value().is_boolean()) {
      const bool got = (*claim)["pass"].get<bool>();
      (*claim)["expected"] = it.value();
      (*claim)["pass"] = got == it.value().get<bool>();
      continue;
    }
    if (!c.result.contains(it.key())) throw Error(ErrorKind::SchemaError, "expect: unknown field '" + it.key() + "'");
    const bool ok = c.result[it.key()] == it.value();
    c.claims.add("expect:" + it.key(), ok, ok ? "" : "got " + c.result[it.key()].dump());
  }
}

std::string text_of(const Json& report) {
  std::ostringstream os;
  os << report["kind"].get<std::string>();
  if (report.contains("name")) os << " " << report["name"].get<std::string>();
  os << ": " << report["status"].get<std::string>() << "\n";
  if (report.contains("error")) os << "  error: " << report["error"].get<std::string>() << "\n";
  if (report.contains("claims"))
    for (const auto& cl : report["claims"]) {
      os << "  " << cl["name"].get<std::string>() << ": " << (cl["pass"].get<bool>() ? "pass" : "FAIL");
      if (cl.contains("detail")) os << " (" << cl["detail"].get<std::string>() << ")";
      os << "\n";
    }
  if (report.contains("result"))
    for (auto it = report["result"].begin(); it != report["result"].end(); ++it)
      if (it.value().is_primitive() || (it.value().is_array() && it.value().size() <= 8 &&
                                        std::all_of(it.value().begin(), it.value().end(),
                                                    [](const Json& x) { return x.is_primitive(); })))
        os << "  " << it.key() << " = " << it.value().dump() << "\n";
  return os.str();
}

}  // namespace

ScenarioOutcome run_scenario(const Json& scenario, const RunOptions& options) {
  ScenarioOutcome out;
  Json& rep = out.report;
  rep["schema_version"] = kSchemaVersion;
  rep["kind"] = scenario.is_object() && scenario.contains("kind") && scenario["kind"].is_string()
                    ? scenario["kind"].get<std::string>()
                    : std::string("unknown");
  if (scenario.is_object() && scenario.contains("name") && scenario["name"].is_string()) rep["name"] = scenario["name"];
  try {
    if (!scenario.is_object()) throw Error(ErrorKind::SchemaError, "scenario must be an object");
    if (!scenario.contains("schema_version") || scenario["schema_version"] != kSchemaVersion)
      throw Error(ErrorKind::SchemaError, "schema_version must be " + std::to_string(kSchemaVersion));
    const std::string kind = need(scenario, "kind", "scenario").get<std::string>();
    const Json empty = Json::object();
    const Json& opts = scenario.contains("options") ? scenario["options"] : empty;
    std::uint64_t guard = opts.value("guard", kDefaultGuard);
    if (options.guard) guard = *options.guard;
    const int threads = options.threads.value_or(opts.value("threads", 0));
    if (threads > 0) set_thread_count(threads);
    Context c{need(scenario, "inputs", "scenario"), guard, Json::object(), Claims{}};
    if (kind == "validate") run_validate(c);
    else if (kind == "build-catgroup") run_build(c);
    else if (kind == "check-axioms") run_check_axioms(c);
    else if (kind == "factor-set") run_factor_set(c);
    else if (kind == "cohomology-h2") run_h2(c);
    else if (kind == "obstruction") run_obstruction(c);
    else if (kind == "schreier") run_schreier(c);
    else if (kind == "classify") run_classify(c);
    else if (kind == "roundtrip") run_roundtrip(c);
    else throw Error(ErrorKind::SchemaError, "unknown kind '" + kind + "'");
    if (scenario.contains("expect")) apply_expectations(c, scenario["expect"]);
    rep["result"] = c.result;
    rep["claims"] = c.claims.list;
    const bool pass = c.claims.all_pass();
    rep["status"] = pass ? "pass" : "fail";
    out.exit_code = pass ? 0 : 1;
  } catch (const Error& e) {
    const bool guard_trip = e.kind() == ErrorKind::SearchSpaceTooLarge;
    rep["status"] = guard_trip ? "guard" : "input-error";
    rep["error"] = e.what();
    out.exit_code = guard_trip ? 3 : 2;
  } catch (const Json::exception& e) {
    rep["status"] = "input-error";
    rep["error"] = std::string("SchemaError: ") + e.what();
    out.exit_code = 2;
  }
  out.text = text_of(rep);
  return out;
}

ScenarioOutcome run_scenario_text(const std::string& text, const RunOptions& options) {
  try {
    return run_scenario(io::parse(text), options);
  } catch (const Error& e) {
    ScenarioOutcome out;
    out.exit_code = 2;
    out.report = {{"schema_version", kSchemaVersion}, {"kind", "unknown"}, {"status", "input-error"}, {"error", e.what()}};
    out.text = text_of(out.report);
    return out;
  }
}

}  // namespace xmodcat
