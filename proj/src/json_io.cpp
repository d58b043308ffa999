#include "xmodcat/json_io.hpp"

#include "xmodcat/abelian.hpp"
#include "xmodcat/error.hpp"

namespace xmodcat::io {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::SchemaError, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(where, std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::vector<Elem>> rows_of(const Json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array of rows");
  std::vector<std::vector<Elem>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(int_list(j[i], where + "[" + std::to_string(i) + "]"));
  return rows;
}

std::vector<std::vector<Elem>> split(const std::vector<Elem>& flat, std::size_t width) {
  std::vector<std::vector<Elem>> rows;
  if (width == 0) return rows;
  for (std::size_t i = 0; i < flat.size(); i += width) rows.emplace_back(flat.begin() + i, flat.begin() + i + width);
  return rows;
}

std::vector<Elem> rows_flat(const Json& j, std::size_t rows, std::size_t cols, int bound, const std::string& where) {
  const auto r = rows_of(j, where);
  if (r.size() != rows) schema(where, "expected " + std::to_string(rows) + " rows");
  std::vector<Elem> out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].size() != cols) schema(where + "[" + std::to_string(i) + "]", "expected " + std::to_string(cols) + " entries");
    for (Elem x : r[i]) {
      if (x < 0 || x >= bound) schema(where + "[" + std::to_string(i) + "]", "entry out of range");
      out.push_back(x);
    }
  }
  return out;
}

std::vector<Elem> sized(const Json& j, std::size_t n, int bound, const std::string& where) {
  auto v = int_list(j, where);
  if (v.size() != n) schema(where, "expected " + std::to_string(n) + " entries");
  for (Elem x : v)
    if (x < 0 || x >= bound) schema(where, "entry out of range");
  return v;
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::vector<Elem> int_list(const Json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array of integers");
  std::vector<Elem> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) schema(where, "expected an integer");
    v.push_back(x.get<Elem>());
  }
  return v;
}

std::vector<Elem> flat_table(const Json& j, const std::string& where) {
  std::vector<Elem> out;
  for (const auto& r : rows_of(j, where)) out.insert(out.end(), r.begin(), r.end());
  return out;
}

Json to_json(const FiniteGroup& g) { return {{"order", g.order()}, {"table", g.rows()}}; }

FiniteGroup group_from_json(const Json& j, const std::string& where) {
  if (j.is_object() && j.contains("name")) {
    if (!j["name"].is_string()) schema(where + ".name", "expected a string");
    try {
      return named_group(j["name"].get<std::string>());
    } catch (const std::exception& e) {
      schema(where + ".name", e.what());
    }
  }
  const auto rows = rows_of(field(j, "table", where), where + ".table");
  if (j.contains("order") && (!j["order"].is_number_integer() || j["order"].get<std::size_t>() != rows.size()))
    schema(where + ".order", "does not match the table");
  return FiniteGroup::from_table(rows);
}

Json to_json(const GammaModule& m) {
  return {{"group", to_json(m.target)}, {"gamma", to_json(m.gamma)}, {"act", m.rows()}};
}

GammaModule gamma_module_from_json(const Json& j, const std::string& where) {
  const FiniteGroup g = group_from_json(field(j, "group", where), where + ".group");
  const FiniteGroup gamma = j.contains("gamma") ? group_from_json(j["gamma"], where + ".gamma") : FiniteGroup();
  if (!j.contains("act")) return trivial_action(gamma, g);
  GammaModule m{gamma, g, rows_flat(j["act"], gamma.order(), g.order(), g.order(), where + ".act")};
  if (!is_module(m)) schema(where, "not a Gamma-module (abelian group with an action by automorphisms)");
  return m;
}

Json to_json(const BraidedGammaCrossedModule& m) {
  return {{"B", to_json(m.B)},
          {"D", to_json(m.D)},
          {"d", m.d},
          {"theta", split(m.theta, m.nb())},
          {"eta", split(m.eta, m.nd())},
          {"gamma", to_json(m.gamma)},
          {"actB", split(m.act_b, m.nb())},
          {"actD", split(m.act_d, m.nd())}};
}

BraidedGammaCrossedModule module_from_json(const Json& j, const std::string& where) {
  BraidedGammaCrossedModule m;
  m.B = group_from_json(field(j, "B", where), where + ".B");
  m.D = group_from_json(field(j, "D", where), where + ".D");
  m.gamma = j.contains("gamma") ? group_from_json(j["gamma"], where + ".gamma") : FiniteGroup();
  const int nb = m.nb(), nd = m.nd(), ng = m.ng();
  m.d = sized(field(j, "d", where), nb, nd, where + ".d");
  if (j.contains("theta")) {
    m.theta = rows_flat(j["theta"], nd, nb, nb, where + ".theta");
  } else {
    for (Elem x = 0; x < nd; ++x)
      for (Elem b = 0; b < nb; ++b) m.theta.push_back(b);
  }
  m.eta = j.contains("eta") ? rows_flat(j["eta"], nd, nd, nb, where + ".eta")
                            : std::vector<Elem>(static_cast<std::size_t>(nd) * nd, 0);
  m.act_b = j.contains("actB") ? rows_flat(j["actB"], ng, nb, nb, where + ".actB") : trivial_action(m.gamma, m.B).act;
  m.act_d = j.contains("actD") ? rows_flat(j["actD"], ng, nd, nd, where + ".actD") : trivial_action(m.gamma, m.D).act;
  return m;
}

Json to_json(const SymmetricCochain2& f) {
  return {{"domain", "Q2+QGamma"},
          {"values", {{"pairs", split(f.pairs, f.Q.target.order())}, {"grades", split(f.grades, f.Q.gamma.order())}}}};
}

SymmetricCochain2 cochain2_from_json(const Json& j, const GammaModule& q, const GammaModule& b,
                                     const std::string& where) {
  if (j.contains("domain") && j["domain"] != "Q2+QGamma") schema(where + ".domain", "expected \"Q2+QGamma\"");
  const Json& v = field(j, "values", where);
  SymmetricCochain2 f = SymmetricCochain2::zero(q, b);
  const int nq = q.target.order(), nb = b.target.order();
  if (v.contains("pairs")) f.pairs = rows_flat(v["pairs"], nq, nq, nb, where + ".values.pairs");
  if (v.contains("grades")) f.grades = rows_flat(v["grades"], nq, q.gamma.order(), nb, where + ".values.grades");
  return f;
}

Json to_json(const Cochain3& h) {
  return {{"M", to_json(h.M)},
          {"N", to_json(h.N)},
          {"values", {{"assoc", h.assoc}, {"braid", h.braid}, {"tensor", h.tensor}, {"compose", h.compose}}}};
}

Cochain3 cochain3_from_json(const Json& j, const std::string& where) {
  const GammaModule M = gamma_module_from_json(field(j, "M", where), where + ".M");
  const GammaModule N = gamma_module_from_json(field(j, "N", where), where + ".N");
  if (!(M.gamma == N.gamma)) schema(where, "M and N have different gamma");
  Cochain3 h = Cochain3::zero(M, N);
  if (!j.contains("values")) return h;
  const Json& v = j["values"];
  const int n = N.target.order();
  if (v.contains("assoc")) h.assoc = sized(v["assoc"], h.assoc.size(), n, where + ".values.assoc");
  if (v.contains("braid")) h.braid = sized(v["braid"], h.braid.size(), n, where + ".values.braid");
  if (v.contains("tensor")) h.tensor = sized(v["tensor"], h.tensor.size(), n, where + ".values.tensor");
  if (v.contains("compose")) h.compose = sized(v["compose"], h.compose.size(), n, where + ".values.compose");
  return h;
}

Json to_json(const GradedCatGroup& g) {
  Json mor = Json::array();
  for (const auto& m : g.morphisms) mor.push_back({m.src, m.dst, m.payload, m.grade});
  return {{"objects", g.objects},
          {"payloads", g.payloads},
          {"gamma_order", g.ng()},
          {"morphisms", mor},
          {"tensor", {{"objects", split(g.object_tensor, g.objects)}, {"morphisms", split(g.tensor_table, g.size())}}},
          {"compose", split(g.compose_table, g.size())},
          {"constraints",
           {{"unit", g.unit},
            {"identities", g.identities},
            {"assoc", g.assoc},
            {"left_unit", g.left_unit},
            {"right_unit", g.right_unit},
            {"braiding", g.braiding},
            {"unit_functor", g.unit_functor},
            {"lifts", g.lifts}}}};
}

Json to_json(const AxiomReport& r) {
  Json out = Json::array();
  for (const auto& c : r.checks) {
    Json item = {{"name", c.name}, {"pass", c.pass()}, {"failures", c.failures}, {"witnesses", c.witnesses}};
    if (c.informational) item["informational"] = true;
    out.push_back(item);
  }
  return out;
}

Json to_json(const GammaModuleExtension& e) {
  return {{"E", to_json(e.E)},
          {"invariants", abelian_invariants(e.E.target)},
          {"j", e.j},
          {"p", e.p},
          {"eps", e.eps}};
}

Json to_json(const CrossedMorphism& m) { return {{"f1", m.f1}, {"f0", m.f0}, {"phi", to_json(m.phi)}}; }

}  // namespace xmodcat::io
