#include "xmodcat/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "xmodcat/abelian.hpp"
#include "xmodcat/error.hpp"

namespace xmodcat {

GammaAction inner_involution(const FiniteGroup& g, Elem x) {
  const auto z = center(g);
  if (!std::binary_search(z.begin(), z.end(), g.mul(x, x)))
    throw Error(ErrorKind::WrongType, "conjugation by this element is not an involution");
  std::vector<std::vector<Elem>> rows(2);
  for (Elem y = 0; y < g.order(); ++y) {
    rows[0].push_back(y);
    rows[1].push_back(g.conjugate(x, y));
  }
  return make_action(cyclic_group(2), g, rows);
}

std::vector<ElemSet> all_subgroups(const FiniteGroup& g) {
  if (g.order() > 64) throw Error(ErrorKind::SearchSpaceTooLarge, "subgroup lattice of a group above order 64");
  std::set<ElemSet> found{{0}};
  std::vector<ElemSet> frontier{{0}};
  while (!frontier.empty()) {
    std::vector<ElemSet> next;
    for (const auto& h : frontier)
      for (Elem x = 0; x < g.order(); ++x) {
        if (std::binary_search(h.begin(), h.end(), x)) continue;
        ElemSet gens = h;
        gens.push_back(x);
        auto s = subgroup_generated(g, gens);
        if (found.insert(s).second) next.push_back(std::move(s));
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

namespace {

Elem least_noncentral(const FiniteGroup& g) {
  const auto z = center(g);
  for (Elem x = 0; x < g.order(); ++x)
    if (!std::binary_search(z.begin(), z.end(), x)) return x;
  return 0;
}

ElemSet elements_of_order_dividing(const FiniteGroup& g, int n) {
  ElemSet s;
  for (Elem x = 0; x < g.order(); ++x)
    if (n % g.element_order(x) == 0) s.push_back(x);
  return s;
}

void add_conjugation(std::vector<NamedModule>& out, const std::string& name, const FiniteGroup& g, const ElemSet& n) {
  out.push_back({name, conjugation_module(g, n)});
  out.push_back({name + "+Z2", conjugation_module(inner_involution(g, least_noncentral(g)), n)});
}

GammaModule triv(const FiniteGroup& g) { return trivial_action(FiniteGroup(), g); }

}  // namespace

std::vector<NamedModule> catalog_modules() {
  std::vector<NamedModule> out;
  const auto s3 = symmetric_group3();
  add_conjugation(out, "S3/A3", s3, elements_of_order_dividing(s3, 3));
  const auto q8 = quaternion_group();
  Elem i4 = 0;
  while (q8.element_order(i4) != 4) ++i4;
  add_conjugation(out, "Q8/<i>", q8, subgroup_generated(q8, {i4}));
  // Index 2, contains the center, generated by the center and a reflection.
  const auto d4 = dihedral_group(4);
  const auto z = center(d4);
  ElemSet v4;
  for (Elem x = 0; x < d4.order() && v4.empty(); ++x)
    if (d4.element_order(x) == 2 && !std::binary_search(z.begin(), z.end(), x)) v4 = subgroup_generated(d4, {z[1], x});
  add_conjugation(out, "D4/V4", d4, v4);
  out.push_back({"S3/S3", conjugation_module(s3, subgroup_generated(s3, {1, 2}))});
  out.push_back({"Z4/1", conjugation_module(cyclic_group(4), {0})});

  const auto z2 = cyclic_group(2), z4 = cyclic_group(4), one = FiniteGroup();
  out.push_back({"Z2->0", ValidatedModule(abelian_module(triv(z2), triv(one), {0, 0}))});
  out.push_back({"Z2=Z2", ValidatedModule(abelian_module(triv(z2), triv(z2), {0, 1}))});
  out.push_back({"Z2-0->Z2", ValidatedModule(abelian_module(triv(z2), triv(z2), {0, 0}))});
  out.push_back({"Z2->Z4", ValidatedModule(abelian_module(triv(z2), triv(z4), {0, 2}))});
  out.push_back({"Z4->Z2", ValidatedModule(abelian_module(triv(z4), triv(z2), {0, 1, 0, 1}))});
  const auto neg4 = make_action(z2, z4, {{0, 1, 2, 3}, {0, 3, 2, 1}});
  out.push_back({"Z4(-)->0", ValidatedModule(abelian_module(neg4, trivial_action(z2, one), {0, 0, 0, 0}))});
  const auto swap = make_action(z2, klein_four_group(), {{0, 1, 2, 3}, {0, 2, 1, 3}});
  out.push_back({"Z2->V4(swap)", ValidatedModule(abelian_module(trivial_action(z2, z2), swap, {0, 3}))});
  // eta(x,y) = xy on Z2, d = 0: braided, symmetric since 2 = 0.
  out.push_back({"Z2-0->Z2,eta=xy", ValidatedModule(module_with_eta(triv(z2), triv(z2), {0, 0}, {0, 0, 0, 1}))});
  return out;
}

ValidatedModule catalog_module(const std::string& name) {
  for (auto& m : catalog_modules())
    if (m.name == name) return m.module;
  throw Error(ErrorKind::SchemaError, "unknown catalog module '" + name + "'");
}

namespace {

template <class T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

bool involutive(const GroupHom& a) {
  for (Elem x = 0; x < a.domain.order(); ++x)
    if (a(a(x)) != x) return false;
  return true;
}

// Identity plus the involutive automorphisms keeping every set in `stable`.
std::vector<GroupHom> involutions(const FiniteGroup& g, const std::vector<ElemSet>& stable) {
  std::vector<GroupHom> out;
  for (const auto& a : automorphisms(g)) {
    if (!involutive(a)) continue;
    bool ok = true;
    for (const auto& s : stable)
      for (Elem x : s) ok = ok && std::binary_search(s.begin(), s.end(), a(x));
    if (ok) out.push_back(a);
  }
  return out;
}

GammaAction action_from(const FiniteGroup& gamma, const GroupHom& a) {
  if (gamma.order() == 1) return trivial_action(gamma, a.domain);
  return make_action(gamma, a.domain, {identity_hom(a.domain).map, a.map});
}

std::vector<std::string> small_group_names(int max_order) {
  std::vector<std::string> out;
  for (const char* n : {"1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "V4", "S3", "Q8", "D4", "Z2xZ4", "Z2xZ2xZ2"})
    if (named_group(n).order() <= max_order) out.push_back(n);
  return out;
}

BraidedGammaCrossedModule random_conjugation(std::mt19937_64& rng, int max_order) {
  const FiniteGroup g = named_group(pick(small_group_names(max_order), rng));
  std::vector<ElemSet> normal;
  const auto comm = commutator_subgroup(g);
  for (const auto& n : all_subgroups(g))
    if (is_normal(g, n) && std::includes(n.begin(), n.end(), comm.begin(), comm.end())) normal.push_back(n);
  const ElemSet& n = pick(normal, rng);
  const bool with_gamma = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
  const FiniteGroup gamma = with_gamma ? cyclic_group(2) : FiniteGroup();
  const GroupHom a = with_gamma ? pick(involutions(g, {n}), rng) : identity_hom(g);
  return *conjugation_module(action_from(gamma, a), n);
}

BraidedGammaCrossedModule random_abelian(std::mt19937_64& rng, int max_order) {
  std::vector<std::vector<long>> shapes;
  for (auto s : std::vector<std::vector<long>>{{}, {2}, {3}, {4}, {5}, {6}, {7}, {8}, {2, 2}, {2, 4}, {2, 2, 2}})
    if (product_of(s) <= max_order) shapes.push_back(s);
  const FiniteGroup B = abelian_group(pick(shapes, rng)), D = abelian_group(pick(shapes, rng));
  const bool with_gamma = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
  const FiniteGroup gamma = with_gamma ? cyclic_group(2) : FiniteGroup();
  const GammaAction ab = action_from(gamma, with_gamma ? pick(involutions(B, {}), rng) : identity_hom(B));
  const GammaAction ad = action_from(gamma, with_gamma ? pick(involutions(D, {}), rng) : identity_hom(D));
  std::vector<GroupHom> ds;
  for (const auto& h : enumerate_homs(B, D))
    if (is_equivariant(h, ab, ad)) ds.push_back(h);
  const GroupHom d = pick(ds, rng);
  // A random bilinear eta into Ker d; kept only when the result validates.
  const FiniteAbelianGroup Da(D);
  const auto ker = kernel_set(d);
  const std::size_t k = Da.rank();
  for (int attempt = 0; attempt < 4 && k > 0; ++attempt) {
    std::vector<Elem> c(k * k);
    for (auto& x : c) x = pick(ker, rng);
    std::vector<Elem> eta(static_cast<std::size_t>(D.order()) * D.order());
    for (Elem x = 0; x < D.order(); ++x)
      for (Elem y = 0; y < D.order(); ++y) {
        Elem v = 0;
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            v = B.mul(v, B.pow(c[i * k + j], Da.coordinates(x)[i] * Da.coordinates(y)[j]));
        eta[static_cast<std::size_t>(x) * D.order() + y] = v;
      }
    auto m = module_with_eta(ab, ad, d.map, eta);
    if (validate(m).all_pass()) return m;
  }
  return abelian_module(ab, ad, d.map);
}

}  // namespace

BraidedGammaCrossedModule random_module(std::mt19937_64& rng, int max_order) {
  return std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? random_conjugation(rng, max_order)
                                                            : random_abelian(rng, max_order);
}

Mutation random_mutation(const BraidedGammaCrossedModule& m, std::mt19937_64& rng) {
  const std::vector<Elem>* tables[4] = {&m.eta, &m.theta, &m.act_b, &m.act_d};
  const int bounds[4] = {m.nb(), m.nb(), m.nb(), m.nd()};
  std::vector<int> usable;
  for (int t = 0; t < 4; ++t)
    if (!tables[t]->empty() && bounds[t] > 1) usable.push_back(t);
  if (usable.empty()) throw Error(ErrorKind::WrongType, "no table admits a single-entry change");
  Mutation mu;
  mu.table = pick(usable, rng);
  mu.index = std::uniform_int_distribution<std::size_t>(0, tables[mu.table]->size() - 1)(rng);
  const Elem old = (*tables[mu.table])[mu.index];
  mu.value = std::uniform_int_distribution<Elem>(0, bounds[mu.table] - 2)(rng);
  if (mu.value >= old) ++mu.value;
  return mu;
}

BraidedGammaCrossedModule apply_mutation(BraidedGammaCrossedModule m, const Mutation& mu) {
  std::vector<Elem>* tables[4] = {&m.eta, &m.theta, &m.act_b, &m.act_d};
  (*tables[mu.table])[mu.index] = mu.value;
  return m;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  if (const char* s = std::getenv("XMODCAT_SEED")) {
    char* end = nullptr;
    const auto v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0') return v;
    throw Error(ErrorKind::SchemaError, "XMODCAT_SEED is not a decimal integer");
  }
  return fallback;
}

}  // namespace xmodcat
