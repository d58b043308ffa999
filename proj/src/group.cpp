#include "xmodcat/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "xmodcat/error.hpp"

namespace xmodcat {

namespace {

std::string pair_str(Elem a, Elem b) {
  std::ostringstream os;
  os << "(" << a << "," << b << ")";
  return os.str();
}

}  // namespace

FiniteGroup::FiniteGroup() : n_(1), table_{0}, inverse_(std::make_shared<std::vector<Elem>>(1, 0)) {}

FiniteGroup::FiniteGroup(int n, std::vector<Elem> table) : n_(n), table_(std::move(table)) {
  auto inv = std::make_shared<std::vector<Elem>>(n, -1);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (mul(a, b) == 0) (*inv)[a] = b;
  inverse_ = std::move(inv);
  abelian_ = true;
  for (Elem a = 0; a < n && abelian_; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Elem>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw Error(ErrorKind::ShapeMismatch, "empty table");
  std::vector<Elem> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw Error(ErrorKind::ShapeMismatch, "table is not square at row " + std::to_string(i));
    for (int j = 0; j < n; ++j) {
      const Elem v = rows[i][j];
      if (v < 0 || v >= n) throw Error(ErrorKind::NotClosed, "entry at " + pair_str(i, j) + " is " + std::to_string(v));
      flat.push_back(v);
    }
  }
  auto at = [&](Elem a, Elem b) { return flat[static_cast<std::size_t>(a) * n + b]; };
  for (Elem a = 0; a < n; ++a)
    if (at(0, a) != a || at(a, 0) != a) {
      // Name the element that would be the identity, if there is one.
      std::string hint;
      for (Elem e = 0; e < n; ++e) {
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
        if (ok) {
          hint = "; identity found at index " + std::to_string(e) + " but must be index 0";
          break;
        }
      }
      throw Error(ErrorKind::NoIdentity, "index 0 is not a two-sided identity at " + pair_str(0, a) + hint);
    }
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b) found = at(a, b) == 0 && at(b, a) == 0;
    if (!found) throw Error(ErrorKind::NoInverse, "element " + std::to_string(a) + " has no inverse");
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw Error(ErrorKind::NotAssociative,
                      "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
  return FiniteGroup(n, std::move(flat));
}

Elem FiniteGroup::pow(Elem a, long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem r = 0;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

Elem FiniteGroup::commutator(Elem x, Elem y) const { return mul(mul(x, y), mul(inv(x), inv(y))); }

int FiniteGroup::element_order(Elem a) const {
  int k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::vector<std::vector<Elem>> FiniteGroup::rows() const {
  std::vector<std::vector<Elem>> out(n_, std::vector<Elem>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i][j] = mul(i, j);
  return out;
}

std::vector<std::vector<Elem>> GammaAction::rows() const {
  std::vector<std::vector<Elem>> out(gamma.order(), std::vector<Elem>(target.order()));
  for (int s = 0; s < gamma.order(); ++s)
    for (int x = 0; x < target.order(); ++x) out[s][x] = (*this)(s, x);
  return out;
}

// -- construction ---------------------------------------------------------

FiniteGroup cyclic_group(int n) {
  std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
  return FiniteGroup::from_table(rows);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int m = h.order();
  const int n = g.order() * m;
  std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rows[a][b] = g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
  return FiniteGroup::from_table(rows);
}

FiniteGroup klein_four_group() { return direct_product(cyclic_group(2), cyclic_group(2)); }

FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& generators) {
  if (generators.empty()) return FiniteGroup();
  const std::size_t k = generators.front().size();
  std::vector<int> id(k);
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems;
  auto add = [&](const std::vector<int>& p) {
    auto [it, inserted] = index.emplace(p, static_cast<int>(elems.size()));
    if (inserted) elems.push_back(p);
    return it->second;
  };
  // (p*q)(i) = p(q(i))
  auto compose_perm = [&](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(k);
    for (std::size_t i = 0; i < k; ++i) r[i] = p[q[i]];
    return r;
  };
  add(id);
  for (std::size_t at = 0; at < elems.size(); ++at)
    for (const auto& g : generators) add(compose_perm(elems[at], g));
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rows[a][b] = index.at(compose_perm(elems[a], elems[b]));
  return FiniteGroup::from_table(rows);
}

FiniteGroup symmetric_group3() { return group_from_permutations({{1, 0, 2}, {1, 2, 0}}); }

FiniteGroup dihedral_group(int n) {
  std::vector<int> rot(n), ref(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  return group_from_permutations({rot, ref});
}

FiniteGroup quaternion_group() {
  // Elements 1,-1,i,-i,j,-j,k,-k as (unit, sign): index = 2*unit + (sign<0).
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<Elem>> rows(8, std::vector<Elem>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, ub = b / 2;
      int sign = sign_mul[ua][ub] * ((a % 2) ? -1 : 1) * ((b % 2) ? -1 : 1);
      rows[a][b] = 2 * unit_mul[ua][ub] + (sign < 0 ? 1 : 0);
    }
  return FiniteGroup::from_table(rows);
}

FiniteGroup abelian_group(const std::vector<long>& invariants) {
  FiniteGroup g;
  for (long d : invariants) g = direct_product(g, cyclic_group(static_cast<int>(d)));
  return g;
}

FiniteGroup named_group(const std::string& name) {
  if (auto x = name.find('x'); x != std::string::npos)
    return direct_product(named_group(name.substr(0, x)), named_group(name.substr(x + 1)));
  if (name == "trivial" || name == "1") return FiniteGroup();
  if (name == "V4") return klein_four_group();
  if (name == "S3") return symmetric_group3();
  if (name == "Q8") return quaternion_group();
  if (name.size() > 1 && (name[0] == 'Z' || name[0] == 'D')) {
    int n = 0;
    try {
      n = std::stoi(name.substr(1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::SchemaError, "unknown group name '" + name + "'");
    }
    if (n < 1 || n > 256) throw Error(ErrorKind::SchemaError, "group order out of range in '" + name + "'");
    return name[0] == 'Z' ? cyclic_group(n) : dihedral_group(n);
  }
  throw Error(ErrorKind::SchemaError, "unknown group name '" + name + "'");
}

GroupHom identity_hom(const FiniteGroup& g) {
  std::vector<Elem> m(g.order());
  std::iota(m.begin(), m.end(), 0);
  return {g, g, std::move(m)};
}

GroupHom zero_hom(const FiniteGroup& from, const FiniteGroup& to) {
  return {from, to, std::vector<Elem>(from.order(), 0)};
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  if (!(inner.codomain == outer.domain)) throw Error(ErrorKind::NotComposable, "codomain/domain mismatch");
  std::vector<Elem> m(inner.domain.order());
  for (Elem x = 0; x < inner.domain.order(); ++x) m[x] = outer(inner(x));
  return {inner.domain, outer.codomain, std::move(m)};
}

GammaAction trivial_action(const FiniteGroup& gamma, const FiniteGroup& target) {
  std::vector<Elem> act(static_cast<std::size_t>(gamma.order()) * target.order());
  for (int s = 0; s < gamma.order(); ++s)
    for (int x = 0; x < target.order(); ++x) act[static_cast<std::size_t>(s) * target.order() + x] = x;
  return {gamma, target, std::move(act)};
}

GammaAction make_action(const FiniteGroup& gamma, const FiniteGroup& target,
                        const std::vector<std::vector<Elem>>& rows) {
  if (static_cast<int>(rows.size()) != gamma.order())
    throw Error(ErrorKind::ShapeMismatch, "action needs one row per element of gamma");
  std::vector<Elem> act;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != target.order())
      throw Error(ErrorKind::ShapeMismatch, "action row length differs from target order");
    for (Elem v : r) {
      if (v < 0 || v >= target.order()) throw Error(ErrorKind::ShapeMismatch, "action entry out of range");
      act.push_back(v);
    }
  }
  return {gamma, target, std::move(act)};
}

// -- checks ---------------------------------------------------------------

bool check_hom(const GroupHom& f) {
  const auto& g = f.domain;
  const auto& h = f.codomain;
  if (static_cast<int>(f.map.size()) != g.order()) return false;
  for (Elem v : f.map)
    if (v < 0 || v >= h.order()) return false;
  if (f(0) != 0) return false;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (f(g.mul(x, y)) != h.mul(f(x), f(y))) return false;
  return true;
}

bool check_action(const GammaAction& a) {
  const int gn = a.gamma.order();
  const int n = a.target.order();
  if (static_cast<int>(a.act.size()) != gn * n) return false;
  for (Elem v : a.act)
    if (v < 0 || v >= n) return false;
  for (Elem s = 0; s < gn; ++s) {
    std::vector<bool> seen(n, false);
    for (Elem x = 0; x < n; ++x) {
      if (seen[a(s, x)]) return false;
      seen[a(s, x)] = true;
      for (Elem y = 0; y < n; ++y)
        if (a(s, a.target.mul(x, y)) != a.target.mul(a(s, x), a(s, y))) return false;
    }
  }
  for (Elem x = 0; x < n; ++x)
    if (a(0, x) != x) return false;
  for (Elem s = 0; s < gn; ++s)
    for (Elem t = 0; t < gn; ++t)
      for (Elem x = 0; x < n; ++x)
        if (a(a.gamma.mul(s, t), x) != a(s, a(t, x))) return false;
  return true;
}

bool is_module(const GammaAction& a) { return a.target.is_abelian() && check_action(a); }

bool is_equivariant(const GroupHom& f, const GammaAction& on_domain, const GammaAction& on_codomain) {
  for (Elem s = 0; s < on_domain.gamma.order(); ++s)
    for (Elem x = 0; x < f.domain.order(); ++x)
      if (f(on_domain(s, x)) != on_codomain(s, f(x))) return false;
  return true;
}

// -- subgroups ------------------------------------------------------------

ElemSet subgroup_generated(const FiniteGroup& g, const ElemSet& s) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> members{0};
  in[0] = true;
  for (std::size_t at = 0; at < members.size(); ++at)
    for (Elem x : s) {
      const Elem y = g.mul(members[at], x);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

ElemSet commutator_subgroup(const FiniteGroup& g) {
  ElemSet comms;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y) comms.push_back(g.commutator(x, y));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return subgroup_generated(g, comms);
}

ElemSet center(const FiniteGroup& g) {
  ElemSet z;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return z;
}

bool is_subgroup(const FiniteGroup& g, const ElemSet& s) {
  if (s.empty() || !std::binary_search(s.begin(), s.end(), 0)) return false;
  for (Elem a : s)
    for (Elem b : s)
      if (!std::binary_search(s.begin(), s.end(), g.mul(a, g.inv(b)))) return false;
  return true;
}

std::optional<std::pair<Elem, Elem>> normality_witness(const FiniteGroup& g, const ElemSet& s) {
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem n : s)
      if (!std::binary_search(s.begin(), s.end(), g.conjugate(x, n))) return std::make_pair(x, n);
  return std::nullopt;
}

bool is_normal(const FiniteGroup& g, const ElemSet& s) {
  return is_subgroup(g, s) && !normality_witness(g, s).has_value();
}

bool is_gamma_stable(const GammaAction& a, const ElemSet& s) {
  for (Elem sigma = 0; sigma < a.gamma.order(); ++sigma)
    for (Elem x : s)
      if (!std::binary_search(s.begin(), s.end(), a(sigma, x))) return false;
  return true;
}

ElemSet image_set(const GroupHom& f) {
  ElemSet out(f.map.begin(), f.map.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ElemSet kernel_set(const GroupHom& f) {
  ElemSet out;
  for (Elem x = 0; x < f.domain.order(); ++x)
    if (f(x) == 0) out.push_back(x);
  return out;
}

Quotient quotient(const FiniteGroup& g, const ElemSet& n) {
  if (!is_subgroup(g, n)) throw Error(ErrorKind::NotNormal, "not a subgroup");
  if (auto w = normality_witness(g, n))
    throw Error(ErrorKind::NotNormal, "conjugate of " + std::to_string(w->second) + " by " +
                                          std::to_string(w->first) + " leaves the subgroup");
  std::vector<Elem> coset_of(g.order(), -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (coset_of[x] >= 0) continue;
    const Elem idx = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : n) coset_of[g.mul(x, m)] = idx;
  }
  const int k = static_cast<int>(reps.size());
  std::vector<std::vector<Elem>> rows(k, std::vector<Elem>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) rows[a][b] = coset_of[g.mul(reps[a], reps[b])];
  FiniteGroup q = FiniteGroup::from_table(rows);
  return {q, GroupHom{g, q, coset_of}, reps};
}

Subgroup subgroup_as_group(const FiniteGroup& g, const ElemSet& s) {
  if (!is_subgroup(g, s)) throw Error(ErrorKind::ShapeMismatch, "element set is not a subgroup");
  const int k = static_cast<int>(s.size());
  std::vector<Elem> pos(g.order(), -1);
  for (int i = 0; i < k; ++i) pos[s[i]] = i;
  std::vector<std::vector<Elem>> rows(k, std::vector<Elem>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) rows[a][b] = pos[g.mul(s[a], s[b])];
  FiniteGroup sub = FiniteGroup::from_table(rows);
  return {sub, GroupHom{sub, g, s}};
}

GammaAction restrict_action(const GammaAction& a, const Subgroup& s) {
  const auto& incl = s.inclusion.map;
  if (!is_gamma_stable(a, incl)) throw Error(ErrorKind::NotGammaStable, "subgroup is not stable under gamma");
  std::vector<Elem> pos(a.target.order(), -1);
  for (std::size_t i = 0; i < incl.size(); ++i) pos[incl[i]] = static_cast<Elem>(i);
  std::vector<Elem> act;
  for (Elem sigma = 0; sigma < a.gamma.order(); ++sigma)
    for (Elem x : incl) act.push_back(pos[a(sigma, x)]);
  return {a.gamma, s.group, std::move(act)};
}

GammaAction induced_action(const GammaAction& a, const Quotient& q) {
  std::vector<Elem> act;
  for (Elem sigma = 0; sigma < a.gamma.order(); ++sigma)
    for (Elem r = 0; r < q.group.order(); ++r) act.push_back(q.projection(a(sigma, q.representatives[r])));
  GammaAction out{a.gamma, q.group, std::move(act)};
  // Well defined only when the subgroup is stable.
  for (Elem sigma = 0; sigma < a.gamma.order(); ++sigma)
    for (Elem x = 0; x < a.target.order(); ++x)
      if (q.projection(a(sigma, x)) != out(sigma, q.projection(x)))
        throw Error(ErrorKind::NotGammaStable, "action does not descend to the quotient");
  return out;
}

// -- homomorphism search --------------------------------------------------

std::vector<Elem> generating_set(const FiniteGroup& g) {
  std::vector<Elem> gens;
  ElemSet sub{0};
  for (Elem x = 1; x < g.order(); ++x)
    if (!std::binary_search(sub.begin(), sub.end(), x)) {
      gens.push_back(x);
      sub = subgroup_generated(g, gens);
    }
  return gens;
}

namespace {

// Extends generator images to a map by breadth-first right multiplication;
// the map is a homomorphism iff no conflict arises.
std::optional<std::vector<Elem>> extend_from_generators(const FiniteGroup& g, const FiniteGroup& h,
                                                        const std::vector<Elem>& gens,
                                                        const std::vector<Elem>& images) {
  std::vector<Elem> m(g.order(), -1);
  m[0] = 0;
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Elem y = g.mul(x, gens[i]);
      const Elem img = h.mul(m[x], images[i]);
      if (m[y] < 0) {
        m[y] = img;
        queue.push_back(y);
      } else if (m[y] != img) {
        return std::nullopt;
      }
    }
  }
  return m;
}

template <class Accept>
void search_homs(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Elem>& gens,
                 const std::vector<std::vector<Elem>>& candidates, Accept&& accept) {
  std::vector<Elem> images(gens.size(), 0);
  std::vector<std::size_t> pos(gens.size(), 0);
  if (gens.empty()) {
    accept(std::vector<Elem>(g.order(), 0));
    return;
  }
  for (const auto& c : candidates)
    if (c.empty()) return;
  // Odometer over candidate images, last generator fastest.
  while (true) {
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = candidates[i][pos[i]];
    if (auto m = extend_from_generators(g, h, gens, images))
      if (!accept(*m)) return;
    std::size_t i = gens.size();
    while (i > 0) {
      --i;
      if (++pos[i] < candidates[i].size()) break;
      pos[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace

std::vector<GroupHom> enumerate_homs(const FiniteGroup& g, const FiniteGroup& h) {
  const auto gens = generating_set(g);
  std::vector<std::vector<Elem>> cand(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int ord = g.element_order(gens[i]);
    for (Elem y = 0; y < h.order(); ++y)
      if (ord % h.element_order(y) == 0) cand[i].push_back(y);
  }
  std::vector<GroupHom> out;
  search_homs(g, h, gens, cand, [&](std::vector<Elem> m) {
    out.push_back(GroupHom{g, h, std::move(m)});
    return true;
  });
  return out;
}

std::vector<GroupHom> automorphisms(const FiniteGroup& g) {
  std::vector<GroupHom> out;
  for (auto& f : enumerate_homs(g, g))
    if (image_set(f).size() == static_cast<std::size_t>(g.order())) out.push_back(std::move(f));
  return out;
}

std::optional<GroupHom> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.order() > 64) throw Error(ErrorKind::SearchSpaceTooLarge, "isomorphism search is capped at order 64");
  const auto gens = generating_set(g);
  std::vector<std::vector<Elem>> cand(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int ord = g.element_order(gens[i]);
    for (Elem y = 0; y < h.order(); ++y)
      if (h.element_order(y) == ord) cand[i].push_back(y);
  }
  std::optional<GroupHom> found;
  search_homs(g, h, gens, cand, [&](std::vector<Elem> m) {
    GroupHom f{g, h, std::move(m)};
    if (image_set(f).size() == static_cast<std::size_t>(h.order())) {
      found = std::move(f);
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace xmodcat
