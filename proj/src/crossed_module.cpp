#include "xmodcat/crossed_module.hpp"

#include <algorithm>
#include <sstream>

#include "xmodcat/cohomology.hpp"
#include "xmodcat/error.hpp"

namespace xmodcat {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ShapeMismatch, what);
}

void check_table(const std::vector<Elem>& t, std::size_t size, int bound, const std::string& name) {
  require(t.size() == size, name + " has " + std::to_string(t.size()) + " entries, expected " + std::to_string(size));
  for (Elem v : t) require(v >= 0 && v < bound, name + " entry " + std::to_string(v) + " out of range");
}

void check_shapes(const BraidedGammaCrossedModule& m) {
  const std::size_t nb = m.nb(), nd = m.nd(), ng = m.ng();
  check_table(m.d, nb, m.nd(), "d");
  check_table(m.theta, nd * nb, m.nb(), "theta");
  check_table(m.eta, nd * nd, m.nb(), "eta");
  check_table(m.act_b, ng * nb, m.nb(), "actB");
  check_table(m.act_d, ng * nd, m.nd(), "actD");
}

// Group action axioms on a table act[sigma*n+x].
void check_action_table(AxiomCheck& c, const FiniteGroup& gamma, const FiniteGroup& t,
                        const std::vector<Elem>& act) {
  const int n = t.order();
  auto a = [&](Elem s, Elem x) { return act[static_cast<std::size_t>(s) * n + x]; };
  for (Elem s = 0; s < gamma.order(); ++s)
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (a(s, t.mul(x, y)) != t.mul(a(s, x), a(s, y))) c.record({0, s, x, y});
  for (Elem s = 0; s < gamma.order(); ++s)
    for (Elem r = 0; r < gamma.order(); ++r)
      for (Elem x = 0; x < n; ++x)
        if (a(gamma.mul(s, r), x) != a(s, a(r, x))) c.record({1, s, r, x});
  for (Elem x = 0; x < n; ++x)
    if (a(0, x) != x) c.record({2, x});
}

}  // namespace

AxiomReport validate(const BraidedGammaCrossedModule& m) {
  check_shapes(m);
  const FiniteGroup& B = m.B;
  const FiniteGroup& D = m.D;
  const int nb = m.nb(), nd = m.nd(), ng = m.ng();
  auto add = [&](Elem a, Elem b) { return B.mul(a, b); };
  auto neg = [&](Elem a) { return B.inv(a); };

  AxiomReport r;
  {
    auto& c = r.add("d_hom");
    for (Elem a = 0; a < nb; ++a)
      for (Elem b = 0; b < nb; ++b)
        if (m.dm(add(a, b)) != D.mul(m.dm(a), m.dm(b))) c.record({a, b});
  }
  {
    auto& c = r.add("theta_automorphisms");
    for (Elem x = 0; x < nd; ++x) {
      std::vector<bool> hit(nb, false);
      for (Elem b = 0; b < nb; ++b) {
        hit[m.th(x, b)] = true;
        for (Elem e = 0; e < nb; ++e)
          if (m.th(x, add(b, e)) != add(m.th(x, b), m.th(x, e))) c.record({x, b, e});
      }
      if (std::find(hit.begin(), hit.end(), false) != hit.end()) c.record({x});
    }
  }
  {
    auto& c = r.add("theta_hom");
    for (Elem x = 0; x < nd; ++x)
      for (Elem y = 0; y < nd; ++y)
        for (Elem b = 0; b < nb; ++b)
          if (m.th(D.mul(x, y), b) != m.th(x, m.th(y, b))) c.record({x, y, b});
  }
  check_action_table(r.add("gamma_action_B"), m.gamma, B, m.act_b);
  check_action_table(r.add("gamma_action_D"), m.gamma, D, m.act_d);
  {
    auto& c = r.add("d_equivariant");
    for (Elem s = 0; s < ng; ++s)
      for (Elem b = 0; b < nb; ++b)
        if (m.dm(m.sb(s, b)) != m.sd(s, m.dm(b))) c.record({s, b});
  }
  {
    auto& c = r.add("C1");
    for (Elem a = 0; a < nb; ++a)
      for (Elem b = 0; b < nb; ++b)
        if (m.th(m.dm(a), b) != add(add(a, b), neg(a))) c.record({a, b});
  }
  {
    auto& c = r.add("C2");
    for (Elem x = 0; x < nd; ++x)
      for (Elem b = 0; b < nb; ++b)
        if (m.dm(m.th(x, b)) != D.conjugate(x, m.dm(b))) c.record({x, b});
  }
  {
    auto& c3 = r.add("C3");
    auto& c4 = r.add("C4");
    for (Elem x = 0; x < nd; ++x)
      for (Elem y = 0; y < nd; ++y)
        for (Elem z = 0; z < nd; ++z) {
          if (m.et(x, D.mul(y, z)) != add(m.et(x, y), m.th(y, m.et(x, z)))) c3.record({x, y, z});
          if (m.et(D.mul(x, y), z) != add(m.th(x, m.et(y, z)), m.et(x, z))) c4.record({x, y, z});
        }
  }
  {
    auto& c = r.add("C5");
    for (Elem x = 0; x < nd; ++x)
      for (Elem y = 0; y < nd; ++y)
        if (m.dm(m.et(x, y)) != D.commutator(x, y)) c.record({x, y});
  }
  {
    auto& c6 = r.add("C6");
    auto& c7 = r.add("C7");
    for (Elem b = 0; b < nb; ++b)
      for (Elem x = 0; x < nd; ++x) {
        if (add(m.et(m.dm(b), x), m.th(x, b)) != b) c6.record({b, x});
        if (add(m.et(x, m.dm(b)), b) != m.th(x, b)) c7.record({x, b});
      }
  }
  {
    auto& c = r.add("Gamma1");
    for (Elem s = 0; s < ng; ++s)
      for (Elem x = 0; x < nd; ++x)
        for (Elem b = 0; b < nb; ++b)
          if (m.sb(s, m.th(x, b)) != m.th(m.sd(s, x), m.sb(s, b))) c.record({s, x, b});
  }
  {
    auto& c = r.add("Gamma2");
    for (Elem s = 0; s < ng; ++s)
      for (Elem x = 0; x < nd; ++x)
        for (Elem y = 0; y < nd; ++y)
          if (m.sb(s, m.et(x, y)) != m.et(m.sd(s, x), m.sd(s, y))) c.record({s, x, y});
  }
  // Consequences of the axioms, recomputed rather than assumed.
  {
    auto& c = r.add("eta_unit");
    for (Elem x = 0; x < nd; ++x)
      if (m.et(x, 0) != 0 || m.et(0, x) != 0) c.record({x});
  }
  ElemSet ker;
  for (Elem b = 0; b < nb; ++b)
    if (m.dm(b) == 0) ker.push_back(b);
  {
    auto& c = r.add("ker_central");
    for (Elem a : ker)
      for (Elem b = 0; b < nb; ++b)
        if (add(a, b) != add(b, a)) c.record({a, b});
  }
  {
    auto& c = r.add("coker_abelian");
    std::vector<bool> in_image(nd, false);
    for (Elem b = 0; b < nb; ++b) in_image[m.dm(b)] = true;
    for (Elem x = 0; x < nd; ++x)
      for (Elem y = 0; y < nd; ++y)
        if (!in_image[D.commutator(x, y)]) c.record({x, y});
  }
  {
    auto& c = r.add("ker_fixed_by_theta");
    for (Elem x = 0; x < nd; ++x)
      for (Elem a : ker)
        if (m.th(x, a) != a) c.record({x, a});
  }
  {
    auto& c = r.add("symmetric", true);
    for (Elem x = 0; x < nd; ++x)
      for (Elem y = 0; y < nd; ++y)
        if (add(m.et(x, y), m.et(y, x)) != 0) c.record({x, y});
  }
  return r;
}

ValidatedModule::ValidatedModule(BraidedGammaCrossedModule m) {
  const AxiomReport rep = validate(m);
  if (!rep.all_pass()) {
    std::ostringstream os;
    os << "failing axioms:";
    for (const auto& name : rep.failing())
      os << " " << name << format_witness(rep.at(name).witnesses.front());
    throw Error(ErrorKind::NotValidated, os.str());
  }
  auto impl = std::make_shared<Impl>();
  for (Elem b = 0; b < m.nb(); ++b)
    if (m.dm(b) == 0) impl->ker.push_back(b);
  impl->ker_pos.assign(m.nb(), -1);
  for (std::size_t i = 0; i < impl->ker.size(); ++i) impl->ker_pos[impl->ker[i]] = static_cast<Elem>(i);
  impl->coker = quotient(m.D, image_set(m.d_hom()));
  impl->pi0 = induced_action(m.action_d(), impl->coker);
  impl->pi1 = restrict_action(m.action_b(), subgroup_as_group(m.B, impl->ker));
  impl->module = std::move(m);
  impl_ = std::move(impl);
}

ValidatedModule conjugation_module(const GammaAction& g_action, const ElemSet& n) {
  const FiniteGroup& g = g_action.target;
  if (!is_subgroup(g, n)) throw Error(ErrorKind::NotNormal, "N is not a subgroup");
  if (auto w = normality_witness(g, n))
    throw Error(ErrorKind::NotNormal, "conjugate of " + std::to_string(w->second) + " by " + std::to_string(w->first) +
                                          " leaves N");
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (!std::binary_search(n.begin(), n.end(), g.commutator(x, y)))
        throw Error(ErrorKind::QuotientNotAbelian,
                    "commutator of (" + std::to_string(x) + "," + std::to_string(y) + ") is outside N");
  if (!is_gamma_stable(g_action, n)) throw Error(ErrorKind::NotGammaStable, "N is not stable under gamma");
  const Subgroup sub = subgroup_as_group(g, n);
  std::vector<Elem> pos(g.order(), -1);
  for (std::size_t i = 0; i < n.size(); ++i) pos[n[i]] = static_cast<Elem>(i);
  BraidedGammaCrossedModule m;
  m.B = sub.group;
  m.D = g;
  m.d = n;
  m.gamma = g_action.gamma;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem b : n) m.theta.push_back(pos[g.conjugate(x, b)]);
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y) m.eta.push_back(pos[g.commutator(x, y)]);
  m.act_b = restrict_action(g_action, sub).act;
  m.act_d = g_action.act;
  return ValidatedModule(std::move(m));
}

ValidatedModule conjugation_module(const FiniteGroup& g, const ElemSet& n) {
  return conjugation_module(trivial_action(FiniteGroup(), g), n);
}

BraidedGammaCrossedModule module_with_eta(const GammaModule& b, const GammaModule& d, const std::vector<Elem>& dmap,
                                          const std::vector<Elem>& eta) {
  if (!(b.gamma == d.gamma)) throw Error(ErrorKind::ShapeMismatch, "B and D are acted on by different groups");
  BraidedGammaCrossedModule m;
  m.B = b.target;
  m.D = d.target;
  m.d = dmap;
  m.gamma = b.gamma;
  for (Elem x = 0; x < m.nd(); ++x)
    for (Elem e = 0; e < m.nb(); ++e) m.theta.push_back(e);
  m.eta = eta;
  m.act_b = b.act;
  m.act_d = d.act;
  return m;
}

BraidedGammaCrossedModule abelian_module(const GammaModule& b, const GammaModule& d, const std::vector<Elem>& dmap) {
  const std::size_t nd = d.target.order();
  return module_with_eta(b, d, dmap, std::vector<Elem>(nd * nd, 0));
}

GammaModule pi0(const ValidatedModule& m) { return m.pi0(); }
GammaModule pi1(const ValidatedModule& m) { return m.pi1(); }

bool is_symmetric(const BraidedGammaCrossedModule& m) {
  for (Elem x = 0; x < m.nd(); ++x)
    for (Elem y = 0; y < m.nd(); ++y)
      if (m.B.mul(m.et(x, y), m.et(y, x)) != 0) return false;
  return true;
}

bool is_abelian(const BraidedGammaCrossedModule& m) {
  if (!m.B.is_abelian() || !m.D.is_abelian()) return false;
  for (Elem x = 0; x < m.nd(); ++x)
    for (Elem b = 0; b < m.nb(); ++b)
      if (m.th(x, b) != b) return false;
  return std::all_of(m.eta.begin(), m.eta.end(), [](Elem e) { return e == 0; });
}

std::vector<Elem> induced_on_coker(const std::vector<Elem>& f0, const ValidatedModule& src,
                                   const ValidatedModule& dst) {
  const Quotient& q = src.coker_d();
  const Quotient& q2 = dst.coker_d();
  std::vector<Elem> out(q.group.order());
  for (Elem r = 0; r < q.group.order(); ++r) out[r] = q2.projection(f0[q.representatives[r]]);
  for (Elem x = 0; x < src->nd(); ++x)
    if (q2.projection(f0[x]) != out[q.projection(x)])
      throw Error(ErrorKind::NotWellDefined, "f0 does not descend to Coker d");
  return out;
}

std::vector<Elem> induced_on_ker(const std::vector<Elem>& f1, const ValidatedModule& src, const ValidatedModule& dst) {
  std::vector<Elem> out;
  for (Elem a : src.ker_d()) {
    const Elem pos = dst.ker_index(f1[a]);
    if (pos < 0) throw Error(ErrorKind::NotWellDefined, "f1 does not map Ker d into Ker d'");
    out.push_back(pos);
  }
  return out;
}

AxiomReport validate_morphism(const CrossedMorphism& f, const ValidatedModule& src, const ValidatedModule& dst) {
  const auto& m = *src;
  const auto& n = *dst;
  check_table(f.f1, m.nb(), n.nb(), "f1");
  check_table(f.f0, m.nd(), n.nd(), "f0");
  if (!(m.gamma == n.gamma)) throw Error(ErrorKind::ShapeMismatch, "modules over different gamma");
  AxiomReport r;
  {
    auto& c = r.add("f1_hom");
    for (Elem a = 0; a < m.nb(); ++a)
      for (Elem b = 0; b < m.nb(); ++b)
        if (f.f1[m.B.mul(a, b)] != n.B.mul(f.f1[a], f.f1[b])) c.record({a, b});
  }
  {
    auto& c = r.add("f0_hom");
    for (Elem x = 0; x < m.nd(); ++x)
      for (Elem y = 0; y < m.nd(); ++y)
        if (f.f0[m.D.mul(x, y)] != n.D.mul(f.f0[x], f.f0[y])) c.record({x, y});
  }
  {
    auto& c1 = r.add("f1_equivariant");
    auto& c0 = r.add("f0_equivariant");
    for (Elem s = 0; s < m.ng(); ++s) {
      for (Elem b = 0; b < m.nb(); ++b)
        if (f.f1[m.sb(s, b)] != n.sb(s, f.f1[b])) c1.record({s, b});
      for (Elem x = 0; x < m.nd(); ++x)
        if (f.f0[m.sd(s, x)] != n.sd(s, f.f0[x])) c0.record({s, x});
    }
  }
  {
    auto& c = r.add("H1");
    for (Elem b = 0; b < m.nb(); ++b)
      if (f.f0[m.dm(b)] != n.dm(f.f1[b])) c.record({b});
  }
  {
    auto& c = r.add("H2");
    for (Elem x = 0; x < m.nd(); ++x)
      for (Elem b = 0; b < m.nb(); ++b)
        if (f.f1[m.th(x, b)] != n.th(f.f0[x], f.f1[b])) c.record({x, b});
  }
  {
    auto& c = r.add("H3");
    for (Elem x = 0; x < m.nd(); ++x)
      for (Elem y = 0; y < m.nd(); ++y)
        if (f.f1[m.et(x, y)] != n.et(f.f0[x], f.f0[y])) c.record({x, y});
  }
  auto& shape = r.add("phi_shape");
  const bool shape_ok = f.phi.Q == src.pi0() && f.phi.B == dst.pi1() &&
                        f.phi.pairs.size() == static_cast<std::size_t>(src.pi0().target.order()) * src.pi0().target.order() &&
                        f.phi.grades.size() == static_cast<std::size_t>(src.pi0().target.order()) * m.ng();
  if (!shape_ok) shape.record({});
  auto& norm = r.add("phi_normalized");
  auto& coc = r.add("phi_cocycle");
  if (shape_ok) {
    if (!f.phi.is_normalized()) norm.record({});
    const auto res = cocycle_check(f.phi);
    if (!res.pass()) coc.merge(res);
  }
  return r;
}

CrossedMorphism identity_morphism(const ValidatedModule& m) {
  CrossedMorphism f;
  f.f1 = identity_hom(m->B).map;
  f.f0 = identity_hom(m->D).map;
  f.phi = SymmetricCochain2::zero(m.pi0(), m.pi1());
  return f;
}

CrossedMorphism compose_morphisms(const CrossedMorphism& second, const CrossedMorphism& first, const ValidatedModule& a,
                                  const ValidatedModule& b, const ValidatedModule& c) {
  if (first.f1.size() != static_cast<std::size_t>(a->nb()) || first.f0.size() != static_cast<std::size_t>(a->nd()) ||
      second.f1.size() != static_cast<std::size_t>(b->nb()) || second.f0.size() != static_cast<std::size_t>(b->nd()))
    throw Error(ErrorKind::NotComposable, "morphism shapes do not match the modules");
  if (!(first.phi.B == b.pi1()) || !(second.phi.Q == b.pi0()))
    throw Error(ErrorKind::NotComposable, "middle modules differ");
  CrossedMorphism out;
  for (Elem e : first.f1) out.f1.push_back(second.f1[e]);
  for (Elem x : first.f0) out.f0.push_back(second.f0[x]);
  const auto push = induced_on_ker(second.f1, b, c);
  const auto pull = induced_on_coker(first.f0, a, b);
  const FiniteGroup& k = c.pi1().target;
  out.phi = SymmetricCochain2::zero(a.pi0(), c.pi1());
  const int nq = a.pi0().target.order();
  for (Elem r = 0; r < nq; ++r) {
    for (Elem s = 0; s < nq; ++s) out.phi(r, s) = k.mul(push[first.phi(r, s)], second.phi(pull[r], pull[s]));
    for (Elem g = 0; g < a->ng(); ++g)
      out.phi.at_grade(r, g) = k.mul(push[first.phi.at_grade(r, g)], second.phi.at_grade(pull[r], g));
  }
  return out;
}

std::vector<CrossedMorphism> enumerate_morphisms(const ValidatedModule& src, const ValidatedModule& dst,
                                                 std::uint64_t guard) {
  const auto& m = *src;
  const auto& n = *dst;
  if (!(m.gamma == n.gamma)) throw Error(ErrorKind::ShapeMismatch, "modules over different gamma");
  std::vector<std::vector<Elem>> f0s, f1s;
  for (const auto& h : enumerate_homs(m.D, n.D))
    if (is_equivariant(h, m.action_d(), n.action_d())) f0s.push_back(h.map);
  for (const auto& h : enumerate_homs(m.B, n.B))
    if (is_equivariant(h, m.action_b(), n.action_b())) f1s.push_back(h.map);
  const auto cocycles = enumerate_2cocycles(src.pi0(), dst.pi1(), guard, Exec::Serial);
  std::vector<CrossedMorphism> out;
  for (const auto& f0 : f0s)
    for (const auto& f1 : f1s) {
      CrossedMorphism f{f1, f0, SymmetricCochain2::zero(src.pi0(), dst.pi1())};
      const auto rep = validate_morphism(f, src, dst);
      if (!rep.all_pass()) continue;
      if (out.size() + cocycles.size() > guard)
        throw Error(ErrorKind::SearchSpaceTooLarge, "too many morphisms");
      for (const auto& phi : cocycles) out.push_back(CrossedMorphism{f1, f0, phi});
    }
  return out;
}

}  // namespace xmodcat
