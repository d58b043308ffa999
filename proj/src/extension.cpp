#include "xmodcat/extension.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "xmodcat/abelian.hpp"
#include "xmodcat/cohomology.hpp"
#include "xmodcat/error.hpp"
#include "xmodcat/functor.hpp"

namespace xmodcat {

namespace {

void hom_check(AxiomReport& rep, const std::string& name, const FiniteGroup& a, const FiniteGroup& b,
               const std::vector<Elem>& f) {
  auto& c = rep.add(name);
  for (Elem x = 0; x < a.order(); ++x)
    for (Elem y = 0; y < a.order(); ++y)
      if (f[a.mul(x, y)] != b.mul(f[x], f[y])) c.record({x, y});
}

void equivariance_check(AxiomReport& rep, const std::string& name, const GammaAction& a, const GammaAction& b,
                        const std::vector<Elem>& f) {
  auto& c = rep.add(name);
  for (Elem s = 0; s < a.gamma.order(); ++s)
    for (Elem x = 0; x < a.target.order(); ++x)
      if (f[a(s, x)] != b(s, f[x])) c.record({s, x});
}

bool in_range(const std::vector<Elem>& v, std::size_t n, int bound) {
  return v.size() == n && std::all_of(v.begin(), v.end(), [&](Elem x) { return x >= 0 && x < bound; });
}

// E -> B inverse of j, -1 off the image.
std::vector<Elem> j_inverse(const GammaModuleExtension& ext) {
  std::vector<Elem> inv(ext.E.target.order(), -1);
  for (Elem b = 0; b < static_cast<Elem>(ext.j.size()); ++b) inv[ext.j[b]] = b;
  return inv;
}

}  // namespace

AxiomReport validate_extension(const GammaModuleExtension& ext) {
  const auto& M = *ext.M;
  const FiniteGroup& E = ext.E.target;
  const int ne = E.order(), nq = ext.Q.target.order();
  if (!(ext.Q.gamma == M.gamma) || !(ext.E.gamma == M.gamma))
    throw Error(ErrorKind::ShapeMismatch, "extension modules have a different gamma");
  if (ext.E.act.size() != static_cast<std::size_t>(ne) * M.ng() || !in_range(ext.j, M.nb(), ne) ||
      !in_range(ext.p, ne, nq) || !in_range(ext.eps, ne, M.nd()))
    throw Error(ErrorKind::ShapeMismatch, "extension tables have the wrong size or range");
  AxiomReport rep;
  if (!is_abelian(M)) rep.add("M_abelian").record({0});
  else rep.add("M_abelian");
  if (!is_module(ext.E)) rep.add("E_module").record({0});
  else rep.add("E_module");
  hom_check(rep, "j_hom", M.B, E, ext.j);
  hom_check(rep, "p_hom", E, ext.Q.target, ext.p);
  hom_check(rep, "eps_hom", E, M.D, ext.eps);
  equivariance_check(rep, "j_equivariant", M.action_b(), ext.E, ext.j);
  equivariance_check(rep, "p_equivariant", ext.E, ext.Q, ext.p);
  equivariance_check(rep, "eps_equivariant", ext.E, M.action_d(), ext.eps);
  {
    auto& c = rep.add("j_injective");
    std::vector<int> seen(ne, -1);
    for (Elem b = 0; b < M.nb(); ++b) {
      if (seen[ext.j[b]] >= 0) c.record({seen[ext.j[b]], b});
      seen[ext.j[b]] = b;
    }
  }
  {
    auto& c = rep.add("p_surjective");
    std::vector<bool> hit(nq, false);
    for (Elem e = 0; e < ne; ++e) hit[ext.p[e]] = true;
    for (Elem u = 0; u < nq; ++u)
      if (!hit[u]) c.record({u});
  }
  {
    auto& c = rep.add("exact");
    std::vector<bool> in_image(ne, false);
    for (Elem b = 0; b < M.nb(); ++b) in_image[ext.j[b]] = true;
    for (Elem e = 0; e < ne; ++e)
      if (in_image[e] != (ext.p[e] == 0)) c.record({e});
  }
  {
    auto& c = rep.add("eps_j_is_d");
    for (Elem b = 0; b < M.nb(); ++b)
      if (ext.eps[ext.j[b]] != M.dm(b)) c.record({b});
  }
  return rep;
}

std::vector<Elem> induced_psi(const GammaModuleExtension& ext) {
  const Quotient& q = ext.M.coker_d();
  std::vector<Elem> psi(ext.Q.target.order(), -1);
  for (Elem e = 0; e < ext.E.target.order(); ++e) {
    const Elem u = ext.p[e], c = q.projection(ext.eps[e]);
    if (psi[u] >= 0 && psi[u] != c)
      throw Error(ErrorKind::NotWellDefined,
                  "q eps differs on the fibre over " + std::to_string(u) + " at element " + std::to_string(e));
    psi[u] = c;
  }
  for (Elem u = 0; u < static_cast<Elem>(psi.size()); ++u)
    if (psi[u] < 0) throw Error(ErrorKind::NotWellDefined, "p misses " + std::to_string(u));
  return psi;
}

GammaModuleExtension crossed_product(const ValidatedModule& m, const GammaModule& q, const SymmetricCochain2& f,
                                     const std::vector<Elem>& objects) {
  const auto& M = *m;
  const int nb = M.nb(), nq = q.target.order(), ng = M.ng();
  if (!in_range(objects, nq, M.nd()) || f.pairs.size() != static_cast<std::size_t>(nq) * nq ||
      f.grades.size() != static_cast<std::size_t>(nq) * ng ||
      !std::all_of(f.pairs.begin(), f.pairs.end(), [&](Elem b) { return b >= 0 && b < nb; }) ||
      !std::all_of(f.grades.begin(), f.grades.end(), [&](Elem b) { return b >= 0 && b < nb; }))
    throw Error(ErrorKind::ShapeMismatch, "crossed product data have the wrong shape");
  const FiniteGroup& B = M.B;
  const FiniteGroup& Q = q.target;
  const int ne = nb * nq;
  std::vector<std::vector<Elem>> rows(ne, std::vector<Elem>(ne));
  for (Elem b = 0; b < nb; ++b)
    for (Elem u = 0; u < nq; ++u)
      for (Elem c = 0; c < nb; ++c)
        for (Elem v = 0; v < nq; ++v)
          rows[b * nq + u][c * nq + v] = B.mul(B.mul(b, c), f(u, v)) * nq + Q.mul(u, v);
  GammaModuleExtension ext{m, q, {}, {}, {}, {}};
  try {
    ext.E.target = FiniteGroup::from_table(rows);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotWellDefined, std::string("twisted addition is not a group law: ") + e.what());
  }
  ext.E.gamma = M.gamma;
  ext.E.act.resize(static_cast<std::size_t>(ng) * ne);
  for (Elem s = 0; s < ng; ++s)
    for (Elem b = 0; b < nb; ++b)
      for (Elem u = 0; u < nq; ++u)
        ext.E.act[static_cast<std::size_t>(s) * ne + b * nq + u] = B.mul(M.sb(s, b), f.at_grade(u, s)) * nq + q(s, u);
  ext.j.resize(nb);
  for (Elem b = 0; b < nb; ++b) ext.j[b] = b * nq;
  ext.p.resize(ne);
  ext.eps.resize(ne);
  for (Elem b = 0; b < nb; ++b)
    for (Elem u = 0; u < nq; ++u) {
      ext.p[b * nq + u] = u;
      ext.eps[b * nq + u] = M.D.mul(M.dm(b), objects[u]);
    }
  const AxiomReport rep = validate_extension(ext);
  if (!rep.all_pass()) throw Error(ErrorKind::NotWellDefined, "crossed product fails " + rep.failing().front());
  return ext;
}

SymmetricCochain2 functor_cochain(const GradedFunctor& F, const ValidatedModule& m, const GammaModule& q,
                                  const GradedCatGroup& dis, const GradedCatGroup& g) {
  const int nq = q.target.order();
  SymmetricCochain2 f = SymmetricCochain2::zero(q, m->action_b());
  for (Elem u = 0; u < nq; ++u) {
    for (Elem v = 0; v < nq; ++v) f(u, v) = g.mor(F.ft(u, v)).payload;
    for (Elem s = 0; s < q.gamma.order(); ++s) f.at_grade(u, s) = g.mor(F.mor[dis.lift(u, s)]).payload;
  }
  return f;
}

GammaModuleExtension extension_from_functor(const GradedFunctor& F, const ValidatedModule& m, const GammaModule& q,
                                            const GradedCatGroup& dis, const GradedCatGroup& g) {
  if (dis.objects != q.target.order() || F.obj.size() != static_cast<std::size_t>(dis.objects) ||
      F.mor.size() != static_cast<std::size_t>(dis.size()) || !dis.has_lifts())
    throw Error(ErrorKind::WrongType, "functor is not defined on Dis Q");
  const AxiomReport rep = check_graded_functor(F, dis, g, Exec::Serial);
  if (!rep.all_pass()) throw Error(ErrorKind::NotCoherent, "failing: " + rep.failing().front());
  if (F.obj[dis.unit] != g.unit) throw Error(ErrorKind::WrongType, "F(0) is not the unit");
  if (F.fstar != g.id(g.unit)) throw Error(ErrorKind::WrongType, "F_* is not the identity");
  return crossed_product(m, q, functor_cochain(F, m, q, dis, g), F.obj);
}

SymmetricCochain2 section_cochain(const GammaModuleExtension& ext, const std::vector<Elem>& s) {
  const FiniteGroup& E = ext.E.target;
  const FiniteGroup& Q = ext.Q.target;
  const int nq = Q.order();
  if (!in_range(s, nq, E.order())) throw Error(ErrorKind::BadSection, "section has the wrong shape");
  if (s[0] != E.identity()) throw Error(ErrorKind::BadSection, "e_0 is not 0");
  for (Elem u = 0; u < nq; ++u)
    if (ext.p[s[u]] != u) throw Error(ErrorKind::BadSection, "p(e_" + std::to_string(u) + ") != " + std::to_string(u));
  const auto jinv = j_inverse(ext);
  auto back = [&](Elem e, const std::string& what) {
    if (jinv[e] < 0) throw Error(ErrorKind::BadSection, what + " is not in the image of j");
    return jinv[e];
  };
  SymmetricCochain2 f = SymmetricCochain2::zero(ext.Q, ext.M->action_b());
  for (Elem u = 0; u < nq; ++u) {
    for (Elem v = 0; v < nq; ++v)
      f(u, v) = back(E.mul(E.mul(s[u], s[v]), E.inv(s[Q.mul(u, v)])), "e_u + e_v - e_{u+v}");
    for (Elem g = 0; g < ext.Q.gamma.order(); ++g)
      f.at_grade(u, g) = back(E.mul(ext.E(g, s[u]), E.inv(s[ext.Q(g, u)])), "sigma e_u - e_{sigma u}");
  }
  return f;
}

GradedFunctor functor_from_extension(const GammaModuleExtension& ext, const std::vector<Elem>& s,
                                     const GradedCatGroup& dis, const GradedCatGroup& g) {
  const SymmetricCochain2 f = section_cochain(ext, s);
  const int nq = ext.Q.target.order();
  GradedFunctor F;
  F.obj.resize(nq);
  for (Elem u = 0; u < nq; ++u) F.obj[u] = ext.eps[s[u]];
  // The arrows below exist iff d f(u,v) = F(u)F(v)F(u+v)^-1 and likewise for sigma.
  F.mor.resize(dis.size());
  for (MorId k = 0; k < dis.size(); ++k) {
    const auto& r = dis.mor(k);
    F.mor[k] = g.find({F.obj[r.src], F.obj[r.dst], f.at_grade(r.src, r.grade), r.grade});
    if (F.mor[k] < 0)
      throw Error(ErrorKind::BadSection, "no arrow F(" + std::to_string(r.src) + ") -> F(sigma u) with payload f(u,sigma)");
  }
  F.ftilde.resize(static_cast<std::size_t>(nq) * nq);
  for (Elem u = 0; u < nq; ++u)
    for (Elem v = 0; v < nq; ++v) {
      const MorId t = g.find({g.otens(F.obj[u], F.obj[v]), F.obj[dis.otens(u, v)], f(u, v), 0});
      if (t < 0)
        throw Error(ErrorKind::BadSection, "d f(" + std::to_string(u) + "," + std::to_string(v) + ") is not F(u)F(v)F(u+v)^-1");
      F.ftilde[static_cast<std::size_t>(u) * nq + v] = t;
    }
  F.fstar = g.id(g.unit);
  const AxiomReport rep = check_graded_functor(F, dis, g, Exec::Serial);
  if (!rep.all_pass()) throw Error(ErrorKind::BadSection, "induced functor fails " + rep.failing().front());
  return F;
}

std::vector<Elem> least_section(const GammaModuleExtension& ext) {
  std::vector<Elem> s(ext.Q.target.order(), -1);
  for (Elem e = 0; e < ext.E.target.order(); ++e)
    if (s[ext.p[e]] < 0) s[ext.p[e]] = e;
  return s;
}

std::optional<std::vector<Elem>> are_equivalent(const GammaModuleExtension& a, const GammaModuleExtension& b,
                                                std::uint64_t guard, Exec exec) {
  if (!(a.M == b.M) || !(a.Q == b.Q)) throw Error(ErrorKind::ShapeMismatch, "extensions of different data");
  const FiniteGroup& Ea = a.E.target;
  const FiniteGroup& Eb = b.E.target;
  if (Ea.order() != Eb.order()) return std::nullopt;
  const int ne = Ea.order(), nq = a.Q.target.order(), nb = a.M->nb(), ng = a.M->ng();
  std::uint64_t count = 1;
  for (int u = 1; u < nq; ++u) {
    if (count > guard / static_cast<std::uint64_t>(nb))
      throw Error(ErrorKind::SearchSpaceTooLarge, "equivalence search space exceeds guard");
    count *= nb;
  }
  // alpha(j b + s_u) = j' b + s'_u + j' g(u), g(0) = 0.
  const auto sa = least_section(a), sb = least_section(b);
  const auto ja = j_inverse(a);
  std::vector<Elem> base_b(ne), base_u(ne);
  for (Elem e = 0; e < ne; ++e) {
    base_u[e] = a.p[e];
    base_b[e] = ja[Ea.mul(e, Ea.inv(sa[base_u[e]]))];
    if (base_b[e] < 0) throw Error(ErrorKind::NotWellDefined, "extension is not exact");
  }
  std::optional<std::vector<Elem>> best;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel if (exec == Exec::Parallel)
  {
    std::optional<std::vector<Elem>> local;
    std::vector<Elem> g(nq), alpha(ne);
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < n; ++idx) {
      std::int64_t rest = idx;
      for (int u = nq - 1; u >= 1; --u) {
        g[u] = static_cast<Elem>(rest % nb);
        rest /= nb;
      }
      g[0] = 0;
      for (Elem e = 0; e < ne; ++e)
        alpha[e] = Eb.mul(Eb.mul(b.j[base_b[e]], sb[base_u[e]]), b.j[g[base_u[e]]]);
      bool ok = true;
      for (Elem e = 0; ok && e < ne; ++e) ok = b.eps[alpha[e]] == a.eps[e];
      for (Elem x = 0; ok && x < ne; ++x)
        for (Elem y = 0; ok && y < ne; ++y) ok = alpha[Ea.mul(x, y)] == Eb.mul(alpha[x], alpha[y]);
      for (Elem s = 0; ok && s < ng; ++s)
        for (Elem x = 0; ok && x < ne; ++x) ok = alpha[a.E(s, x)] == b.E(s, alpha[x]);
      if (ok && (!local || alpha < *local)) local = alpha;
    }
#pragma omp critical
    if (local && (!best || *local < *best)) best = local;
  }
  return best;
}

std::vector<GammaModuleExtension> enumerate_extensions(const ValidatedModule& m, const GammaModule& q,
                                                       const std::vector<Elem>& psi, std::uint64_t guard,
                                                       Exec exec) {
  const auto& M = *m;
  const Quotient& coker = m.coker_d();
  const int nq = q.target.order(), ng = M.ng();
  if (!in_range(psi, nq, coker.group.order())) throw Error(ErrorKind::ShapeMismatch, "psi has the wrong shape");
  const auto cocycles = enumerate_2cocycles(q, M.action_b(), guard, exec);
  std::vector<std::vector<Elem>> fibres(nq);
  for (Elem x = 0; x < M.nd(); ++x)
    for (Elem u = 0; u < nq; ++u)
      if (coker.projection(x) == psi[u]) fibres[u].push_back(x);
  std::uint64_t maps = 1;
  for (Elem u = 1; u < nq; ++u) {
    if (fibres[u].empty()) return {};
    maps *= fibres[u].size();
    if (maps > guard) throw Error(ErrorKind::SearchSpaceTooLarge, "object maps exceed guard");
  }
  if (static_cast<long double>(maps) * cocycles.size() > static_cast<long double>(guard))
    throw Error(ErrorKind::SearchSpaceTooLarge, "extension search space exceeds guard");
  std::vector<std::vector<GammaModuleExtension>> parts(cocycles.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(cocycles.size()); ++i) {
    const auto& f = cocycles[i];
    std::vector<Elem> obj(nq, M.D.identity());
    for (std::uint64_t idx = 0; idx < maps; ++idx) {
      std::uint64_t rest = idx;
      for (Elem u = nq - 1; u >= 1; --u) {
        obj[u] = fibres[u][rest % fibres[u].size()];
        rest /= fibres[u].size();
      }
      bool ok = obj[0] == M.D.identity();
      for (Elem u = 0; ok && u < nq; ++u) {
        for (Elem v = 0; ok && v < nq; ++v)
          ok = M.D.mul(obj[u], obj[v]) == M.D.mul(M.dm(f(u, v)), obj[q.target.mul(u, v)]);
        for (Elem s = 0; ok && s < ng; ++s) ok = M.sd(s, obj[u]) == M.D.mul(M.dm(f.at_grade(u, s)), obj[q(s, u)]);
      }
      if (ok) parts[i].push_back(crossed_product(m, q, f, obj));
    }
  }
  std::vector<GammaModuleExtension> out;
  for (auto& p : parts)
    for (auto& e : p) out.push_back(std::move(e));
  return out;
}

ExtensionClasses extension_classes(const std::vector<GammaModuleExtension>& exts, std::uint64_t guard, Exec exec) {
  ExtensionClasses ec;
  ec.class_of.assign(exts.size(), -1);
  for (std::size_t i = 0; i < exts.size(); ++i) {
    for (std::size_t k = 0; k < ec.representatives.size(); ++k)
      if (are_equivalent(exts[ec.representatives[k]], exts[i], guard, exec)) {
        ec.class_of[i] = static_cast<int>(k);
        break;
      }
    if (ec.class_of[i] < 0) {
      ec.class_of[i] = static_cast<int>(ec.representatives.size());
      ec.representatives.push_back(static_cast<int>(i));
    }
  }
  return ec;
}

namespace {

using ExtKey = std::tuple<std::vector<Elem>, std::vector<Elem>, std::vector<Elem>>;

ExtKey crossed_product_key(const SymmetricCochain2& f, const std::vector<Elem>& objects) {
  return {f.pairs, f.grades, objects};
}

std::vector<MorId> functor_key(const GradedFunctor& F) {
  std::vector<MorId> k(F.obj.begin(), F.obj.end());
  k.insert(k.end(), F.mor.begin(), F.mor.end());
  k.insert(k.end(), F.ftilde.begin(), F.ftilde.end());
  k.push_back(F.fstar);
  return k;
}

}  // namespace

SchreierReport schreier_bijection_check(const ValidatedModule& m, const GammaModule& q, const std::vector<Elem>& psi,
                                        std::uint64_t guard, Exec exec) {
  if (!is_abelian(*m)) throw Error(ErrorKind::WrongType, "M is not an abelian Gamma-crossed module");
  const GradedCatGroup dis = discrete_catgroup(q);
  const GradedCatGroup g = build_catgroup(m);
  const HomotopyClasses hc = homotopy_classes(dis, g, discrete_type(dis, m, g, psi), guard, exec);
  const auto exts = enumerate_extensions(m, q, psi, guard, exec);
  const ExtensionClasses ec = extension_classes(exts, guard, exec);

  SchreierReport rep;
  rep.functors = hc.functors.size();
  rep.functor_classes = hc.class_count();
  rep.extensions = exts.size();
  rep.extension_classes = ec.class_count();

  std::map<ExtKey, int> ext_index;
  for (std::size_t i = 0; i < exts.size(); ++i) {
    const auto s = least_section(exts[i]);
    std::vector<Elem> obj(s.size());
    for (std::size_t u = 0; u < s.size(); ++u) obj[u] = exts[i].eps[s[u]];
    ext_index.emplace(crossed_product_key(section_cochain(exts[i], s), obj), static_cast<int>(i));
  }
  std::map<std::vector<MorId>, int> functor_index;
  for (std::size_t i = 0; i < hc.functors.size(); ++i) functor_index.emplace(functor_key(hc.functors[i]), static_cast<int>(i));

  // Omega on every functor, as an extension class.
  auto& lands = rep.checks.add("omega_lands_in_enumeration");
  auto& induces = rep.checks.add("induces_psi");
  std::vector<int> omega(hc.functors.size(), -1);
  for (std::size_t i = 0; i < hc.functors.size(); ++i) {
    const GradedFunctor& F = hc.functors[i];
    const auto e = extension_from_functor(F, m, q, dis, g);
    if (induced_psi(e) != psi) induces.record({static_cast<int>(i)});
    auto it = ext_index.find(crossed_product_key(functor_cochain(F, m, q, dis, g), F.obj));
    if (it == ext_index.end()) {
      lands.record({static_cast<int>(i)});
      continue;
    }
    omega[i] = ec.class_of[it->second];
  }
  auto& wd = rep.checks.add("omega_well_defined");
  for (std::size_t i = 0; i < hc.functors.size(); ++i) {
    const int r = hc.representatives[hc.class_of[i]];
    if (omega[i] != omega[r]) wd.record({static_cast<int>(i), r});
  }
  auto& inj = rep.checks.add("omega_injective");
  for (std::size_t a = 0; a < hc.class_count(); ++a)
    for (std::size_t b = a + 1; b < hc.class_count(); ++b)
      if (omega[hc.representatives[a]] == omega[hc.representatives[b]])
        inj.record({static_cast<int>(a), static_cast<int>(b)});
  auto& sur = rep.checks.add("omega_surjective");
  for (std::size_t k = 0; k < ec.class_count(); ++k)
    if (std::find(omega.begin(), omega.end(), static_cast<int>(k)) == omega.end()) sur.record({static_cast<int>(k)});

  // Back from every extension: its functor must be found, and equivalent
  // extensions must give homotopic functors.
  auto& round = rep.checks.add("round_trip");
  auto& back = rep.checks.add("equivalence_implies_homotopy");
  std::vector<int> functor_class_of_ext_class(ec.class_count(), -1);
  for (std::size_t i = 0; i < exts.size(); ++i) {
    const auto F = functor_from_extension(exts[i], least_section(exts[i]), dis, g);
    auto it = functor_index.find(functor_key(F));
    if (it == functor_index.end()) {
      round.record({static_cast<int>(i)});
      continue;
    }
    if (omega[it->second] != ec.class_of[i]) round.record({static_cast<int>(i)});
    int& cls = functor_class_of_ext_class[ec.class_of[i]];
    if (cls < 0)
      cls = hc.class_of[it->second];
    else if (cls != hc.class_of[it->second])
      back.record({static_cast<int>(i), ec.class_of[i]});
  }
  return rep;
}

Classification classify(const ValidatedModule& m, const GammaModule& q, const std::vector<Elem>& psi,
                        std::uint64_t guard, Exec exec) {
  if (!is_abelian(*m)) throw Error(ErrorKind::WrongType, "M is not an abelian Gamma-crossed module");
  const GradedCatGroup g = build_catgroup(m);
  const Cochain3 h = reduce(g, canonical_choices(m, g));
  const Cochain3 k = pullback3(q, psi, h);
  Classification out;
  const H2Linear lin(q, m.pi1());
  out.h2_invariants = lin.invariants();
  out.obstructed = !class_vanishes(k, guard, exec);
  if (!out.obstructed) {
    const GradedCatGroup dis = discrete_catgroup(q);
    const auto base = find_functor(dis, g, discrete_type(dis, m, g, psi), guard, exec);
    if (!base) throw std::logic_error("obstruction vanishes but no functor was found");
    const SymmetricCochain2 f0 = functor_cochain(*base, m, q, dis, g);
    const FiniteGroup& B = m->B;
    for (const auto& c : lin.representatives()) {
      SymmetricCochain2 f = f0;
      for (std::size_t i = 0; i < f.pairs.size(); ++i) f.pairs[i] = B.mul(f.pairs[i], m.ker_d()[c.pairs[i]]);
      for (std::size_t i = 0; i < f.grades.size(); ++i) f.grades[i] = B.mul(f.grades[i], m.ker_d()[c.grades[i]]);
      out.representatives.push_back(crossed_product(m, q, f, base->obj));
    }
    out.class_count = out.representatives.size();
  }
  try {
    out.enumerated_count =
        static_cast<long>(extension_classes(enumerate_extensions(m, q, psi, guard, exec), guard, exec).class_count());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SearchSpaceTooLarge) throw;
  }
  return out;
}

}  // namespace xmodcat
