#include "xmodcat/functor.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <stdexcept>

#include "xmodcat/cohomology.hpp"
#include "xmodcat/error.hpp"

namespace xmodcat {

namespace {

MorId cmp(const GradedCatGroup& g, MorId f, MorId h) { return f < 0 || h < 0 ? -1 : g.comp(f, h); }
MorId tns(const GradedCatGroup& g, MorId f, MorId h) { return f < 0 || h < 0 ? -1 : g.tens(f, h); }

}  // namespace

// -- regularity and the translation ------------------------------------------

bool is_regular(const GradedFunctor& F, const GradedCatGroup& src, const GradedCatGroup& dst) {
  if (!src.has_lifts() || !dst.has_lifts()) throw Error(ErrorKind::WrongType, "regularity needs recorded lifts");
  const int ob = src.objects, n = src.size(), ng = src.ng();
  for (Elem x = 0; x < ob; ++x)
    for (Elem y = 0; y < ob; ++y) {
      if (dst.otens(F.obj[x], F.obj[y]) != F.obj[src.otens(x, y)]) return false;
      const MorId a = F.ft(x, y), b = F.ft(y, x);
      if (a < 0 || b < 0 || dst.mor(a).payload != dst.mor(b).payload) return false;
    }
  std::vector<MorId> grade1;
  for (MorId f = 0; f < n; ++f)
    if (src.mor(f).grade == 0) grade1.push_back(f);
  for (MorId b : grade1)
    for (MorId c : grade1)
      if (tns(dst, F.mor[b], F.mor[c]) != F.mor[src.tens(b, c)]) return false;
  const FactorSet fs = extract_factor_set(src, src.lifts);
  const FactorSet fd = extract_factor_set(dst, dst.lifts);
  for (Elem s = 0; s < ng; ++s) {
    for (Elem x = 0; x < ob; ++x)
      if (F.obj[fs.F[s].obj[x]] != fd.F[s].obj[F.obj[x]]) return false;
    for (MorId b : grade1) {
      const MorId sb = fs.F[s].mor[b];
      const MorId fb = F.mor[b];
      if (sb < 0 || fb < 0 || F.mor[sb] != fd.F[s].mor[fb]) return false;
    }
  }
  return true;
}

GradedFunctor morphism_to_functor(const CrossedMorphism& m, const ValidatedModule& src, const ValidatedModule& dst,
                                  const GradedCatGroup& gsrc, const GradedCatGroup& gdst) {
  const auto& S = *src;
  const auto& T = *dst;
  const Quotient& q = src.coker_d();
  auto phi_b = [&](Elem pos) { return dst.ker_d()[pos]; };
  GradedFunctor F;
  F.obj = m.f0;
  F.mor.resize(gsrc.size());
  for (MorId f = 0; f < gsrc.size(); ++f) {
    const auto& r = gsrc.mor(f);
    const Elem px = q.projection(r.src);
    const Elem payload = T.B.mul(phi_b(m.phi.at_grade(px, r.grade)), m.f1[r.payload]);
    F.mor[f] = gdst.find({m.f0[r.src], m.f0[r.dst], payload, r.grade});
    if (F.mor[f] < 0) throw std::logic_error("translated morphism does not exist");
  }
  const int nd = S.nd();
  F.ftilde.resize(static_cast<std::size_t>(nd) * nd);
  for (Elem x = 0; x < nd; ++x)
    for (Elem y = 0; y < nd; ++y) {
      const Elem b = phi_b(m.phi(q.projection(x), q.projection(y)));
      const MorId id = gdst.find({T.D.mul(m.f0[x], m.f0[y]), m.f0[S.D.mul(x, y)], b, 0});
      if (id < 0) throw std::logic_error("translated F~ does not exist");
      F.ftilde[static_cast<std::size_t>(x) * nd + y] = id;
    }
  F.fstar = gdst.id(gdst.unit);
  return F;
}

CrossedMorphism functor_to_morphism(const GradedFunctor& F, const ValidatedModule& src, const ValidatedModule& dst,
                                    const GradedCatGroup& gsrc, const GradedCatGroup& gdst) {
  const AxiomReport rep = check_graded_functor(F, gsrc, gdst, Exec::Serial);
  if (!rep.all_pass()) throw Error(ErrorKind::NotCoherent, "failing: " + rep.failing().front());
  if (!is_regular(F, gsrc, gdst)) throw Error(ErrorKind::NotRegular, "functor is not regular");
  if (F.fstar != gdst.id(gdst.unit)) throw Error(ErrorKind::NotRegular, "F_* is not the identity");
  const auto& S = *src;
  CrossedMorphism m;
  m.f0 = F.obj;
  m.f1.resize(S.nb());
  for (Elem b = 0; b < S.nb(); ++b) m.f1[b] = gdst.mor(F.mor[gsrc.find({S.dm(b), 0, b, 0})]).payload;
  // f(x,y) from F~ and f(x,sigma) from the image of (0,sigma): x -> sigma x.
  const Quotient& q = src.coker_d();
  const int nq = q.group.order(), ng = S.ng(), nd = S.nd();
  auto pos = [&](Elem b) {
    const Elem p = dst.ker_index(b);
    if (p < 0) throw Error(ErrorKind::FNotConstantOnCosets, "f takes a value outside Ker d'");
    return p;
  };
  auto fxy = [&](Elem x, Elem y) { return gdst.mor(F.ft(x, y)).payload; };
  auto fxs = [&](Elem x, Elem s) { return gdst.mor(F.mor[gsrc.lift(x, s)]).payload; };
  m.phi = SymmetricCochain2::zero(src.pi0(), dst.pi1());
  for (Elem r = 0; r < nq; ++r) {
    for (Elem t = 0; t < nq; ++t) m.phi(r, t) = pos(fxy(q.representatives[r], q.representatives[t]));
    for (Elem s = 0; s < ng; ++s) m.phi.at_grade(r, s) = pos(fxs(q.representatives[r], s));
  }
  for (Elem x = 0; x < nd; ++x) {
    for (Elem y = 0; y < nd; ++y)
      if (pos(fxy(x, y)) != m.phi(q.projection(x), q.projection(y)))
        throw Error(ErrorKind::FNotConstantOnCosets,
                    "f(" + std::to_string(x) + "," + std::to_string(y) + ") differs within a coset");
    for (Elem s = 0; s < ng; ++s)
      if (pos(fxs(x, s)) != m.phi.at_grade(q.projection(x), s))
        throw Error(ErrorKind::FNotConstantOnCosets,
                    "f(" + std::to_string(x) + ",sigma" + std::to_string(s) + ") differs within a coset");
  }
  const AxiomReport mr = validate_morphism(m, src, dst);
  if (!mr.all_pass()) throw Error(ErrorKind::NotRegular, "extracted triple fails " + mr.failing().front());
  return m;
}

// -- homotopies ---------------------------------------------------------------

AxiomReport homotopy_report(const std::vector<MorId>& theta, const GradedFunctor& F, const GradedFunctor& G,
                            const GradedCatGroup& src, const GradedCatGroup& dst, Exec exec) {
  const int ob = src.objects, n = src.size();
  if (theta.size() != static_cast<std::size_t>(ob)) throw Error(ErrorKind::ShapeMismatch, "one theta per object");
  AxiomReport rep;
  {
    auto& c = rep.add("theta_typing");
    for (Elem x = 0; x < ob; ++x) {
      const MorId t = theta[x];
      if (t < 0 || t >= dst.size() || dst.mor(t).src != F.obj[x] || dst.mor(t).dst != G.obj[x] ||
          dst.mor(t).grade != 0)
        c.record({x});
    }
    if (!c.pass()) return rep;
  }
  std::vector<AxiomCheck> parts(n);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (MorId f = 0; f < n; ++f) {
    const auto& m = src.mor(f);
    const MorId lhs = cmp(dst, theta[m.src], G.mor[f]);
    if (lhs < 0 || lhs != cmp(dst, F.mor[f], theta[m.dst])) parts[f].record({f});
  }
  auto& nat = rep.add("theta_natural");
  for (const auto& p : parts) nat.merge(p);
  auto& mon = rep.add("theta_monoidal");
  for (Elem x = 0; x < ob; ++x)
    for (Elem y = 0; y < ob; ++y) {
      const MorId lhs = cmp(dst, tns(dst, theta[x], theta[y]), G.ft(x, y));
      if (lhs < 0 || lhs != cmp(dst, F.ft(x, y), theta[src.otens(x, y)])) mon.record({x, y});
    }
  auto& unit = rep.add("theta_unit");
  if (cmp(dst, F.fstar, theta[src.unit]) != G.fstar) unit.record({0});
  return rep;
}

bool is_homotopy(const std::vector<MorId>& theta, const GradedFunctor& F, const GradedFunctor& G,
                 const GradedCatGroup& src, const GradedCatGroup& dst, Exec exec) {
  return homotopy_report(theta, F, G, src, dst, exec).all_pass();
}

GradedFunctor transport(const GradedFunctor& F, const std::vector<MorId>& theta, const GradedCatGroup& src,
                        const GradedCatGroup& dst) {
  const int ob = src.objects;
  GradedFunctor G;
  G.obj.resize(ob);
  for (Elem x = 0; x < ob; ++x) G.obj[x] = dst.mor(theta[x]).dst;
  G.mor.resize(src.size());
  for (MorId f = 0; f < src.size(); ++f) {
    const auto& m = src.mor(f);
    G.mor[f] = cmp(dst, cmp(dst, dst.inverse(theta[m.src]), F.mor[f]), theta[m.dst]);
  }
  G.ftilde.resize(F.ftilde.size());
  for (Elem x = 0; x < ob; ++x)
    for (Elem y = 0; y < ob; ++y)
      G.ftilde[static_cast<std::size_t>(x) * ob + y] =
          cmp(dst, cmp(dst, dst.inverse(tns(dst, theta[x], theta[y])), F.ft(x, y)), theta[src.otens(x, y)]);
  G.fstar = cmp(dst, F.fstar, theta[src.unit]);
  return G;
}

// -- types --------------------------------------------------------------------

FunctorType reduced_type(const GradedCatGroup& src, const GradedCatGroup& dst, const std::vector<Elem>& phi,
                         const std::vector<Elem>& f) {
  if (phi.size() != static_cast<std::size_t>(src.objects) || f.size() != static_cast<std::size_t>(src.payloads))
    throw Error(ErrorKind::ShapeMismatch, "type maps have the wrong size");
  FunctorType t;
  for (Elem r = 0; r < src.objects; ++r) t.object_candidates.push_back({phi[r]});
  t.unit_auto_map.assign(src.size(), -1);
  for (Elem a = 0; a < src.payloads; ++a) {
    const MorId k = src.find({src.unit, src.unit, a, 0});
    if (k >= 0) t.unit_auto_map[k] = dst.find({dst.unit, dst.unit, f[a], 0});
  }
  return t;
}

FunctorType discrete_type(const GradedCatGroup& dis, const ValidatedModule& m, const GradedCatGroup& g,
                          const std::vector<Elem>& psi) {
  if (psi.size() != static_cast<std::size_t>(dis.objects)) throw Error(ErrorKind::ShapeMismatch, "psi has the wrong size");
  FunctorType t;
  const Quotient& q = m.coker_d();
  for (Elem u = 0; u < dis.objects; ++u) {
    std::vector<Elem> c;
    for (Elem x = 0; x < m->nd(); ++x)
      if (q.projection(x) == psi[u]) c.push_back(x);
    t.object_candidates.push_back(std::move(c));
  }
  t.unit_auto_map.assign(dis.size(), -1);
  for (MorId k = 0; k < dis.size(); ++k) {
    const auto& r = dis.mor(k);
    if (r.src == dis.unit && r.dst == dis.unit && r.grade == 0) t.unit_auto_map[k] = g.id(g.unit);
  }
  return t;
}

// -- the search ---------------------------------------------------------------

namespace {

struct Slot {
  int kind;  // 0 object, 1 F~, 2 lift
  Elem a, b;
};

struct Constraint {
  int kind;  // see Search::holds
  int args[4];
};

class Search {
 public:
  Search(const GradedCatGroup& src, const GradedCatGroup& dst, const FunctorType& type, std::uint64_t guard)
      : S(src), T(dst), type(type), ob(src.objects), ng(src.ng()) {
    validate_inputs();
    build_slots();
    build_constraints();
    check_guard(guard);
  }

  struct State {
    std::vector<Elem> obj;
    std::vector<MorId> ft;
    std::vector<MorId> lift;
  };

  State initial() const {
    State st{std::vector<Elem>(ob, -1), std::vector<MorId>(static_cast<std::size_t>(ob) * ob, -1),
             std::vector<MorId>(static_cast<std::size_t>(ob) * ng, -1)};
    st.obj[S.unit] = T.unit;
    return st;
  }

  int slot_count() const { return static_cast<int>(slots.size()); }

  std::vector<MorId> candidates(const State& st, int i) const {
    const Slot& s = slots[i];
    if (s.kind == 0) {
      const auto& c = type.object_candidates[s.a];
      return {c.begin(), c.end()};
    }
    if (s.kind == 1) return T.homs(T.otens(st.obj[s.a], st.obj[s.b]), st.obj[S.otens(s.a, s.b)], 0);
    return T.homs(st.obj[s.a], st.obj[sact(s.a, s.b)], s.b);
  }

  void assign(State& st, int i, MorId v) const {
    const Slot& s = slots[i];
    if (s.kind == 0)
      st.obj[s.a] = v;
    else if (s.kind == 1)
      st.ft[static_cast<std::size_t>(s.a) * ob + s.b] = v;
    else
      st.lift[static_cast<std::size_t>(s.a) * ng + s.b] = v;
  }

  // Constraints whose last slot is i (i = -1: before any slot).
  bool check(const State& st, int i) const {
    for (const auto& c : constraints[i + 1])
      if (!holds(st, c)) return false;
    return true;
  }

  GradedFunctor functor(const State& st) const {
    GradedFunctor F;
    F.obj = st.obj;
    F.mor.resize(S.size());
    for (MorId f = 0; f < S.size(); ++f) F.mor[f] = Fmor(st, f);
    F.ftilde.resize(static_cast<std::size_t>(ob) * ob);
    for (Elem x = 0; x < ob; ++x)
      for (Elem y = 0; y < ob; ++y) F.ftilde[static_cast<std::size_t>(x) * ob + y] = FT(st, x, y);
    F.fstar = T.id(T.unit);
    return F;
  }

  const GradedCatGroup& S;
  const GradedCatGroup& T;

 private:
  Elem sact(Elem r, Elem s) const { return S.mor(S.lift(r, s)).dst; }

  void validate_inputs() {
    if (!(S.gamma == T.gamma)) throw Error(ErrorKind::ShapeMismatch, "source and target have different gamma");
    if (!S.has_lifts()) throw Error(ErrorKind::WrongType, "source has no recorded lifts");
    if (S.unit != 0) throw Error(ErrorKind::WrongType, "source unit is not object 0");
    for (MorId f = 0; f < S.size(); ++f)
      if (S.mor(f).grade == 0 && S.mor(f).src != S.mor(f).dst) throw Error(ErrorKind::WrongType, "source is not skeletal");
    for (Elem x = 0; x < ob; ++x) {
      if (S.left_unit[x] != S.id(x) || S.right_unit[x] != S.id(x))
        throw Error(ErrorKind::WrongType, "source unitors are not identities");
      if (S.lift(x, 0) != S.id(x)) throw Error(ErrorKind::WrongType, "grade-1 lift is not an identity");
    }
    for (Elem s = 0; s < ng; ++s)
      if (S.lift(0, s) != S.unit_functor[s]) throw Error(ErrorKind::WrongType, "lift of the unit is not I(sigma)");
    if (type.object_candidates.size() != static_cast<std::size_t>(ob) ||
        type.unit_auto_map.size() != static_cast<std::size_t>(S.size()))
      throw Error(ErrorKind::ShapeMismatch, "functor type does not match the source");
    const auto& c0 = type.object_candidates[S.unit];
    if (std::find(c0.begin(), c0.end(), T.unit) == c0.end())
      throw Error(ErrorKind::WrongType, "the unit must be allowed to map to the unit");
    // Every grade-1 automorphism k of s is k' (x) id_s for one k' in Aut(I).
    unit_part.assign(S.size(), -1);
    for (MorId k = 0; k < S.size(); ++k) {
      const auto& r = S.mor(k);
      if (r.grade != 0 || r.src != S.unit || r.dst != S.unit) continue;
      const MorId u = type.unit_auto_map[k];
      if (u < 0 || T.mor(u).src != T.unit || T.mor(u).dst != T.unit || T.mor(u).grade != 0)
        throw Error(ErrorKind::WrongType, "unit automorphism map is incomplete");
      for (Elem x = 0; x < ob; ++x) unit_part[S.tens(k, S.id(x))] = k;
    }
    for (MorId k = 0; k < S.size(); ++k)
      if (S.mor(k).grade == 0 && unit_part[k] < 0) throw Error(ErrorKind::WrongType, "automorphism not a unit translate");
  }

  void build_slots() {
    obj_slot.assign(ob, -1);
    ft_slot.assign(static_cast<std::size_t>(ob) * ob, -1);
    lift_slot.assign(static_cast<std::size_t>(ob) * ng, -1);
    for (Elem r = 0; r < ob; ++r)
      if (r != S.unit) {
        obj_slot[r] = slot_count();
        slots.push_back({0, r, 0});
      }
    for (Elem r = 1; r < ob; ++r)
      for (Elem s = 1; s < ob; ++s) {
        ft_slot[static_cast<std::size_t>(r) * ob + s] = slot_count();
        slots.push_back({1, r, s});
      }
    for (Elem r = 1; r < ob; ++r)
      for (Elem s = 1; s < ng; ++s) {
        lift_slot[static_cast<std::size_t>(r) * ng + s] = slot_count();
        slots.push_back({2, r, s});
      }
  }

  int fts(Elem r, Elem s) const { return ft_slot[static_cast<std::size_t>(r) * ob + s]; }
  int ls(Elem r, Elem s) const { return lift_slot[static_cast<std::size_t>(r) * ng + s]; }

  void add(int kind, std::initializer_list<int> deps, std::initializer_list<int> args) {
    int last = ob > 1 ? obj_slot[ob - 1] : -1;
    for (int d : deps) last = std::max(last, d);
    Constraint c{kind, {0, 0, 0, 0}};
    std::copy(args.begin(), args.end(), c.args);
    constraints[last + 1].push_back(c);
  }

  void build_constraints() {
    constraints.assign(slots.size() + 1, {});
    std::vector<std::vector<MorId>> auts(ob);
    for (MorId k = 0; k < S.size(); ++k)
      if (S.mor(k).grade == 0) auts[S.mor(k).src].push_back(k);
    const FiniteGroup& G = S.gamma;
    for (Elem r = 1; r < ob; ++r)
      for (Elem s = 1; s < ng; ++s) {
        for (Elem t = 1; t < ng; ++t) add(0, {ls(r, s), ls(sact(r, s), t), ls(r, G.mul(t, s))}, {r, s, t});
        for (MorId k : auts[r]) add(1, {ls(r, s)}, {r, s, k});
      }
    for (Elem r = 0; r < ob; ++r)
      for (Elem t = 0; t < ob; ++t) {
        for (Elem s = 1; s < ng; ++s)
          add(2, {ls(r, s), ls(t, s), ls(S.otens(r, t), s), fts(r, t), fts(sact(r, s), sact(t, s))}, {r, t, s});
        for (MorId k : auts[r]) add(3, {fts(r, t)}, {r, t, k, 0});
        for (MorId k : auts[t]) add(3, {fts(r, t)}, {r, t, k, 1});
        add(5, {fts(r, t), fts(t, r)}, {r, t});
        for (Elem z = 0; z < ob; ++z)
          add(4, {fts(t, z), fts(r, S.otens(t, z)), fts(r, t), fts(S.otens(r, t), z)}, {r, t, z});
      }
  }

  void check_guard(std::uint64_t guard) {
    long double total = 1;
    for (Elem r = 0; r < ob; ++r)
      if (r != S.unit) total *= static_cast<long double>(type.object_candidates[r].size());
    std::vector<int> count(static_cast<std::size_t>(T.objects) * T.objects * T.ng(), 0);
    int maxhom = 0;
    for (const auto& m : T.morphisms) {
      int& c = count[(static_cast<std::size_t>(m.src) * T.objects + m.dst) * T.ng() + m.grade];
      maxhom = std::max(maxhom, ++c);
    }
    const std::size_t hom_slots = slots.size() - (ob - 1);
    for (std::size_t i = 0; i < hom_slots; ++i) total *= maxhom;
    if (total > static_cast<long double>(guard))
      throw Error(ErrorKind::SearchSpaceTooLarge, "functor search space exceeds guard");
  }

  MorId FT(const State& st, Elem r, Elem s) const {
    if (r == S.unit) return T.left_unit[st.obj[s]];
    if (s == S.unit) return T.right_unit[st.obj[r]];
    return st.ft[static_cast<std::size_t>(r) * ob + s];
  }
  MorId FL(const State& st, Elem r, Elem s) const {
    if (r == S.unit) return T.unit_functor[s];
    if (s == 0) return T.id(st.obj[r]);
    return st.lift[static_cast<std::size_t>(r) * ng + s];
  }
  MorId Faut(const State& st, MorId k) const {
    const Elem fx = st.obj[S.mor(k).src];
    const MorId u = type.unit_auto_map[unit_part[k]];
    const MorId l = T.left_unit[fx];
    return cmp(T, cmp(T, T.inverse(l), tns(T, u, T.id(fx))), l);
  }
  MorId Fmor(const State& st, MorId f) const {
    const auto& m = S.mor(f);
    const MorId k = S.comp(S.inverse(S.lift(m.src, m.grade)), f);
    return cmp(T, FL(st, m.src, m.grade), Faut(st, k));
  }

  bool holds(const State& st, const Constraint& c) const {
    const int* a = c.args;
    switch (c.kind) {
      case 0: {  // lifts compose like the source lifts
        const Elem r = a[0], s = a[1], t = a[2];
        const MorId lhs = cmp(T, FL(st, r, s), FL(st, sact(r, s), t));
        return lhs >= 0 && lhs == Fmor(st, S.comp(S.lift(r, s), S.lift(sact(r, s), t)));
      }
      case 1: {  // F(k then lift) = F(k) then L
        const Elem r = a[0], s = a[1];
        const MorId k = a[2];
        const MorId rhs = cmp(T, Faut(st, k), FL(st, r, s));
        return rhs >= 0 && Fmor(st, S.comp(k, S.lift(r, s))) == rhs;
      }
      case 2: {  // F~ natural on pairs of lifts
        const Elem r = a[0], t = a[1], s = a[2];
        const MorId lhs = cmp(T, FT(st, r, t), Fmor(st, S.tens(S.lift(r, s), S.lift(t, s))));
        const MorId rhs = cmp(T, tns(T, FL(st, r, s), FL(st, t, s)), FT(st, sact(r, s), sact(t, s)));
        return lhs >= 0 && lhs == rhs;
      }
      case 3: {  // F~ natural on automorphisms in either slot
        const Elem r = a[0], t = a[1];
        const MorId k = a[2];
        MorId lhs, rhs;
        if (a[3] == 0) {
          lhs = cmp(T, FT(st, r, t), Faut(st, S.tens(k, S.id(t))));
          rhs = cmp(T, tns(T, Faut(st, k), T.id(st.obj[t])), FT(st, r, t));
        } else {
          lhs = cmp(T, FT(st, r, t), Faut(st, S.tens(S.id(r), k)));
          rhs = cmp(T, tns(T, T.id(st.obj[r]), Faut(st, k)), FT(st, r, t));
        }
        return lhs >= 0 && lhs == rhs;
      }
      case 4: {  // associativity coherence
        const Elem x = a[0], y = a[1], z = a[2];
        const Elem fx = st.obj[x], fy = st.obj[y], fz = st.obj[z];
        const MorId lhs =
            cmp(T, cmp(T, T.a(fx, fy, fz), tns(T, T.id(fx), FT(st, y, z))), FT(st, x, S.otens(y, z)));
        const MorId rhs = cmp(T, cmp(T, tns(T, FT(st, x, y), T.id(fz)), FT(st, S.otens(x, y), z)),
                              Faut(st, S.a(x, y, z)));
        return lhs >= 0 && lhs == rhs;
      }
      default: {  // braiding coherence
        const Elem x = a[0], y = a[1];
        const MorId lhs = cmp(T, T.c(st.obj[x], st.obj[y]), FT(st, y, x));
        return lhs >= 0 && lhs == cmp(T, FT(st, x, y), Faut(st, S.c(x, y)));
      }
    }
  }

  const FunctorType& type;
  int ob, ng;
  std::vector<MorId> unit_part;
  std::vector<Slot> slots;
  std::vector<int> obj_slot, ft_slot, lift_slot;
  std::vector<std::vector<Constraint>> constraints;
};

// Depth-first search from slot `from` with st already holding slots < from.
// visit(state) returns false to stop.
template <class Visit>
bool dfs(const Search& s, Search::State& st, int from, int to, Visit&& visit) {
  if (from == to) return visit(st);
  const auto cand = s.candidates(st, from);
  for (MorId v : cand) {
    s.assign(st, from, v);
    if (!s.check(st, from)) continue;
    if (!dfs(s, st, from + 1, to, visit)) return false;
  }
  return true;
}

// Functors in search order, with the number of late rejections.
std::pair<std::vector<GradedFunctor>, std::uint64_t> run(const Search& s, Exec exec, bool first_only) {
  Search::State st = s.initial();
  std::vector<GradedFunctor> out;
  std::uint64_t late = 0;
  if (!s.check(st, -1)) return {out, late};
  auto accept = [&](const Search::State& full, std::vector<GradedFunctor>& into, std::uint64_t& rejected) {
    GradedFunctor F = s.functor(full);
    if (check_graded_functor(F, s.S, s.T, Exec::Serial).all_pass())
      into.push_back(std::move(F));
    else
      ++rejected;
  };
  const int n = s.slot_count();
  if (first_only || exec == Exec::Serial) {
    dfs(s, st, 0, n, [&](const Search::State& full) {
      accept(full, out, late);
      return !(first_only && !out.empty());
    });
    return {out, late};
  }
  // Prefixes of increasing depth until there is enough parallel work.
  std::vector<Search::State> prefixes{st};
  int depth = 0;
  while (depth < n && prefixes.size() < 64) {
    std::vector<Search::State> next;
    for (auto& p : prefixes)
      dfs(s, p, depth, depth + 1, [&](const Search::State& q) {
        next.push_back(q);
        return true;
      });
    prefixes = std::move(next);
    ++depth;
  }
  std::vector<std::vector<GradedFunctor>> parts(prefixes.size());
  std::vector<std::uint64_t> rejected(prefixes.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(prefixes.size()); ++i) {
    Search::State local = prefixes[i];
    dfs(s, local, depth, n, [&](const Search::State& full) {
      accept(full, parts[i], rejected[i]);
      return true;
    });
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (auto& F : parts[i]) out.push_back(std::move(F));
    late += rejected[i];
  }
  return {out, late};
}

std::vector<MorId> functor_key(const GradedFunctor& F) {
  std::vector<MorId> k(F.obj.begin(), F.obj.end());
  k.insert(k.end(), F.mor.begin(), F.mor.end());
  k.insert(k.end(), F.ftilde.begin(), F.ftilde.end());
  k.push_back(F.fstar);
  return k;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

HomotopyClasses homotopy_classes(const GradedCatGroup& src, const GradedCatGroup& dst, const FunctorType& type,
                                 std::uint64_t guard, Exec exec) {
  const Search search(src, dst, type, guard);
  HomotopyClasses hc;
  std::tie(hc.functors, hc.late_rejections) = run(search, exec, false);
  const int nf = static_cast<int>(hc.functors.size());
  std::map<std::vector<MorId>, int> index;
  for (int i = 0; i < nf; ++i) index.emplace(functor_key(hc.functors[i]), i);
  std::vector<int> parent(nf);
  std::iota(parent.begin(), parent.end(), 0);
  // Single-object moves generate every homotopy (theta at the unit is forced).
  for (int i = 0; i < nf; ++i) {
    const GradedFunctor& F = hc.functors[i];
    for (Elem r = 0; r < src.objects; ++r) {
      if (r == src.unit) continue;
      for (Elem y : type.object_candidates[r])
        for (MorId t : dst.homs(F.obj[r], y, 0)) {
          std::vector<MorId> theta(src.objects);
          for (Elem x = 0; x < src.objects; ++x) theta[x] = dst.id(F.obj[x]);
          theta[r] = t;
          const GradedFunctor G = transport(F, theta, src, dst);
          if (!is_homotopy(theta, F, G, src, dst, Exec::Serial))
            throw std::logic_error("transported functor is not homotopic");
          auto it = index.find(functor_key(G));
          if (it == index.end()) throw std::logic_error("transported functor missing from the enumeration");
          const int a = find_root(parent, i), b = find_root(parent, it->second);
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
  }
  hc.class_of.assign(nf, -1);
  std::map<int, int> root_class;
  for (int i = 0; i < nf; ++i) {
    const int root = find_root(parent, i);
    auto [it, inserted] = root_class.emplace(root, static_cast<int>(hc.representatives.size()));
    if (inserted) hc.representatives.push_back(i);
    hc.class_of[i] = it->second;
  }
  return hc;
}

std::optional<GradedFunctor> find_functor(const GradedCatGroup& src, const GradedCatGroup& dst, const FunctorType& type,
                                          std::uint64_t guard, Exec exec) {
  const Search search(src, dst, type, guard);
  auto [found, late] = run(search, exec, true);
  if (found.empty()) return std::nullopt;
  return found.front();
}

}  // namespace xmodcat
