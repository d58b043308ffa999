#include "xmodcat/catgroup.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "xmodcat/error.hpp"

namespace xmodcat {

MorId GradedCatGroup::find(const Morphism& m) const {
  if (m.src < 0 || m.src >= objects || m.dst < 0 || m.dst >= objects || m.payload < 0 || m.payload >= payloads ||
      m.grade < 0 || m.grade >= ng())
    return -1;
  return index_[((static_cast<std::size_t>(m.src) * objects + m.dst) * payloads + m.payload) * ng() + m.grade];
}

std::vector<MorId> GradedCatGroup::homs(Elem x, Elem y, Elem grade) const {
  std::vector<MorId> out;
  for (Elem p = 0; p < payloads; ++p) {
    MorId f = find({x, y, p, grade});
    if (f >= 0) out.push_back(f);
  }
  return out;
}

void GradedCatGroup::index_inverses() {
  const int n = size();
  inverses_.assign(n, -1);
  for (MorId f = 0; f < n; ++f) {
    const auto& m = morphisms[f];
    if (m.src >= static_cast<int>(identities.size()) || identities[m.src] < 0) continue;
    for (Elem p = 0; p < payloads && inverses_[f] < 0; ++p) {
      MorId g = find({m.dst, m.src, p, gamma.inv(m.grade)});
      if (g >= 0 && comp(f, g) == identities[m.src] && comp(g, f) == identities[m.dst]) inverses_[f] = g;
    }
  }
}

namespace {

// Null-propagating composition and tensor.
struct Ops {
  const GradedCatGroup& g;
  MorId C(MorId f, MorId h) const { return f < 0 || h < 0 ? -1 : g.comp(f, h); }
  MorId T(MorId f, MorId h) const { return f < 0 || h < 0 ? -1 : g.tens(f, h); }
  MorId inv(MorId f) const { return g.inverse(f); }
};

// Runs body(i, check) for i in [0,n) into per-index slots, then folds them in
// index order so the result does not depend on scheduling.
template <class Body>
void scan(AxiomReport& rep, const std::string& name, int n, Exec exec, Body&& body, bool informational = false) {
  std::vector<AxiomCheck> parts(n);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (int i = 0; i < n; ++i) body(i, parts[i]);
  AxiomCheck total;
  for (const auto& p : parts) total.merge(p);
  auto& slot = rep.add(name, informational);
  slot.merge(total);
}

void set_standard_structure(GradedCatGroup& g) {
  const int n = g.objects;
  g.identities.assign(n, -1);
  for (Elem x = 0; x < n; ++x) g.identities[x] = g.find({x, x, 0, 0});
}

}  // namespace

GradedCatGroup detail::build_catgroup_unchecked(const BraidedGammaCrossedModule& m) {
  const FiniteGroup& B = m.B;
  const FiniteGroup& D = m.D;
  GradedCatGroup g;
  g.gamma = m.gamma;
  g.objects = m.nd();
  g.payloads = m.nb();
  g.unit = 0;
  for (Elem x = 0; x < m.nd(); ++x)
    for (Elem b = 0; b < m.nb(); ++b)
      for (Elem s = 0; s < m.ng(); ++s) {
        // sigma x = d(b) y
        const Elem y = D.mul(D.inv(m.dm(b)), m.sd(s, x));
        g.morphisms.push_back({x, y, b, s});
      }
  g.finalize(
      [&](const Morphism& f, const Morphism& h) -> std::optional<Morphism> {
        return Morphism{f.src, h.dst, B.mul(m.sb(h.grade, f.payload), h.payload), m.gamma.mul(h.grade, f.grade)};
      },
      [&](const Morphism& f, const Morphism& h) -> std::optional<Morphism> {
        return Morphism{D.mul(f.src, h.src), D.mul(f.dst, h.dst), B.mul(f.payload, m.th(f.dst, h.payload)), f.grade};
      });
  const int n = m.nd();
  g.object_tensor.resize(static_cast<std::size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) g.object_tensor[static_cast<std::size_t>(x) * n + y] = D.mul(x, y);
  set_standard_structure(g);
  g.assoc.resize(static_cast<std::size_t>(n) * n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        g.assoc[(static_cast<std::size_t>(x) * n + y) * n + z] = g.identities[D.mul(D.mul(x, y), z)];
  g.left_unit = g.identities;
  g.right_unit = g.identities;
  g.braiding.resize(static_cast<std::size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      g.braiding[static_cast<std::size_t>(x) * n + y] = g.find({D.mul(x, y), D.mul(y, x), m.et(x, y), 0});
  g.unit_functor.resize(m.ng());
  for (Elem s = 0; s < m.ng(); ++s) g.unit_functor[s] = g.find({0, 0, 0, s});
  g.lifts.resize(static_cast<std::size_t>(n) * m.ng());
  for (Elem x = 0; x < n; ++x)
    for (Elem s = 0; s < m.ng(); ++s) g.lifts[static_cast<std::size_t>(x) * m.ng() + s] = g.find({x, m.sd(s, x), 0, s});
  g.index_inverses();
  return g;
}

GradedCatGroup build_catgroup(const ValidatedModule& m) { return detail::build_catgroup_unchecked(m.module()); }

GradedCatGroup build_reduced(const Cochain3& h) {
  const GammaModule& M = h.M;
  const GammaModule& N = h.N;
  if (!(M.gamma == N.gamma)) throw Error(ErrorKind::ShapeMismatch, "M and N have different gamma");
  const std::size_t m = h.m(), ng = h.g(), nn = N.target.order();
  if (h.assoc.size() != m * m * m || h.braid.size() != m * m || h.tensor.size() != m * m * ng ||
      h.compose.size() != m * ng * ng)
    throw Error(ErrorKind::ShapeMismatch, "cochain tables do not match |M| and |Gamma|");
  for (const auto* t : {&h.assoc, &h.braid, &h.tensor, &h.compose})
    for (Elem v : *t)
      if (v < 0 || v >= static_cast<Elem>(nn)) throw Error(ErrorKind::ShapeMismatch, "cochain value out of range");
  const FiniteGroup& Mg = M.target;
  const FiniteGroup& Ng = N.target;
  GradedCatGroup g;
  g.gamma = M.gamma;
  g.objects = static_cast<int>(m);
  g.payloads = static_cast<int>(nn);
  g.unit = 0;
  for (Elem r = 0; r < g.objects; ++r)
    for (Elem a = 0; a < g.payloads; ++a)
      for (Elem s = 0; s < g.ng(); ++s) g.morphisms.push_back({r, M(s, r), a, s});
  g.finalize(
      [&](const Morphism& f, const Morphism& k) -> std::optional<Morphism> {
        // (b,tau) o (a,sigma) = (b + tau a + h(r,tau,sigma), tau sigma)
        const Elem a = Ng.mul(Ng.mul(k.payload, N(k.grade, f.payload)), h.k(f.src, k.grade, f.grade));
        return Morphism{f.src, k.dst, a, g.gamma.mul(k.grade, f.grade)};
      },
      [&](const Morphism& f, const Morphism& k) -> std::optional<Morphism> {
        const Elem a = Ng.mul(Ng.mul(f.payload, k.payload), h.t(f.src, k.src, f.grade));
        return Morphism{Mg.mul(f.src, k.src), Mg.mul(f.dst, k.dst), a, f.grade};
      });
  const int n = g.objects;
  g.object_tensor.resize(static_cast<std::size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) g.object_tensor[static_cast<std::size_t>(x) * n + y] = Mg.mul(x, y);
  set_standard_structure(g);
  g.assoc.resize(static_cast<std::size_t>(n) * n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        const Elem o = Mg.mul(Mg.mul(x, y), z);
        g.assoc[(static_cast<std::size_t>(x) * n + y) * n + z] = g.find({o, o, h.a(x, y, z), 0});
      }
  g.left_unit = g.identities;
  g.right_unit = g.identities;
  g.braiding.resize(static_cast<std::size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem o = Mg.mul(x, y);
      g.braiding[static_cast<std::size_t>(x) * n + y] = g.find({o, o, h.c(x, y), 0});
    }
  g.unit_functor.resize(g.ng());
  for (Elem s = 0; s < g.ng(); ++s) g.unit_functor[s] = g.find({0, 0, 0, s});
  g.lifts.resize(static_cast<std::size_t>(n) * g.ng());
  for (Elem x = 0; x < n; ++x)
    for (Elem s = 0; s < g.ng(); ++s) g.lifts[static_cast<std::size_t>(x) * g.ng() + s] = g.find({x, M(s, x), 0, s});
  g.index_inverses();
  return g;
}

GradedCatGroup discrete_catgroup(const GammaModule& q) {
  return build_reduced(Cochain3::zero(q, trivial_action(q.gamma, FiniteGroup())));
}

AxiomReport check_axioms(const GradedCatGroup& g, Exec exec) {
  const Ops o{g};
  const int n = g.size();
  const int ob = g.objects;
  const int ng = g.ng();
  const FiniteGroup& G = g.gamma;
  // Morphisms out of x of grade sigma.
  std::vector<std::vector<MorId>> out(static_cast<std::size_t>(ob) * ng);
  for (MorId f = 0; f < n; ++f) out[static_cast<std::size_t>(g.mor(f).src) * ng + g.mor(f).grade].push_back(f);
  std::vector<MorId> all_out_offsets;
  auto from = [&](Elem x, Elem s) -> const std::vector<MorId>& { return out[static_cast<std::size_t>(x) * ng + s]; };
  std::vector<std::vector<MorId>> of_grade(ng);
  for (MorId f = 0; f < n; ++f) of_grade[g.mor(f).grade].push_back(f);
  auto typed = [&](MorId f, Elem src, Elem dst, Elem grade) {
    return f >= 0 && g.mor(f).src == src && g.mor(f).dst == dst && g.mor(f).grade == grade;
  };

  AxiomReport rep;
  scan(rep, "composition_typing", n, exec, [&](int f, AxiomCheck& c) {
    for (MorId k = 0; k < n; ++k) {
      const MorId r = g.comp(f, k);
      if (g.mor(f).dst != g.mor(k).src) {
        if (r != -1) c.record({f, k});
      } else if (!typed(r, g.mor(f).src, g.mor(k).dst, G.mul(g.mor(k).grade, g.mor(f).grade))) {
        c.record({f, k});
      }
    }
  });
  scan(rep, "composition_associativity", n, exec, [&](int f, AxiomCheck& c) {
    const Elem y = g.mor(f).dst;
    for (Elem s = 0; s < ng; ++s)
      for (MorId k : from(y, s))
        for (Elem t = 0; t < ng; ++t)
          for (MorId l : from(g.mor(k).dst, t))
            if (o.C(o.C(f, k), l) != o.C(f, o.C(k, l))) c.record({f, k, l});
  });
  scan(rep, "identity", n, exec, [&](int f, AxiomCheck& c) {
    const auto& m = g.mor(f);
    if (o.C(g.id(m.src), f) != f || o.C(f, g.id(m.dst)) != f) c.record({f});
  });
  scan(rep, "identity_typing", ob, exec, [&](int x, AxiomCheck& c) {
    if (!typed(g.id(x), x, x, 0)) c.record({x});
  });
  scan(rep, "groupoid", n, exec, [&](int f, AxiomCheck& c) {
    if (g.inverse(f) < 0) c.record({f});
  });
  scan(rep, "grade_stability", ob, exec, [&](int x, AxiomCheck& c) {
    for (Elem s = 0; s < ng; ++s)
      if (from(x, s).empty()) c.record({x, s});
  });
  scan(rep, "tensor_typing", n, exec, [&](int f, AxiomCheck& c) {
    const auto& mf = g.mor(f);
    for (MorId k = 0; k < n; ++k) {
      const auto& mk = g.mor(k);
      const MorId r = g.tens(f, k);
      if (mf.grade != mk.grade) {
        if (r != -1) c.record({f, k});
      } else if (!typed(r, g.otens(mf.src, mk.src), g.otens(mf.dst, mk.dst), mf.grade)) {
        c.record({f, k});
      }
    }
  });
  scan(rep, "tensor_identity", ob, exec, [&](int x, AxiomCheck& c) {
    for (Elem y = 0; y < ob; ++y)
      if (o.T(g.id(x), g.id(y)) != g.id(g.otens(x, y))) c.record({x, y});
  });
  scan(rep, "tensor_bifunctoriality", n, exec, [&](int f, AxiomCheck& c) {
    const auto& mf = g.mor(f);
    for (MorId k : of_grade[mf.grade])
      for (Elem t = 0; t < ng; ++t)
        for (MorId f2 : from(mf.dst, t))
          for (MorId k2 : from(g.mor(k).dst, t))
            if (o.T(o.C(f, f2), o.C(k, k2)) != o.C(o.T(f, k), o.T(f2, k2))) c.record({f, k, f2, k2});
  });
  scan(rep, "unit_functor", ng, exec, [&](int s, AxiomCheck& c) {
    const MorId is = g.unit_functor[s];
    if (!typed(is, g.unit, g.unit, s)) {
      c.record({s});
      return;
    }
    if (s == 0 && is != g.id(g.unit)) c.record({s});
    for (Elem t = 0; t < ng; ++t)
      if (o.C(is, g.unit_functor[t]) != g.unit_functor[G.mul(t, s)]) c.record({s, t});
  });
  scan(rep, "associator_typing", ob, exec, [&](int x, AxiomCheck& c) {
    for (Elem y = 0; y < ob; ++y)
      for (Elem z = 0; z < ob; ++z)
        if (!typed(g.a(x, y, z), g.otens(g.otens(x, y), z), g.otens(x, g.otens(y, z)), 0)) c.record({x, y, z});
  });
  scan(rep, "unitor_typing", ob, exec, [&](int x, AxiomCheck& c) {
    if (!typed(g.left_unit[x], g.otens(g.unit, x), x, 0)) c.record({0, x});
    if (!typed(g.right_unit[x], g.otens(x, g.unit), x, 0)) c.record({1, x});
  });
  scan(rep, "braiding_typing", ob, exec, [&](int x, AxiomCheck& c) {
    for (Elem y = 0; y < ob; ++y)
      if (!typed(g.c(x, y), g.otens(x, y), g.otens(y, x), 0)) c.record({x, y});
  });
  scan(rep, "associator_naturality", n, exec, [&](int f, AxiomCheck& c) {
    const auto& mf = g.mor(f);
    for (MorId k : of_grade[mf.grade])
      for (MorId l : of_grade[mf.grade]) {
        const auto& mk = g.mor(k);
        const auto& ml = g.mor(l);
        const MorId lhs = o.C(o.T(o.T(f, k), l), g.a(mf.dst, mk.dst, ml.dst));
        const MorId rhs = o.C(g.a(mf.src, mk.src, ml.src), o.T(f, o.T(k, l)));
        if (lhs < 0 || lhs != rhs) c.record({f, k, l});
      }
  });
  scan(rep, "unitor_naturality", n, exec, [&](int f, AxiomCheck& c) {
    const auto& mf = g.mor(f);
    const MorId is = g.unit_functor[mf.grade];
    const MorId l1 = o.C(o.T(is, f), g.left_unit[mf.dst]);
    if (l1 < 0 || l1 != o.C(g.left_unit[mf.src], f)) c.record({0, f});
    const MorId r1 = o.C(o.T(f, is), g.right_unit[mf.dst]);
    if (r1 < 0 || r1 != o.C(g.right_unit[mf.src], f)) c.record({1, f});
  });
  scan(rep, "braiding_naturality", n, exec, [&](int f, AxiomCheck& c) {
    const auto& mf = g.mor(f);
    for (MorId k : of_grade[mf.grade]) {
      const auto& mk = g.mor(k);
      const MorId lhs = o.C(o.T(f, k), g.c(mf.dst, mk.dst));
      if (lhs < 0 || lhs != o.C(g.c(mf.src, mk.src), o.T(k, f))) c.record({f, k});
    }
  });
  scan(rep, "pentagon", ob, exec, [&](int x, AxiomCheck& c) {
    for (Elem y = 0; y < ob; ++y)
      for (Elem z = 0; z < ob; ++z)
        for (Elem t = 0; t < ob; ++t) {
          const MorId lhs = o.C(g.a(g.otens(x, y), z, t), g.a(x, y, g.otens(z, t)));
          const MorId rhs = o.C(o.C(o.T(g.a(x, y, z), g.id(t)), g.a(x, g.otens(y, z), t)), o.T(g.id(x), g.a(y, z, t)));
          if (lhs < 0 || lhs != rhs) c.record({x, y, z, t});
        }
  });
  scan(rep, "triangle", ob, exec, [&](int x, AxiomCheck& c) {
    for (Elem y = 0; y < ob; ++y) {
      const MorId lhs = o.C(g.a(x, g.unit, y), o.T(g.id(x), g.left_unit[y]));
      if (lhs < 0 || lhs != o.T(g.right_unit[x], g.id(y))) c.record({x, y});
    }
  });
  scan(rep, "hexagon_1", ob, exec, [&](int x, AxiomCheck& c) {
    for (Elem y = 0; y < ob; ++y)
      for (Elem z = 0; z < ob; ++z) {
        const MorId lhs = o.C(o.C(o.T(g.c(x, y), g.id(z)), g.a(y, x, z)), o.T(g.id(y), g.c(x, z)));
        const MorId rhs = o.C(o.C(g.a(x, y, z), g.c(x, g.otens(y, z))), g.a(y, z, x));
        if (lhs < 0 || lhs != rhs) c.record({x, y, z});
      }
  });
  scan(rep, "hexagon_2", ob, exec, [&](int x, AxiomCheck& c) {
    for (Elem y = 0; y < ob; ++y)
      for (Elem z = 0; z < ob; ++z) {
        const MorId lhs = o.C(o.C(o.T(g.id(x), g.c(y, z)), o.inv(g.a(x, z, y))), o.T(g.c(x, z), g.id(y)));
        const MorId rhs = o.C(o.C(o.inv(g.a(x, y, z)), g.c(g.otens(x, y), z)), o.inv(g.a(z, x, y)));
        if (lhs < 0 || lhs != rhs) c.record({x, y, z});
      }
  });
  scan(rep, "object_invertibility", ob, exec, [&](int x, AxiomCheck& c) {
    for (Elem y = 0; y < ob; ++y)
      if (!g.homs(g.otens(x, y), g.unit, 0).empty()) return;
    c.record({x});
  });
  scan(
      rep, "symmetric", ob, exec,
      [&](int x, AxiomCheck& c) {
        for (Elem y = 0; y < ob; ++y)
          if (o.C(g.c(x, y), g.c(y, x)) != g.id(g.otens(x, y))) c.record({x, y});
      },
      true);
  return rep;
}

GradedCatGroup ker(const GradedCatGroup& g) {
  GradedCatGroup k;
  k.gamma = FiniteGroup();
  k.objects = g.objects;
  k.payloads = g.payloads;
  k.unit = g.unit;
  for (const auto& m : g.morphisms)
    if (m.grade == 0) k.morphisms.push_back(m);
  auto back = [&](MorId f) -> std::optional<Morphism> {
    if (f < 0 || g.mor(f).grade != 0) return std::nullopt;
    return g.mor(f);
  };
  k.finalize([&](const Morphism& f, const Morphism& h) { return back(g.comp(g.find(f), g.find(h))); },
             [&](const Morphism& f, const Morphism& h) { return back(g.tens(g.find(f), g.find(h))); });
  auto remap = [&](MorId f) {
    auto m = back(f);
    return m ? k.find(*m) : -1;
  };
  auto remap_all = [&](const std::vector<MorId>& v) {
    std::vector<MorId> r(v.size());
    std::transform(v.begin(), v.end(), r.begin(), remap);
    return r;
  };
  k.object_tensor = g.object_tensor;
  k.identities = remap_all(g.identities);
  k.assoc = remap_all(g.assoc);
  k.left_unit = remap_all(g.left_unit);
  k.right_unit = remap_all(g.right_unit);
  k.braiding = remap_all(g.braiding);
  k.unit_functor = {k.identities[k.unit]};
  if (g.has_lifts()) k.lifts = k.identities;
  k.index_inverses();
  return k;
}

GradedFunctor identity_functor(const GradedCatGroup& g) {
  GradedFunctor f;
  f.obj.resize(g.objects);
  for (Elem x = 0; x < g.objects; ++x) f.obj[x] = x;
  f.mor.resize(g.size());
  for (MorId m = 0; m < g.size(); ++m) f.mor[m] = m;
  f.ftilde.resize(static_cast<std::size_t>(g.objects) * g.objects);
  for (Elem x = 0; x < g.objects; ++x)
    for (Elem y = 0; y < g.objects; ++y) f.ftilde[static_cast<std::size_t>(x) * g.objects + y] = g.id(g.otens(x, y));
  f.fstar = g.id(g.unit);
  return f;
}

AxiomReport check_graded_functor(const GradedFunctor& F, const GradedCatGroup& src, const GradedCatGroup& dst,
                                 Exec exec) {
  AxiomReport rep;
  const int ob = src.objects;
  const int n = src.size();
  if (F.obj.size() != static_cast<std::size_t>(ob) || F.mor.size() != static_cast<std::size_t>(n) ||
      F.ftilde.size() != static_cast<std::size_t>(ob) * ob)
    throw Error(ErrorKind::ShapeMismatch, "functor tables do not match the source category");
  if (!(src.gamma == dst.gamma)) throw Error(ErrorKind::ShapeMismatch, "source and target have different gamma");
  const Ops o{dst};
  bool objects_ok = true;
  {
    auto& c = rep.add("object_typing");
    for (Elem x = 0; x < ob; ++x)
      if (F.obj[x] < 0 || F.obj[x] >= dst.objects) c.record({x});
    objects_ok = c.pass();
  }
  if (!objects_ok) return rep;
  auto Fm = [&](MorId f) { return f < 0 ? -1 : F.mor[f]; };
  auto typed = [&](MorId f, Elem s, Elem t, Elem grade) {
    return f >= 0 && f < dst.size() && dst.mor(f).src == s && dst.mor(f).dst == t && dst.mor(f).grade == grade;
  };
  bool mor_ok = true;
  {
    AxiomReport tmp;
    scan(tmp, "morphism_typing", n, exec, [&](int f, AxiomCheck& c) {
      const auto& m = src.mor(f);
      if (!typed(F.mor[f], F.obj[m.src], F.obj[m.dst], m.grade)) c.record({f});
    });
    mor_ok = tmp.checks[0].pass();
    rep.checks.push_back(tmp.checks[0]);
  }
  bool ft_ok = true;
  {
    auto& c = rep.add("ftilde_typing");
    for (Elem x = 0; x < ob; ++x)
      for (Elem y = 0; y < ob; ++y)
        if (!typed(F.ft(x, y), dst.otens(F.obj[x], F.obj[y]), F.obj[src.otens(x, y)], 0)) c.record({x, y});
    ft_ok = c.pass();
  }
  bool fs_ok = true;
  {
    auto& c = rep.add("fstar_typing");
    if (!typed(F.fstar, dst.unit, F.obj[src.unit], 0)) c.record({0});
    fs_ok = c.pass();
  }
  if (!mor_ok || !ft_ok || !fs_ok) return rep;

  std::vector<std::vector<MorId>> out(static_cast<std::size_t>(ob));
  for (MorId f = 0; f < n; ++f) out[src.mor(f).src].push_back(f);
  std::vector<std::vector<MorId>> of_grade(src.ng());
  for (MorId f = 0; f < n; ++f) of_grade[src.mor(f).grade].push_back(f);

  scan(rep, "functor_identity", ob, exec, [&](int x, AxiomCheck& c) {
    if (Fm(src.id(x)) != dst.id(F.obj[x])) c.record({x});
  });
  scan(rep, "functor_composition", n, exec, [&](int f, AxiomCheck& c) {
    for (MorId k : out[src.mor(f).dst])
      if (Fm(src.comp(f, k)) != o.C(Fm(f), Fm(k))) c.record({f, k});
  });
  scan(rep, "ftilde_natural", n, exec, [&](int f, AxiomCheck& c) {
    const auto& mf = src.mor(f);
    for (MorId k : of_grade[mf.grade]) {
      const auto& mk = src.mor(k);
      const MorId lhs = o.C(F.ft(mf.src, mk.src), Fm(src.tens(f, k)));
      const MorId rhs = o.C(o.T(Fm(f), Fm(k)), F.ft(mf.dst, mk.dst));
      if (lhs < 0 || lhs != rhs) c.record({f, k});
    }
  });
  scan(rep, "coherence_associator", ob, exec, [&](int x, AxiomCheck& c) {
    for (Elem y = 0; y < ob; ++y)
      for (Elem z = 0; z < ob; ++z) {
        const Elem fx = F.obj[x], fy = F.obj[y], fz = F.obj[z];
        const MorId lhs = o.C(o.C(dst.a(fx, fy, fz), o.T(dst.id(fx), F.ft(y, z))), F.ft(x, src.otens(y, z)));
        const MorId rhs = o.C(o.C(o.T(F.ft(x, y), dst.id(fz)), F.ft(src.otens(x, y), z)), Fm(src.a(x, y, z)));
        if (lhs < 0 || lhs != rhs) c.record({x, y, z});
      }
  });
  scan(rep, "coherence_unit", ob, exec, [&](int x, AxiomCheck& c) {
    const Elem fx = F.obj[x];
    const MorId r = o.C(o.C(o.T(dst.id(fx), F.fstar), F.ft(x, src.unit)), Fm(src.right_unit[x]));
    if (r < 0 || r != dst.right_unit[fx]) c.record({1, x});
    const MorId l = o.C(o.C(o.T(F.fstar, dst.id(fx)), F.ft(src.unit, x)), Fm(src.left_unit[x]));
    if (l < 0 || l != dst.left_unit[fx]) c.record({0, x});
  });
  scan(rep, "coherence_braiding", ob, exec, [&](int x, AxiomCheck& c) {
    for (Elem y = 0; y < ob; ++y) {
      const MorId lhs = o.C(dst.c(F.obj[x], F.obj[y]), F.ft(y, x));
      const MorId rhs = o.C(F.ft(x, y), Fm(src.c(x, y)));
      if (lhs < 0 || lhs != rhs) c.record({x, y});
    }
  });
  scan(rep, "unit_functor_compatible", src.ng(), exec, [&](int s, AxiomCheck& c) {
    const MorId lhs = o.C(F.fstar, Fm(src.unit_functor[s]));
    if (lhs < 0 || lhs != o.C(dst.unit_functor[s], F.fstar)) c.record({s});
  });
  return rep;
}

// -- factor sets ------------------------------------------------------------

FactorSet extract_factor_set(const GradedCatGroup& g, const std::vector<MorId>& lifts) {
  const int ob = g.objects, ng = g.ng();
  if (lifts.size() != static_cast<std::size_t>(ob) * ng)
    throw Error(ErrorKind::BadChoice, "expected one lift per (object, grade)");
  auto ups = [&](Elem x, Elem s) { return lifts[static_cast<std::size_t>(x) * ng + s]; };
  for (Elem x = 0; x < ob; ++x)
    for (Elem s = 0; s < ng; ++s) {
      const MorId u = ups(x, s);
      if (u < 0 || u >= g.size() || g.mor(u).src != x || g.mor(u).grade != s)
        throw Error(ErrorKind::BadChoice,
                    "lift at (" + std::to_string(x) + "," + std::to_string(s) + ") has wrong source or grade");
      if (s == 0 && u != g.id(x)) throw Error(ErrorKind::BadChoice, "grade-1 lift is not an identity");
    }
  const Ops o{g};
  const int n = g.size();
  FactorSet fs;
  fs.F.resize(ng);
  for (Elem s = 0; s < ng; ++s) {
    GradedFunctor& F = fs.F[s];
    F.obj.resize(ob);
    for (Elem x = 0; x < ob; ++x) F.obj[x] = g.mor(ups(x, s)).dst;
    F.mor.assign(n, -1);
    for (MorId f = 0; f < n; ++f) {
      const auto& m = g.mor(f);
      if (m.grade != 0) continue;
      // U_Y o f o U_X^-1
      F.mor[f] = o.C(o.C(o.inv(ups(m.src, s)), f), ups(m.dst, s));
    }
    F.ftilde.resize(static_cast<std::size_t>(ob) * ob);
    for (Elem x = 0; x < ob; ++x)
      for (Elem y = 0; y < ob; ++y)
        F.ftilde[static_cast<std::size_t>(x) * ob + y] =
            o.C(o.inv(o.T(ups(x, s), ups(y, s))), ups(g.otens(x, y), s));
    F.fstar = o.C(o.inv(g.unit_functor[s]), ups(g.unit, s));
  }
  fs.theta.resize(static_cast<std::size_t>(ng) * ng);
  for (Elem s = 0; s < ng; ++s)
    for (Elem t = 0; t < ng; ++t) {
      auto& th = fs.theta[static_cast<std::size_t>(s) * ng + t];
      th.resize(ob);
      for (Elem x = 0; x < ob; ++x) {
        const Elem ftx = fs.F[t].obj[x];
        th[x] = o.C(o.C(o.inv(ups(ftx, s)), o.inv(ups(x, t))), ups(x, g.gamma.mul(s, t)));
      }
    }
  return fs;
}

AxiomReport check_factor_set(const GradedCatGroup& g, const FactorSet& fs) {
  const int ob = g.objects, ng = g.ng(), n = g.size();
  const Ops o{g};
  const GradedCatGroup k = ker(g);
  AxiomReport rep;
  auto th = [&](Elem s, Elem t, Elem x) { return fs.theta[static_cast<std::size_t>(s) * ng + t][x]; };
  // Ker-indexed view of each F^sigma for the monoidal check.
  auto to_ker = [&](const GradedFunctor& F) {
    GradedFunctor kf;
    kf.obj = F.obj;
    kf.mor.resize(k.size());
    auto kid = [&](MorId f) { return f < 0 ? -1 : k.find(g.mor(f)); };
    for (MorId f = 0; f < k.size(); ++f) kf.mor[f] = kid(F.mor[g.find(k.mor(f))]);
    kf.ftilde.resize(F.ftilde.size());
    std::transform(F.ftilde.begin(), F.ftilde.end(), kf.ftilde.begin(), kid);
    kf.fstar = kid(F.fstar);
    return kf;
  };
  {
    auto& c = rep.add("F1_identity");
    const GradedFunctor& F = fs.F[0];
    for (Elem x = 0; x < ob; ++x)
      if (F.obj[x] != x) c.record({0, x});
    for (MorId f = 0; f < n; ++f)
      if (g.mor(f).grade == 0 && F.mor[f] != f) c.record({1, f});
    for (Elem x = 0; x < ob; ++x)
      for (Elem y = 0; y < ob; ++y)
        if (F.ft(x, y) != g.id(g.otens(x, y))) c.record({2, x, y});
    if (F.fstar != g.id(g.unit)) c.record({3});
  }
  {
    auto& c = rep.add("theta_unit");
    for (Elem s = 0; s < ng; ++s)
      for (Elem x = 0; x < ob; ++x) {
        if (th(0, s, x) != g.id(fs.F[s].obj[x])) c.record({0, s, x});
        if (th(s, 0, x) != g.id(fs.F[s].obj[x])) c.record({1, s, x});
      }
  }
  {
    auto& c = rep.add("F_monoidal");
    for (Elem s = 0; s < ng; ++s) {
      const AxiomReport r = check_graded_functor(to_ker(fs.F[s]), k, k, Exec::Serial);
      for (std::size_t i = 0; i < r.checks.size(); ++i)
        if (!r.checks[i].pass()) c.record({s, static_cast<int>(i)});
    }
  }
  {
    auto& c = rep.add("theta_natural");
    for (Elem s = 0; s < ng; ++s)
      for (Elem t = 0; t < ng; ++t)
        for (MorId f = 0; f < n; ++f) {
          const auto& m = g.mor(f);
          if (m.grade != 0) continue;
          const MorId fsf = fs.F[t].mor[f] < 0 ? -1 : fs.F[s].mor[fs.F[t].mor[f]];
          const MorId lhs = o.C(fsf, th(s, t, m.dst));
          if (lhs < 0 || lhs != o.C(th(s, t, m.src), fs.F[g.gamma.mul(s, t)].mor[f])) c.record({s, t, f});
        }
  }
  {
    auto& c = rep.add("theta_monoidal");
    for (Elem s = 0; s < ng; ++s)
      for (Elem t = 0; t < ng; ++t) {
        const GradedFunctor& Fs = fs.F[s];
        const GradedFunctor& Ft = fs.F[t];
        const GradedFunctor& Fst = fs.F[g.gamma.mul(s, t)];
        auto Fsm = [&](MorId f) { return f < 0 ? -1 : Fs.mor[f]; };
        for (Elem x = 0; x < ob; ++x)
          for (Elem y = 0; y < ob; ++y) {
            const MorId lhs = o.C(o.T(th(s, t, x), th(s, t, y)), Fst.ft(x, y));
            const MorId rhs = o.C(o.C(Fs.ft(Ft.obj[x], Ft.obj[y]), Fsm(Ft.ft(x, y))), th(s, t, g.otens(x, y)));
            if (lhs < 0 || lhs != rhs) c.record({s, t, x, y});
          }
        const MorId u = o.C(o.C(Fs.fstar, Fsm(Ft.fstar)), th(s, t, g.unit));
        if (u < 0 || u != Fst.fstar) c.record({s, t, -1, -1});
      }
  }
  {
    auto& c = rep.add("cocycle");
    for (Elem s = 0; s < ng; ++s)
      for (Elem t = 0; t < ng; ++t)
        for (Elem r = 0; r < ng; ++r)
          for (Elem x = 0; x < ob; ++x) {
            const Elem st = g.gamma.mul(s, t), tr = g.gamma.mul(t, r);
            const MorId lhs = o.C(th(s, t, fs.F[r].obj[x]), th(st, r, x));
            const MorId ftx = th(t, r, x);
            const MorId rhs = o.C(ftx < 0 ? -1 : fs.F[s].mor[ftx], th(s, tr, x));
            if (lhs < 0 || lhs != rhs) c.record({s, t, r, x});
          }
  }
  return rep;
}

bool is_regular_factor_set(const GradedCatGroup& g, const FactorSet& fs) {
  const int ob = g.objects, ng = g.ng(), n = g.size();
  for (Elem s = 0; s < ng; ++s)
    for (Elem t = 0; t < ng; ++t)
      for (Elem x = 0; x < ob; ++x)
        if (fs.theta[static_cast<std::size_t>(s) * ng + t][x] != g.id(fs.F[g.gamma.mul(s, t)].obj[x])) return false;
  std::vector<MorId> grade1;
  for (MorId f = 0; f < n; ++f)
    if (g.mor(f).grade == 0) grade1.push_back(f);
  for (const auto& F : fs.F) {
    for (Elem x = 0; x < ob; ++x)
      for (Elem y = 0; y < ob; ++y) {
        if (g.otens(F.obj[x], F.obj[y]) != F.obj[g.otens(x, y)]) return false;
        if (F.ft(x, y) < 0 || F.ft(y, x) < 0) return false;
        if (g.mor(F.ft(x, y)).payload != g.mor(F.ft(y, x)).payload) return false;
      }
    for (MorId b : grade1)
      if (F.mor[b] < 0) return false;
    for (MorId b : grade1)
      for (MorId c : grade1)
        if (g.tens(F.mor[b], F.mor[c]) != F.mor[g.tens(b, c)]) return false;
  }
  // Compatibility with the action on objects and arrows is by construction:
  // sigma x and sigma b are read off F^sigma.
  return true;
}

ValidatedModule catgroup_to_crossed(const GradedCatGroup& g) {
  if (!g.has_lifts()) throw Error(ErrorKind::NotStrict, "no recorded lifts");
  if (g.unit != 0) throw Error(ErrorKind::NotStrict, "unit object is not object 0");
  const int ob = g.objects;
  for (Elem x = 0; x < ob; ++x) {
    if (g.left_unit[x] != g.id(x) || g.right_unit[x] != g.id(x))
      throw Error(ErrorKind::NotStrict, "unitor at object " + std::to_string(x) + " is not an identity");
    for (Elem y = 0; y < ob; ++y)
      for (Elem z = 0; z < ob; ++z)
        if (g.a(x, y, z) != g.id(g.otens(g.otens(x, y), z)))
          throw Error(ErrorKind::NotStrict, "associator at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                                                std::to_string(z) + ") is not an identity");
  }
  std::vector<std::vector<Elem>> drows(ob, std::vector<Elem>(ob));
  for (Elem x = 0; x < ob; ++x)
    for (Elem y = 0; y < ob; ++y) drows[x][y] = g.otens(x, y);
  BraidedGammaCrossedModule m;
  m.D = FiniteGroup::from_table(drows);
  m.gamma = g.gamma;
  // B: grade-1 arrows into the unit, indexed by payload.
  std::vector<MorId> b_mor(g.payloads, -1);
  for (MorId f = 0; f < g.size(); ++f) {
    const auto& mf = g.mor(f);
    if (mf.grade != 0 || mf.dst != g.unit) continue;
    if (b_mor[mf.payload] >= 0) throw Error(ErrorKind::NotStrict, "two arrows into the unit share a payload");
    b_mor[mf.payload] = f;
  }
  for (MorId f : b_mor)
    if (f < 0) throw Error(ErrorKind::NotStrict, "payloads of arrows into the unit are not 0..n-1");
  if (g.mor(b_mor[0]).src != g.unit) throw Error(ErrorKind::NotStrict, "payload 0 is not the unit arrow");
  const int nb = g.payloads;
  auto payload_of = [&](MorId f) {
    if (f < 0 || g.mor(f).dst != g.unit || g.mor(f).grade != 0)
      throw Error(ErrorKind::NotStrict, "derived arrow does not land at the unit");
    return g.mor(f).payload;
  };
  std::vector<std::vector<Elem>> brows(nb, std::vector<Elem>(nb));
  for (Elem b = 0; b < nb; ++b)
    for (Elem c = 0; c < nb; ++c) brows[b][c] = payload_of(g.tens(b_mor[b], b_mor[c]));
  m.B = FiniteGroup::from_table(brows);
  m.d.resize(nb);
  for (Elem b = 0; b < nb; ++b) m.d[b] = g.mor(b_mor[b]).src;
  m.theta.resize(static_cast<std::size_t>(ob) * nb);
  for (Elem y = 0; y < ob; ++y)
    for (Elem b = 0; b < nb; ++b)
      m.theta[static_cast<std::size_t>(y) * nb + b] =
          payload_of(g.tens(g.tens(g.id(y), b_mor[b]), g.id(m.D.inv(y))));
  m.eta.resize(static_cast<std::size_t>(ob) * ob);
  for (Elem x = 0; x < ob; ++x)
    for (Elem y = 0; y < ob; ++y)
      m.eta[static_cast<std::size_t>(x) * ob + y] =
          payload_of(g.tens(g.tens(g.c(x, y), g.id(m.D.inv(x))), g.id(m.D.inv(y))));
  const FactorSet fs = extract_factor_set(g, g.lifts);
  if (!is_regular_factor_set(g, fs)) throw Error(ErrorKind::NotRegularFactorSet, "recorded lifts are not regular");
  const int ng = g.ng();
  m.act_d.resize(static_cast<std::size_t>(ng) * ob);
  m.act_b.resize(static_cast<std::size_t>(ng) * nb);
  for (Elem s = 0; s < ng; ++s) {
    for (Elem x = 0; x < ob; ++x) m.act_d[static_cast<std::size_t>(s) * ob + x] = fs.F[s].obj[x];
    for (Elem b = 0; b < nb; ++b) m.act_b[static_cast<std::size_t>(s) * nb + b] = payload_of(fs.F[s].mor[b_mor[b]]);
  }
  return ValidatedModule(std::move(m));
}

// -- reduction ----------------------------------------------------------------

ReductionChoices canonical_choices(const ValidatedModule& m, const GradedCatGroup& g) {
  const auto& mod = m.module();
  ReductionChoices ch;
  ch.M = m.pi0();
  ch.N = m.pi1();
  const int nm = ch.M.target.order(), nn = ch.N.target.order(), ng = mod.ng();
  ch.rep = m.coker_d().representatives;
  auto least = [&](Elem x, Elem y, Elem s) {
    const auto h = g.homs(x, y, s);
    if (h.empty()) throw Error(ErrorKind::BadChoice, "no arrow for canonical choice");
    return h.front();
  };
  ch.unit_aut.resize(nn);
  for (Elem a = 0; a < nn; ++a) ch.unit_aut[a] = g.find({0, 0, m.ker_d()[a], 0});
  ch.beta.resize(static_cast<std::size_t>(nm) * ng);
  for (Elem r = 0; r < nm; ++r)
    for (Elem s = 0; s < ng; ++s)
      ch.beta[static_cast<std::size_t>(r) * ng + s] = least(ch.rep[r], ch.rep[ch.M(s, r)], s);
  ch.lambda.resize(static_cast<std::size_t>(nm) * nm);
  for (Elem r = 0; r < nm; ++r)
    for (Elem t = 0; t < nm; ++t)
      ch.lambda[static_cast<std::size_t>(r) * nm + t] =
          least(g.otens(ch.rep[r], ch.rep[t]), ch.rep[ch.M.target.mul(r, t)], 0);
  return ch;
}

Cochain3 reduce(const GradedCatGroup& g, const ReductionChoices& ch) {
  const Ops o{g};
  const FiniteGroup& Mg = ch.M.target;
  const FiniteGroup& Ng = ch.N.target;
  const int nm = Mg.order(), nn = Ng.order(), ng = g.ng();
  auto bad = [](const std::string& w) { throw Error(ErrorKind::BadChoice, w); };
  if (!(ch.M.gamma == g.gamma) || !(ch.N.gamma == g.gamma)) bad("gamma mismatch");
  if (ch.rep.size() != static_cast<std::size_t>(nm) || ch.unit_aut.size() != static_cast<std::size_t>(nn) ||
      ch.beta.size() != static_cast<std::size_t>(nm) * ng || ch.lambda.size() != static_cast<std::size_t>(nm) * nm)
    bad("choice tables have the wrong size");
  if (ch.rep[0] != g.unit) bad("X_0 is not the unit");
  auto typed = [&](MorId f, Elem s, Elem t, Elem grade) {
    return f >= 0 && f < g.size() && g.mor(f).src == s && g.mor(f).dst == t && g.mor(f).grade == grade;
  };
  auto beta = [&](Elem r, Elem s) { return ch.beta[static_cast<std::size_t>(r) * ng + s]; };
  auto lam = [&](Elem r, Elem s) { return ch.lambda[static_cast<std::size_t>(r) * nm + s]; };
  for (Elem a = 0; a < nn; ++a)
    if (!typed(ch.unit_aut[a], g.unit, g.unit, 0)) bad("unit automorphism " + std::to_string(a) + " is mistyped");
  if (ch.unit_aut[0] != g.id(g.unit)) bad("unit automorphism 0 is not the identity");
  for (Elem a = 0; a < nn; ++a)
    for (Elem b = 0; b < nn; ++b)
      if (o.C(ch.unit_aut[a], ch.unit_aut[b]) != ch.unit_aut[Ng.mul(a, b)]) bad("unit automorphisms do not match N");
  for (Elem s = 0; s < ng; ++s)
    for (Elem a = 0; a < nn; ++a) {
      const MorId is = g.unit_functor[s];
      if (o.C(o.C(o.inv(is), ch.unit_aut[a]), is) != ch.unit_aut[ch.N(s, a)])
        bad("Gamma-action on N is not conjugation by I(sigma)");
    }
  for (Elem r = 0; r < nm; ++r)
    for (Elem s = 0; s < ng; ++s)
      if (!typed(beta(r, s), ch.rep[r], ch.rep[ch.M(s, r)], s)) bad("beta mistyped");
  for (Elem r = 0; r < nm; ++r)
    if (beta(r, 0) != g.id(ch.rep[r])) bad("beta(r,1) is not the identity");
  for (Elem s = 0; s < ng; ++s)
    if (beta(0, s) != g.unit_functor[s]) bad("beta(0,sigma) is not I(sigma)");
  for (Elem r = 0; r < nm; ++r)
    for (Elem t = 0; t < nm; ++t)
      if (!typed(lam(r, t), g.otens(ch.rep[r], ch.rep[t]), ch.rep[Mg.mul(r, t)], 0)) bad("lambda mistyped");
  for (Elem r = 0; r < nm; ++r) {
    if (lam(0, r) != g.left_unit[ch.rep[r]]) bad("lambda(0,s) is not the left unitor");
    if (lam(r, 0) != g.right_unit[ch.rep[r]]) bad("lambda(r,0) is not the right unitor");
  }
  // u_X(a) = l_X o (a (x) id_X) o l_X^-1, inverted per representative.
  std::vector<std::vector<Elem>> decode(nm, std::vector<Elem>(g.size(), -1));
  for (Elem r = 0; r < nm; ++r) {
    const Elem x = ch.rep[r];
    for (Elem a = 0; a < nn; ++a) {
      const MorId u = o.C(o.C(o.inv(g.left_unit[x]), o.T(ch.unit_aut[a], g.id(x))), g.left_unit[x]);
      if (u < 0) bad("u_X undefined");
      if (decode[r][u] >= 0) bad("u_X is not injective");
      decode[r][u] = a;
    }
  }
  auto dec = [&](Elem r, MorId f) {
    const Elem a = f < 0 ? -1 : decode[r][f];
    if (a < 0) bad("automorphism is not in the image of N at representative " + std::to_string(r));
    return a;
  };
  Cochain3 h = Cochain3::zero(ch.M, ch.N);
  for (Elem r = 0; r < nm; ++r)
    for (Elem s = 0; s < nm; ++s)
      for (Elem t = 0; t < nm; ++t) {
        const Elem rs = Mg.mul(r, s), st = Mg.mul(s, t);
        const Elem xr = ch.rep[r], xs = ch.rep[s], xt = ch.rep[t];
        MorId f = o.inv(lam(rs, t));
        f = o.C(f, o.inv(o.T(lam(r, s), g.id(xt))));
        f = o.C(f, g.a(xr, xs, xt));
        f = o.C(f, o.T(g.id(xr), lam(s, t)));
        f = o.C(f, lam(r, st));
        h.a(r, s, t) = dec(Mg.mul(rs, t), f);
      }
  for (Elem r = 0; r < nm; ++r)
    for (Elem s = 0; s < nm; ++s) {
      const MorId f = o.C(o.C(o.inv(lam(r, s)), g.c(ch.rep[r], ch.rep[s])), lam(s, r));
      h.c(r, s) = dec(Mg.mul(r, s), f);
    }
  for (Elem r = 0; r < nm; ++r)
    for (Elem t = 0; t < ng; ++t)
      for (Elem s = 0; s < ng; ++s) {
        const Elem ts = g.gamma.mul(t, s);
        const MorId f = o.C(o.C(o.inv(beta(r, ts)), beta(r, s)), beta(ch.M(s, r), t));
        h.k(r, t, s) = dec(ch.M(ts, r), f);
      }
  for (Elem r = 0; r < nm; ++r)
    for (Elem r2 = 0; r2 < nm; ++r2)
      for (Elem s = 0; s < ng; ++s) {
        const Elem rr = Mg.mul(r, r2);
        MorId f = o.inv(beta(rr, s));
        f = o.C(f, o.inv(lam(r, r2)));
        f = o.C(f, o.T(beta(r, s), beta(r2, s)));
        f = o.C(f, lam(ch.M(s, r), ch.M(s, r2)));
        h.t(r, r2, s) = dec(ch.M(s, rr), f);
      }
  return h;
}

}  // namespace xmodcat
