#include "xmodcat/cohomology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "xmodcat/catgroup.hpp"
#include "xmodcat/error.hpp"
#include "xmodcat/functor.hpp"

namespace xmodcat {

namespace {

const char* const kFamilies[] = {"grade", "action", "assoc", "symmetry"};

// Free-entry layout shared by the brute and linear paths: pairs (u,v) with
// u,v != 0 first, then grades (u,sigma) with u != 0, sigma != 1.
struct Layout {
  int nq, ng;
  int pair(Elem u, Elem v) const { return u == 0 || v == 0 ? -1 : (u - 1) * (nq - 1) + (v - 1); }
  int grade(Elem u, Elem s) const {
    return u == 0 || s == 0 ? -1 : (nq - 1) * (nq - 1) + (u - 1) * (ng - 1) + (s - 1);
  }
  int size() const { return (nq - 1) * (nq - 1) + (nq - 1) * (ng - 1); }
};

Layout layout_of(const GammaModule& q) { return {q.target.order(), q.gamma.order()}; }

// Evaluates one identity instance directly through the accessors p(u,v),
// g(u,sigma) (B-valued) and reports whether it holds.
template <class P, class G>
bool holds(int fam, const int* a, const GammaModule& Q, const GammaModule& B, P&& p, G&& g) {
  const FiniteGroup& q = Q.target;
  const FiniteGroup& b = B.target;
  auto add = [&](Elem x, Elem y) { return b.mul(x, y); };
  switch (fam) {
    case 0: {
      const Elem x = a[0], s = a[1], t = a[2];
      return add(B(t, g(x, s)), g(Q(s, x), t)) == g(x, Q.gamma.mul(t, s));
    }
    case 1: {
      const Elem x = a[0], y = a[1], s = a[2];
      return add(B(s, p(x, y)), g(q.mul(x, y), s)) == add(add(g(x, s), g(y, s)), p(Q(s, x), Q(s, y)));
    }
    case 2: {
      const Elem x = a[0], y = a[1], z = a[2];
      return add(p(y, z), p(x, q.mul(y, z))) == add(p(x, y), p(q.mul(x, y), z));
    }
    default:
      return p(a[0], a[1]) == p(a[1], a[0]);
  }
}

struct Instance {
  int fam;
  int args[3];
};

std::vector<Instance> instances(const GammaModule& Q) {
  const int nq = Q.target.order(), ng = Q.gamma.order();
  std::vector<Instance> out;
  for (Elem x = 0; x < nq; ++x)
    for (Elem s = 0; s < ng; ++s)
      for (Elem t = 0; t < ng; ++t) out.push_back({0, {x, s, t}});
  for (Elem x = 0; x < nq; ++x)
    for (Elem y = 0; y < nq; ++y)
      for (Elem s = 0; s < ng; ++s) out.push_back({1, {x, y, s}});
  for (Elem x = 0; x < nq; ++x)
    for (Elem y = 0; y < nq; ++y)
      for (Elem z = 0; z < nq; ++z) out.push_back({2, {x, y, z}});
  for (Elem x = 0; x < nq; ++x)
    for (Elem y = 0; y < nq; ++y) out.push_back({3, {x, y, 0}});
  return out;
}

int arity(int fam) { return fam == 3 ? 2 : 3; }

Witness witness_of(const Instance& in) {
  Witness w{in.fam};
  for (int i = 0; i < arity(in.fam); ++i) w.push_back(in.args[i]);
  return w;
}

void check_same_gamma(const GammaModule& q, const GammaModule& b) {
  if (!(q.gamma == b.gamma)) throw Error(ErrorKind::ShapeMismatch, "Q and B are modules over different groups");
  if (!q.target.is_abelian() || !b.target.is_abelian())
    throw Error(ErrorKind::WrongType, "Q and B must be abelian");
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t guard) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > guard / base) throw Error(ErrorKind::SearchSpaceTooLarge, "candidate count exceeds guard");
    r *= base;
  }
  if (r > guard) throw Error(ErrorKind::SearchSpaceTooLarge, "candidate count exceeds guard");
  return r;
}

SymmetricCochain2 table_from(const GammaModule& q, const GammaModule& b, const std::vector<Elem>& vals) {
  const Layout L = layout_of(q);
  SymmetricCochain2 f = SymmetricCochain2::zero(q, b);
  for (Elem u = 1; u < L.nq; ++u) {
    for (Elem v = 1; v < L.nq; ++v) f(u, v) = vals[L.pair(u, v)];
    for (Elem s = 1; s < L.ng; ++s) f.at_grade(u, s) = vals[L.grade(u, s)];
  }
  return f;
}

std::vector<Elem> free_values(const SymmetricCochain2& f) {
  const Layout L = layout_of(f.Q);
  std::vector<Elem> vals(L.size());
  for (Elem u = 1; u < L.nq; ++u) {
    for (Elem v = 1; v < L.nq; ++v) vals[L.pair(u, v)] = f(u, v);
    for (Elem s = 1; s < L.ng; ++s) vals[L.grade(u, s)] = f.at_grade(u, s);
  }
  return vals;
}

}  // namespace

AxiomCheck cocycle_check(const SymmetricCochain2& f) {
  AxiomCheck c{"cocycle", 0, {}, false};
  auto p = [&](Elem u, Elem v) { return f(u, v); };
  auto g = [&](Elem u, Elem s) { return f.at_grade(u, s); };
  for (const auto& in : instances(f.Q))
    if (!holds(in.fam, in.args, f.Q, f.B, p, g)) c.record(witness_of(in));
  return c;
}

CocycleVerdict is_2cocycle(const SymmetricCochain2& f) {
  const AxiomCheck c = cocycle_check(f);
  if (c.pass()) return {};
  const Witness& w = c.witnesses.front();
  return {false, kFamilies[w[0]], w};
}

SymmetricCochain2 coboundary2(const Cochain1& g) {
  if (g.values.size() != static_cast<std::size_t>(g.Q.target.order()))
    throw Error(ErrorKind::ShapeMismatch, "1-cochain has the wrong size");
  if (g.values[0] != 0) throw Error(ErrorKind::NotNormalized, "g(0) != 0");
  const FiniteGroup& b = g.B.target;
  const FiniteGroup& q = g.Q.target;
  SymmetricCochain2 f = SymmetricCochain2::zero(g.Q, g.B);
  for (Elem u = 0; u < q.order(); ++u) {
    for (Elem v = 0; v < q.order(); ++v) f(u, v) = b.mul(b.mul(g(u), g(v)), b.inv(g(q.mul(u, v))));
    for (Elem s = 0; s < g.Q.gamma.order(); ++s) f.at_grade(u, s) = b.mul(g.B(s, g(u)), b.inv(g(g.Q(s, u))));
  }
  return f;
}

SymmetricCochain2 operator+(const SymmetricCochain2& f, const SymmetricCochain2& g) {
  SymmetricCochain2 r = f;
  const FiniteGroup& b = f.B.target;
  for (std::size_t i = 0; i < r.pairs.size(); ++i) r.pairs[i] = b.mul(f.pairs[i], g.pairs[i]);
  for (std::size_t i = 0; i < r.grades.size(); ++i) r.grades[i] = b.mul(f.grades[i], g.grades[i]);
  return r;
}

SymmetricCochain2 operator-(const SymmetricCochain2& f, const SymmetricCochain2& g) {
  SymmetricCochain2 r = f;
  const FiniteGroup& b = f.B.target;
  for (std::size_t i = 0; i < r.pairs.size(); ++i) r.pairs[i] = b.mul(f.pairs[i], b.inv(g.pairs[i]));
  for (std::size_t i = 0; i < r.grades.size(); ++i) r.grades[i] = b.mul(f.grades[i], b.inv(g.grades[i]));
  return r;
}

std::size_t free_entries(const GammaModule& q) { return layout_of(q).size(); }

// -- brute force --------------------------------------------------------------

std::vector<SymmetricCochain2> enumerate_2cocycles(const GammaModule& q, const GammaModule& b, std::uint64_t guard,
                                                   Exec exec) {
  check_same_gamma(q, b);
  const Layout L = layout_of(q);
  const int n = L.size();
  const int nb = b.target.order();
  checked_power(nb, n, guard);

  // Bucket every instance by the last free entry it reads.
  std::vector<std::vector<Instance>> bucket(n + 1);
  for (const auto& in : instances(q)) {
    int last = -1;
    auto p = [&](Elem u, Elem v) {
      last = std::max(last, L.pair(u, v));
      return 0;
    };
    auto g = [&](Elem u, Elem s) {
      last = std::max(last, L.grade(u, s));
      return 0;
    };
    holds(in.fam, in.args, q, b, p, g);
    bucket[last + 1].push_back(in);
  }

  auto check = [&](const std::vector<Elem>& vals, int slot) {
    auto p = [&](Elem u, Elem v) {
      const int i = L.pair(u, v);
      return i < 0 ? 0 : vals[i];
    };
    auto g = [&](Elem u, Elem s) {
      const int i = L.grade(u, s);
      return i < 0 ? 0 : vals[i];
    };
    for (const auto& in : bucket[slot + 1])
      if (!holds(in.fam, in.args, q, b, p, g)) return false;
    return true;
  };
  std::vector<Elem> zero(n, 0);
  if (!check(zero, -1)) return {};

  // Prefixes of the first `depth` entries are explored independently.
  int depth = 0;
  std::uint64_t prefixes = 1;
  while (depth < n && prefixes < 256) {
    prefixes *= nb;
    ++depth;
  }
  std::vector<std::vector<std::vector<Elem>>> found(prefixes);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (std::int64_t pi = 0; pi < static_cast<std::int64_t>(prefixes); ++pi) {
    std::vector<Elem> vals(n, 0);
    std::uint64_t rest = static_cast<std::uint64_t>(pi);
    for (int i = depth - 1; i >= 0; --i) {
      vals[i] = static_cast<Elem>(rest % nb);
      rest /= nb;
    }
    bool ok = true;
    for (int i = 0; i < depth && ok; ++i) ok = check(vals, i);
    if (!ok) continue;
    auto& out = found[pi];
    // Iterative depth-first search over entries depth..n-1.
    if (depth == n) {
      out.push_back(vals);
      continue;
    }
    int i = depth;
    vals[i] = -1;
    while (i >= depth) {
      if (++vals[i] >= nb) {
        vals[i] = 0;
        --i;
        continue;
      }
      if (!check(vals, i)) continue;
      if (i == n - 1) {
        out.push_back(vals);
      } else {
        ++i;
        vals[i] = -1;
      }
    }
  }
  std::vector<SymmetricCochain2> out;
  for (const auto& part : found)
    for (const auto& v : part) out.push_back(table_from(q, b, v));
  return out;
}

int H2Brute::classify(const SymmetricCochain2& f) const {
  auto it = std::lower_bound(cocycles.begin(), cocycles.end(), f, [](const SymmetricCochain2& a,
                                                                     const SymmetricCochain2& c) {
    return free_values(a) < free_values(c);
  });
  if (it == cocycles.end() || !(free_values(*it) == free_values(f)))
    throw Error(ErrorKind::NotWellDefined, "cochain is not a cocycle");
  return class_of[it - cocycles.begin()];
}

H2Brute h2_brute(const GammaModule& q, const GammaModule& b, std::uint64_t guard, Exec exec) {
  check_same_gamma(q, b);
  H2Brute r;
  r.cocycles = enumerate_2cocycles(q, b, guard, exec);
  const int nq = q.target.order(), nb = b.target.order();
  const std::uint64_t ng1 = checked_power(nb, nq - 1, guard);
  std::map<std::vector<Elem>, int> index;
  for (std::size_t i = 0; i < r.cocycles.size(); ++i) index.emplace(free_values(r.cocycles[i]), static_cast<int>(i));
  std::map<std::vector<Elem>, SymmetricCochain2> cob;
  for (std::uint64_t code = 0; code < ng1; ++code) {
    Cochain1 g{q, b, std::vector<Elem>(nq, 0)};
    std::uint64_t rest = code;
    for (Elem u = nq - 1; u >= 1; --u) {
      g.values[u] = static_cast<Elem>(rest % nb);
      rest /= nb;
    }
    auto d = coboundary2(g);
    cob.emplace(free_values(d), std::move(d));
  }
  for (auto& [k, v] : cob) r.coboundaries.push_back(v);
  r.class_of.assign(r.cocycles.size(), -1);
  for (std::size_t i = 0; i < r.cocycles.size(); ++i) {
    if (r.class_of[i] >= 0) continue;
    const int c = static_cast<int>(r.representatives.size());
    r.representatives.push_back(static_cast<int>(i));
    for (const auto& beta : r.coboundaries) {
      auto it = index.find(free_values(r.cocycles[i] + beta));
      if (it == index.end()) throw Error(ErrorKind::NotWellDefined, "a coboundary is not a cocycle");
      r.class_of[it->second] = c;
    }
  }
  // Quotient group table on classes, then invariants by element counting.
  const int k = static_cast<int>(r.representatives.size());
  std::vector<std::vector<Elem>> rows(k, std::vector<Elem>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const auto sum = r.cocycles[r.representatives[i]] + r.cocycles[r.representatives[j]];
      rows[i][j] = r.class_of[index.at(free_values(sum))];
    }
  r.invariants = abelian_invariants_by_counting(FiniteGroup::from_table(rows));
  return r;
}

// -- linear algebra -------------------------------------------------------------

namespace {

struct Term {
  int unknown;
  int sign;
  Elem act;
};

// The same identity families as term lists (unknown -1 = normalized zero).
std::vector<std::vector<Term>> term_lists(const GammaModule& Q) {
  const Layout L = layout_of(Q);
  const FiniteGroup& q = Q.target;
  const FiniteGroup& G = Q.gamma;
  std::vector<std::vector<Term>> out;
  for (Elem x = 0; x < L.nq; ++x)
    for (Elem s = 0; s < L.ng; ++s)
      for (Elem t = 0; t < L.ng; ++t)
        out.push_back({{L.grade(x, s), 1, t}, {L.grade(Q(s, x), t), 1, 0}, {L.grade(x, G.mul(t, s)), -1, 0}});
  for (Elem x = 0; x < L.nq; ++x)
    for (Elem y = 0; y < L.nq; ++y)
      for (Elem s = 0; s < L.ng; ++s)
        out.push_back({{L.pair(x, y), 1, s},
                       {L.grade(q.mul(x, y), s), 1, 0},
                       {L.grade(x, s), -1, 0},
                       {L.grade(y, s), -1, 0},
                       {L.pair(Q(s, x), Q(s, y)), -1, 0}});
  for (Elem x = 0; x < L.nq; ++x)
    for (Elem y = 0; y < L.nq; ++y)
      for (Elem z = 0; z < L.nq; ++z)
        out.push_back(
            {{L.pair(y, z), 1, 0}, {L.pair(x, q.mul(y, z)), 1, 0}, {L.pair(x, y), -1, 0}, {L.pair(q.mul(x, y), z), -1, 0}});
  for (Elem x = 0; x < L.nq; ++x)
    for (Elem y = 0; y < L.nq; ++y) out.push_back({{L.pair(x, y), 1, 0}, {L.pair(y, x), -1, 0}});
  return out;
}

}  // namespace

H2Linear::H2Linear(const GammaModule& q, const GammaModule& b) : q_(q), b_(b), bgroup_(b.target) {
  check_same_gamma(q, b);
  const Layout L = layout_of(q);
  const std::size_t k = bgroup_.rank();
  const std::size_t vars = L.size() * k;
  const int ng = q.gamma.order();
  if (vars == 0) return;
  const auto& bi = bgroup_.invariants();
  // Action matrices in invariant-factor coordinates: column j = sigma g_j.
  std::vector<IntMatrix> act(ng, IntMatrix(k, k));
  for (Elem s = 0; s < ng; ++s)
    for (std::size_t j = 0; j < k; ++j) {
      const auto& c = bgroup_.coordinates(b(s, bgroup_.generators()[j]));
      for (std::size_t i = 0; i < k; ++i) act[s](i, j) = c[i];
    }
  // Equation rows, reduced modulo the row's invariant and deduplicated.
  std::vector<std::vector<BigInt>> rows;
  std::vector<BigInt> moduli;
  std::map<std::pair<std::vector<BigInt>, std::size_t>, bool> seen;
  for (const auto& terms : term_lists(q))
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<BigInt> row(vars);
      for (const auto& t : terms) {
        if (t.unknown < 0) continue;
        for (std::size_t l = 0; l < k; ++l) row[t.unknown * k + l] += t.sign * act[t.act](j, l);
      }
      bool nonzero = false;
      for (auto& e : row) {
        e = mod_floor(e, bi[j]);
        nonzero = nonzero || e != 0;
      }
      if (!nonzero) continue;
      if (!seen.emplace(std::make_pair(row, j), true).second) continue;
      rows.push_back(std::move(row));
      moduli.push_back(bi[j]);
    }
  // Z^2 lifted: x with C x = 0 modulo the row invariants.
  IntMatrix kz;
  if (rows.empty()) {
    kz = IntMatrix::identity(vars);
  } else {
    IntMatrix sys(rows.size(), vars + rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < vars; ++c) sys(r, c) = rows[r][c];
      sys(r, vars + r) = moduli[r];
    }
    kz = column_basis(integer_kernel(sys).top_rows(vars));
  }
  // Coboundaries plus the relations of B in every coordinate.
  const std::size_t gvars = static_cast<std::size_t>(L.nq - 1) * k;
  IntMatrix w(vars, gvars + vars);
  for (Elem u = 1; u < L.nq; ++u)
    for (std::size_t l = 0; l < k; ++l) {
      const std::size_t col = (u - 1) * k + l;
      for (Elem x = 1; x < L.nq; ++x)
        for (Elem y = 1; y < L.nq; ++y) {
          const int coef = (u == x) + (u == y) - (u == q.target.mul(x, y));
          w(L.pair(x, y) * k + l, col) += coef;
        }
      for (Elem x = 1; x < L.nq; ++x)
        for (Elem s = 1; s < ng; ++s) {
          const std::size_t base = L.grade(x, s) * k;
          if (x == u)
            for (std::size_t i = 0; i < k; ++i) w(base + i, col) += act[s](i, l);
          if (q(s, x) == u) w(base + l, col) -= 1;
        }
    }
  for (std::size_t v = 0; v < vars; ++v) w(v, gvars + v) = bi[v % k];
  quotient_ = lattice_quotient(kz, w);
  for (const auto& inv : quotient_.invariants) {
    if (inv == 0) throw std::logic_error("H2 has a free factor");
    invariants_.push_back(static_cast<long>(inv));
  }
}

std::vector<BigInt> H2Linear::to_vector(const SymmetricCochain2& f) const {
  const std::size_t k = bgroup_.rank();
  const auto vals = free_values(f);
  std::vector<BigInt> v(vals.size() * k);
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const auto& c = bgroup_.coordinates(vals[i]);
    for (std::size_t l = 0; l < k; ++l) v[i * k + l] = c[l];
  }
  return v;
}

SymmetricCochain2 H2Linear::from_vector(const std::vector<BigInt>& v) const {
  const std::size_t k = bgroup_.rank();
  const std::size_t n = free_entries(q_);
  std::vector<Elem> vals(n, 0);
  for (std::size_t i = 0; i < n && k > 0; ++i) {
    std::vector<long> c(k);
    for (std::size_t l = 0; l < k; ++l) c[l] = static_cast<long>(mod_floor(v[i * k + l], bgroup_.invariants()[l]));
    vals[i] = bgroup_.element(c);
  }
  return table_from(q_, b_, vals);
}

std::vector<long> H2Linear::coordinates(const SymmetricCochain2& f) const {
  if (!(f.Q == q_) || !(f.B == b_)) throw Error(ErrorKind::ShapeMismatch, "cochain over different modules");
  if (!is_2cocycle(f)) throw Error(ErrorKind::NotWellDefined, "cochain is not a cocycle");
  if (invariants_.empty()) return {};
  const auto c = quotient_.coordinates(to_vector(f));
  std::vector<long> out;
  for (const auto& x : c) out.push_back(static_cast<long>(x));
  return out;
}

SymmetricCochain2 H2Linear::cocycle(const std::vector<long>& coords) const {
  if (coords.size() != invariants_.size()) throw Error(ErrorKind::ShapeMismatch, "wrong number of coordinates");
  const std::size_t vars = free_entries(q_) * bgroup_.rank();
  std::vector<BigInt> v(vars);
  for (std::size_t g = 0; g < coords.size(); ++g)
    for (std::size_t r = 0; r < vars; ++r) v[r] += quotient_.generators(r, g) * coords[g];
  return from_vector(v);
}

std::vector<SymmetricCochain2> H2Linear::representatives() const {
  std::vector<SymmetricCochain2> out;
  std::vector<long> c(invariants_.size(), 0);
  for (long i = 0; i < order(); ++i) {
    out.push_back(cocycle(c));
    for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j) {
      if (++c[j] < invariants_[j]) break;
      c[j] = 0;
    }
  }
  return out;
}

H2Result h2(const GammaModule& q, const GammaModule& b) {
  H2Linear lin(q, b);
  return {lin.invariants(), lin.representatives()};
}

std::string h2_paths_agree(const H2Linear& lin, const H2Brute& brute) {
  if (lin.invariants() != brute.invariants) return "invariant factors differ";
  const auto reps = lin.representatives();
  if (reps.size() != brute.class_count()) return "class counts differ";
  const auto& inv = lin.invariants();
  auto index_of = [&](const std::vector<long>& c) {
    long idx = 0;
    for (std::size_t j = 0; j < c.size(); ++j) idx = idx * inv[j] + c[j];
    return idx;
  };
  std::vector<int> cls(reps.size());
  std::vector<bool> hit(reps.size(), false);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    cls[i] = brute.classify(reps[i]);
    if (hit[cls[i]]) return "two coordinate vectors land in one class";
    hit[cls[i]] = true;
  }
  std::vector<long> a(inv.size(), 0);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (index_of(lin.coordinates(reps[i])) != static_cast<long>(i)) return "coordinates do not round-trip";
    std::vector<long> bc(inv.size(), 0);
    for (std::size_t j = 0; j < reps.size(); ++j) {
      std::vector<long> sum(inv.size());
      for (std::size_t t = 0; t < inv.size(); ++t) sum[t] = (a[t] + bc[t]) % inv[t];
      if (brute.classify(reps[i] + reps[j]) != cls[index_of(sum)]) return "map is not additive";
      for (int t = static_cast<int>(bc.size()) - 1; t >= 0; --t) {
        if (++bc[t] < inv[t]) break;
        bc[t] = 0;
      }
    }
    for (int t = static_cast<int>(a.size()) - 1; t >= 0; --t) {
      if (++a[t] < inv[t]) break;
      a[t] = 0;
    }
  }
  return {};
}

// -- degree 3 -------------------------------------------------------------------

AxiomReport three_cocycle_report(const Cochain3& h, Exec exec) { return check_axioms(build_reduced(h), exec); }

bool is_3cocycle(const Cochain3& h, Exec exec) { return three_cocycle_report(h, exec).all_pass(); }

Cochain3 pullback3(const GammaModule& m, const std::vector<Elem>& phi, const Cochain3& h) {
  if (phi.size() != static_cast<std::size_t>(m.target.order()))
    throw Error(ErrorKind::ShapeMismatch, "phi has the wrong size");
  Cochain3 r = Cochain3::zero(m, h.N);
  const int n = m.target.order(), ng = m.gamma.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      r.c(x, y) = h.c(phi[x], phi[y]);
      for (Elem z = 0; z < n; ++z) r.a(x, y, z) = h.a(phi[x], phi[y], phi[z]);
      for (Elem s = 0; s < ng; ++s) r.t(x, y, s) = h.t(phi[x], phi[y], s);
    }
  for (Elem x = 0; x < n; ++x)
    for (Elem t = 0; t < ng; ++t)
      for (Elem s = 0; s < ng; ++s) r.k(x, t, s) = h.k(phi[x], t, s);
  return r;
}

Cochain3 pushforward3(const GammaModule& n, const std::vector<Elem>& f, const Cochain3& h) {
  if (f.size() != static_cast<std::size_t>(h.N.target.order()))
    throw Error(ErrorKind::ShapeMismatch, "f has the wrong size");
  Cochain3 r = h;
  r.N = n;
  for (auto* t : {&r.assoc, &r.braid, &r.tensor, &r.compose})
    for (auto& v : *t) v = f[v];
  return r;
}

namespace {
Cochain3 combine(const Cochain3& a, const Cochain3& b, bool subtract) {
  if (!(a.M == b.M) || !(a.N == b.N)) throw Error(ErrorKind::ShapeMismatch, "cochains over different modules");
  Cochain3 r = a;
  const FiniteGroup& n = a.N.target;
  auto op = [&](std::vector<Elem>& x, const std::vector<Elem>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = n.mul(x[i], subtract ? n.inv(y[i]) : y[i]);
  };
  op(r.assoc, b.assoc);
  op(r.braid, b.braid);
  op(r.tensor, b.tensor);
  op(r.compose, b.compose);
  return r;
}
}  // namespace

Cochain3 operator+(const Cochain3& a, const Cochain3& b) { return combine(a, b, false); }
Cochain3 operator-(const Cochain3& a, const Cochain3& b) { return combine(a, b, true); }

Cochain3 obstruction(const std::vector<Elem>& phi, const std::vector<Elem>& f, const Cochain3& h,
                     const Cochain3& h2) {
  return pullback3(h.M, phi, h2) - pushforward3(h2.N, f, h);
}

bool class_vanishes(const Cochain3& k, std::uint64_t guard, Exec exec) {
  const GradedCatGroup src = build_reduced(Cochain3::zero(k.M, k.N));
  const GradedCatGroup dst = build_reduced(k);
  std::vector<Elem> id_m(k.m()), id_n(k.N.target.order());
  for (Elem i = 0; i < k.m(); ++i) id_m[i] = i;
  for (Elem i = 0; i < k.N.target.order(); ++i) id_n[i] = i;
  return find_functor(src, dst, reduced_type(src, dst, id_m, id_n), guard, exec).has_value();
}

}  // namespace xmodcat
