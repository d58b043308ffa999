#include "xmodcat/abelian.hpp"

#include <algorithm>
#include <map>

#include "xmodcat/error.hpp"

namespace xmodcat {

long product_of(const std::vector<long>& invariants) {
  long n = 1;
  for (long d : invariants) n *= d;
  return n;
}

namespace {

long to_long(const BigInt& v) { return static_cast<long>(v); }

long mod_long(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(FiniteGroup g) : group_(std::move(g)) {
  if (!group_.is_abelian()) throw Error(ErrorKind::WrongType, "group is not commutative");
  const int n = group_.order();
  const auto gens = generating_set(group_);
  const std::size_t r = gens.size();

  // Spanning tree over right multiplication by generators gives a coordinate
  // vector for every element; each non-tree edge yields a relation.
  std::vector<std::vector<long>> tree(n);
  std::vector<bool> seen(n, false);
  tree[0].assign(r, 0);
  seen[0] = true;
  std::vector<Elem> order{0};
  for (std::size_t at = 0; at < order.size(); ++at)
    for (std::size_t i = 0; i < r; ++i) {
      const Elem y = group_.mul(order[at], gens[i]);
      if (!seen[y]) {
        seen[y] = true;
        tree[y] = tree[order[at]];
        tree[y][i] += 1;
        order.push_back(y);
      }
    }
  std::vector<std::vector<long>> rels;
  for (Elem x = 0; x < n; ++x)
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<long> rel = tree[x];
      rel[i] += 1;
      const auto& target = tree[group_.mul(x, gens[i])];
      bool zero = true;
      for (std::size_t k = 0; k < r; ++k) {
        rel[k] -= target[k];
        zero = zero && rel[k] == 0;
      }
      if (!zero) rels.push_back(std::move(rel));
    }
  std::sort(rels.begin(), rels.end());
  rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
  IntMatrix rm(r, rels.size());
  for (std::size_t j = 0; j < rels.size(); ++j)
    for (std::size_t i = 0; i < r; ++i) rm(i, j) = rels[j][i];

  const LatticeQuotient q = lattice_quotient(IntMatrix::identity(r), rm);
  for (const auto& d : q.invariants) {
    if (d == 0) throw Error(ErrorKind::NotWellDefined, "relation lattice is not of full rank");
    invariants_.push_back(to_long(d));
  }
  for (std::size_t k = 0; k < invariants_.size(); ++k) {
    Elem e = 0;
    for (std::size_t i = 0; i < r; ++i)
      e = group_.mul(e, group_.pow(gens[i], to_long(mod_floor(q.generators(i, k), n))));
    generators_.push_back(e);
  }
  coords_.resize(n);
  for (Elem x = 0; x < n; ++x) {
    std::vector<BigInt> v(tree[x].begin(), tree[x].end());
    for (const auto& c : q.coordinates(v)) coords_[x].push_back(to_long(c));
  }

  // Verify that the coordinates form an isomorphism onto the product.
  if (product_of(invariants_) != n) throw Error(ErrorKind::NotWellDefined, "invariant product differs from order");
  by_index_.assign(n, -1);
  for (Elem x = 0; x < n; ++x) {
    long idx = 0;
    for (std::size_t k = 0; k < invariants_.size(); ++k) idx = idx * invariants_[k] + coords_[x][k];
    if (by_index_[idx] >= 0) throw Error(ErrorKind::NotWellDefined, "coordinate map is not injective");
    by_index_[idx] = x;
  }
  for (Elem x = 0; x < n; ++x) {
    Elem e = 0;
    for (std::size_t k = 0; k < invariants_.size(); ++k) e = group_.mul(e, group_.pow(generators_[k], coords_[x][k]));
    if (e != x) throw Error(ErrorKind::NotWellDefined, "coordinates do not reconstruct the element");
  }
}

Elem FiniteAbelianGroup::element(const std::vector<long>& coords) const {
  if (coords.size() != invariants_.size()) throw Error(ErrorKind::ShapeMismatch, "coordinate length");
  long idx = 0;
  for (std::size_t k = 0; k < invariants_.size(); ++k) idx = idx * invariants_[k] + mod_long(coords[k], invariants_[k]);
  return by_index_[idx];
}

std::vector<long> abelian_invariants(const FiniteGroup& a) { return FiniteAbelianGroup(a).invariants(); }

std::vector<long> abelian_invariants_by_counting(const FiniteGroup& a) {
  if (!a.is_abelian()) throw Error(ErrorKind::WrongType, "group is not commutative");
  const int n = a.order();
  std::vector<int> primes;
  int m = n;
  for (int p = 2; p <= m; ++p)
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  // elementary divisors per prime, as exponents
  std::map<int, std::vector<int>> exps;
  for (int p : primes) {
    std::vector<long> torsion{1};  // |A[p^k]|
    for (int k = 1;; ++k) {
      long pk = 1;
      for (int i = 0; i < k; ++i) pk *= p;
      long count = 0;
      for (Elem x = 0; x < n; ++x)
        if (pk % a.element_order(x) == 0) ++count;
      torsion.push_back(count);
      if (count == torsion[k - 1]) break;
    }
    // number of cyclic factors of order >= p^k is log_p(|A[p^k]| / |A[p^(k-1)]|)
    std::vector<int> at_least;
    for (std::size_t k = 1; k < torsion.size(); ++k) {
      long ratio = torsion[k] / torsion[k - 1];
      int e = 0;
      while (ratio > 1) {
        ratio /= p;
        ++e;
      }
      at_least.push_back(e);
    }
    std::vector<int> es;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      const int next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
      for (int c = 0; c < at_least[k] - next; ++c) es.push_back(static_cast<int>(k) + 1);
    }
    std::sort(es.begin(), es.end(), std::greater<>());
    exps[p] = es;
  }
  std::size_t len = 0;
  for (const auto& [p, es] : exps) len = std::max(len, es.size());
  std::vector<long> inv(len, 1);
  // largest elementary divisors go into the last invariant factor
  for (const auto& [p, es] : exps)
    for (std::size_t i = 0; i < es.size(); ++i) {
      long pe = 1;
      for (int k = 0; k < es[i]; ++k) pe *= p;
      inv[len - 1 - i] *= pe;
    }
  return inv;
}

KernelImage hom_kernel_image(const std::vector<long>& domain, const std::vector<long>& codomain,
                             const IntMatrix& matrix) {
  const std::size_t m = domain.size();
  const std::size_t n = codomain.size();
  if (matrix.rows != n || matrix.cols != m)
    throw Error(ErrorKind::MatrixShapeMismatch, "expected a " + std::to_string(n) + "x" + std::to_string(m) + " matrix");
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i)
      if (mod_floor(matrix(j, i) * domain[i], codomain[j]) != 0)
        throw Error(ErrorKind::NotWellDefined, "generator " + std::to_string(i) + " image has wrong order");

  std::vector<BigInt> a(domain.begin(), domain.end());
  std::vector<BigInt> b(codomain.begin(), codomain.end());
  // L = {x : M x in diag(b) Z^n}: project the kernel of [M | diag b].
  const IntMatrix ker = integer_kernel(hconcat(matrix, IntMatrix::diagonal(b)));
  IntMatrix lz = column_basis(ker.top_rows(m));
  if (lz.cols != m) throw Error(ErrorKind::NotWellDefined, "kernel lattice is not of full rank");

  KernelImage out;
  const LatticeQuotient kq = lattice_quotient(lz, IntMatrix::diagonal(a));
  for (const auto& d : kq.invariants) out.kernel_invariants.push_back(to_long(d));
  out.kernel_generators = kq.generators;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < kq.generators.cols; ++k)
      out.kernel_generators(i, k) = mod_floor(kq.generators(i, k), a[i]);

  const LatticeQuotient iq = lattice_quotient(IntMatrix::identity(m), lz);
  for (const auto& d : iq.invariants) out.image_invariants.push_back(to_long(d));
  out.image_generators = matrix * iq.generators;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < iq.generators.cols; ++k)
      out.image_generators(j, k) = mod_floor(out.image_generators(j, k), b[j]);
  return out;
}

}  // namespace xmodcat
