#include <algorithm>
#include <random>

#include "doctest.h"
#include "xmodcat/abelian.hpp"
#include "xmodcat/error.hpp"
#include "xmodcat/group.hpp"

using namespace xmodcat;

namespace {

ErrorKind kind_of(const std::vector<std::vector<Elem>>& rows) {
  try {
    FiniteGroup::from_table(rows);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("table was accepted");
  return ErrorKind::ParseError;
}

bool rows_and_columns_are_permutations(const FiniteGroup& g) {
  for (Elem a = 0; a < g.order(); ++a) {
    std::vector<bool> row(g.order()), col(g.order());
    for (Elem b = 0; b < g.order(); ++b) {
      row[g.mul(a, b)] = true;
      col[g.mul(b, a)] = true;
    }
    if (std::count(row.begin(), row.end(), true) != g.order()) return false;
    if (std::count(col.begin(), col.end(), true) != g.order()) return false;
  }
  return true;
}

std::vector<FiniteGroup> small_groups() {
  return {FiniteGroup(), cyclic_group(2), cyclic_group(4), klein_four_group(), cyclic_group(6),
          symmetric_group3(), quaternion_group(), dihedral_group(4), abelian_group({2, 4}),
          abelian_group({2, 2, 2}), cyclic_group(8), abelian_group({4, 4}), abelian_group({2, 6})};
}

}  // namespace

TEST_CASE("group_from_table validates tables") {
  CHECK(FiniteGroup::from_table({{0, 1}, {1, 0}}).order() == 2);
  CHECK(kind_of({{0, 1}, {1, 1}}) == ErrorKind::NoInverse);
  CHECK(kind_of({{0, 2}, {1, 0}}) == ErrorKind::NotClosed);
  CHECK(kind_of({{1, 0}, {0, 1}}) == ErrorKind::NoIdentity);
  CHECK(kind_of({{0, 1}, {1}}) == ErrorKind::ShapeMismatch);
  // identity at 0, inverses exist, but (1*1)*2 != 1*(1*2)
  CHECK(kind_of({{0, 1, 2}, {1, 0, 0}, {2, 1, 0}}) == ErrorKind::NotAssociative);
}

TEST_CASE("S3 built by closure is nonabelian of order 6") {
  const auto s3 = symmetric_group3();
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(FiniteGroup::from_table(s3.rows()) == s3);
}

TEST_CASE("subgroups, commutators, centers") {
  CHECK(subgroup_generated(cyclic_group(6), {}) == ElemSet{0});
  CHECK(subgroup_generated(cyclic_group(6), {2}) == ElemSet{0, 2, 4});
  const auto s3 = symmetric_group3();
  for (Elem t = 1; t < 6; ++t)
    if (s3.element_order(t) == 2) CHECK(subgroup_generated(s3, {t}).size() == 2);
  CHECK(commutator_subgroup(cyclic_group(4)) == ElemSet{0});
  const auto q8 = quaternion_group();
  CHECK(commutator_subgroup(q8) == ElemSet{0, 1});
  CHECK(center(q8) == ElemSet{0, 1});
  CHECK(center(s3) == ElemSet{0});
  ElemSet a3;
  for (Elem x = 0; x < 6; ++x)
    if (s3.element_order(x) != 2) a3.push_back(x);
  CHECK(commutator_subgroup(s3) == a3);
  CHECK(center(klein_four_group()).size() == 4);
}

TEST_CASE("quotients") {
  const auto z4 = cyclic_group(4);
  auto q = quotient(z4, {0, 2});
  CHECK(q.group.order() == 2);
  CHECK(q.projection.map == std::vector<Elem>{0, 1, 0, 1});
  CHECK(quotient(z4, {0, 1, 2, 3}).group.order() == 1);
  const auto s3 = symmetric_group3();
  Elem t = 1;
  while (s3.element_order(t) != 2) ++t;
  CHECK_THROWS_AS(quotient(s3, subgroup_generated(s3, {t})), Error);
  // projection is surjective with kernel exactly N
  for (const auto& g : small_groups()) {
    auto z = center(g);
    auto qq = quotient(g, z);
    CHECK(check_hom(qq.projection));
    CHECK(image_set(qq.projection).size() == static_cast<std::size_t>(qq.group.order()));
    CHECK(kernel_set(qq.projection) == z);
  }
}

TEST_CASE("actions") {
  const auto z2 = cyclic_group(2), z4 = cyclic_group(4);
  CHECK(check_action(trivial_action(z2, symmetric_group3())));
  CHECK(check_action(make_action(z2, z4, {{0, 1, 2, 3}, {0, 3, 2, 1}})));
  CHECK_FALSE(check_action(make_action(z2, z4, {{0, 1, 2, 3}, {0, 1, 1, 3}})));
}

TEST_CASE("every constructed group has permutation rows and columns") {
  for (const auto& g : small_groups()) CHECK(rows_and_columns_are_permutations(g));
  CHECK(rows_and_columns_are_permutations(named_group("Z2xD4")));
}

TEST_CASE("homomorphism search") {
  CHECK(enumerate_homs(cyclic_group(4), cyclic_group(2)).size() == 2);
  CHECK(enumerate_homs(klein_four_group(), klein_four_group()).size() == 16);
  CHECK(automorphisms(klein_four_group()).size() == 6);
  CHECK(automorphisms(symmetric_group3()).size() == 6);
  CHECK(automorphisms(quaternion_group()).size() == 24);
  for (const auto& f : enumerate_homs(symmetric_group3(), cyclic_group(6))) CHECK(check_hom(f));
  CHECK(find_isomorphism(dihedral_group(3), symmetric_group3()).has_value());
  CHECK_FALSE(find_isomorphism(dihedral_group(4), quaternion_group()).has_value());
  CHECK(find_isomorphism(cyclic_group(6), abelian_group({2, 3})).has_value());
}

TEST_CASE("abelian invariants agree with counting and isomorphism search") {
  CHECK(abelian_invariants(FiniteGroup()).empty());
  CHECK(abelian_invariants(klein_four_group()) == std::vector<long>{2, 2});
  CHECK(abelian_invariants(cyclic_group(6)) == std::vector<long>{6});
  for (const auto& g : small_groups()) {
    if (!g.is_abelian()) continue;
    const FiniteAbelianGroup a(g);
    const auto inv = a.invariants();
    CHECK(product_of(inv) == g.order());
    for (std::size_t i = 0; i + 1 < inv.size(); ++i) CHECK(inv[i + 1] % inv[i] == 0);
    CHECK(abelian_invariants_by_counting(g) == inv);
    CHECK(find_isomorphism(abelian_group(inv), g).has_value());
    for (Elem x = 0; x < g.order(); ++x) CHECK(a.element(a.coordinates(x)) == x);
  }
}

namespace {

// Brute-force kernel/image sizes of a matrix map between invariant presentations.
std::pair<long, long> brute_kernel_image(const std::vector<long>& a, const std::vector<long>& b, const IntMatrix& m) {
  const FiniteGroup dom = abelian_group(a), cod = abelian_group(b);
  std::vector<Elem> map(dom.order());
  for (Elem x = 0; x < dom.order(); ++x) {
    std::vector<long> cx(a.size());
    long rest = x;
    for (std::size_t i = a.size(); i-- > 0;) {
      cx[i] = rest % a[i];
      rest /= a[i];
    }
    long idx = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      long s = 0;
      for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(m(j, i)) * cx[i];
      idx = idx * b[j] + ((s % b[j]) + b[j]) % b[j];
    }
    map[x] = static_cast<Elem>(idx);
  }
  GroupHom f{dom, cod, map};
  REQUIRE(check_hom(f));
  return {static_cast<long>(kernel_set(f).size()), static_cast<long>(image_set(f).size())};
}

}  // namespace

TEST_CASE("hom_kernel_image basic examples") {
  IntMatrix id(1, 1);
  id(0, 0) = 1;
  auto r = hom_kernel_image({2}, {2}, id);
  CHECK(r.kernel_invariants.empty());
  CHECK(r.image_invariants == std::vector<long>{2});
  IntMatrix two(1, 1);
  two(0, 0) = 2;
  r = hom_kernel_image({4}, {4}, two);
  CHECK(r.kernel_invariants == std::vector<long>{2});
  CHECK(r.image_invariants == std::vector<long>{2});
  CHECK(r.kernel_generators(0, 0) == 2);
  CHECK(r.image_generators(0, 0) == 2);
  r = hom_kernel_image({2, 2}, {4}, IntMatrix(1, 2));
  CHECK(r.kernel_invariants == std::vector<long>{2, 2});
  CHECK(r.image_invariants.empty());
  CHECK_THROWS_AS(hom_kernel_image({2}, {2}, IntMatrix(2, 1)), Error);
}

TEST_CASE("hom_kernel_image agrees with enumeration on groups of order <= 16") {
  const std::vector<std::vector<long>> presentations = {{2}, {3}, {4}, {2, 2}, {6}, {8}, {2, 4}, {2, 2, 2}, {4, 4}, {2, 8}, {16}, {2, 2, 4}};
  int tested = 0;
  for (const auto& a : presentations)
    for (const auto& b : presentations) {
      if (product_of(a) > 16 || product_of(b) > 16) continue;
      // every homomorphism: column i ranges over elements of order dividing a_i
      const FiniteGroup cod = abelian_group(b);
      std::vector<std::vector<long>> cols;
      for (Elem y = 0; y < cod.order(); ++y) {
        std::vector<long> cy(b.size());
        long rest = y;
        for (std::size_t j = b.size(); j-- > 0;) {
          cy[j] = rest % b[j];
          rest /= b[j];
        }
        cols.push_back(cy);
      }
      // sample a handful of maps deterministically
      for (long seed = 0; seed < 6; ++seed) {
        IntMatrix m(b.size(), a.size());
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i) {
          std::vector<std::size_t> valid;
          for (std::size_t c = 0; c < cols.size(); ++c)
            if (cod.element_order(static_cast<Elem>(c)) <= a[i] && a[i] % cod.element_order(static_cast<Elem>(c)) == 0)
              valid.push_back(c);
          const auto& pick = cols[valid[(seed * 7 + i * 3) % valid.size()]];
          for (std::size_t j = 0; j < b.size(); ++j) m(j, i) = pick[j];
        }
        const auto r = hom_kernel_image(a, b, m);
        const auto [k, im] = brute_kernel_image(a, b, m);
        CHECK(product_of(r.kernel_invariants) == k);
        CHECK(product_of(r.image_invariants) == im);
        ++tested;
      }
    }
  CHECK(tested > 100);
}

TEST_CASE("invariant-factor bases survive relabelled tables") {
  // same group, elements renamed by a random permutation fixing 0
  std::mt19937_64 rng(17);
  for (const auto& inv : std::vector<std::vector<long>>{{2, 4}, {2, 2, 2}, {4, 4}, {2, 8}, {2, 2, 4}, {3, 6}}) {
    const FiniteGroup g = abelian_group(inv);
    const int n = g.order();
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Elem> p(n);
      for (int i = 0; i < n; ++i) p[i] = i;
      std::shuffle(p.begin() + 1, p.end(), rng);
      std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) rows[p[a]][p[b]] = p[g.mul(a, b)];
      const FiniteAbelianGroup h(FiniteGroup::from_table(rows));
      CHECK(h.invariants() == inv);
      for (Elem x = 0; x < n; ++x) CHECK(h.element(h.coordinates(x)) == x);
    }
  }
}
