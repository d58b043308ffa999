#include "helpers.hpp"
#include "xmodcat/abelian.hpp"
#include "xmodcat/catalog.hpp"
#include "xmodcat/cohomology.hpp"
#include "xmodcat/extension.hpp"
#include "xmodcat/functor.hpp"

using namespace xmodcat;
using testing::error_kind;
using testing::trivial_module;

namespace {

SymmetricCochain2 z2_cochain(const GammaModule& q, const GammaModule& b, Elem f11) {
  auto f = SymmetricCochain2::zero(q, b);
  f(1, 1) = f11;
  return f;
}

}  // namespace

TEST_CASE("crossed products of Z2 by Z2") {
  const auto m = catalog_module("Z2->0");
  const auto q = trivial_module(cyclic_group(2));
  const auto split = crossed_product(m, q, z2_cochain(q, m.pi1(), 0), {0, 0});
  const auto twisted = crossed_product(m, q, z2_cochain(q, m.pi1(), 1), {0, 0});
  CHECK(validate_extension(split).all_pass());
  CHECK(validate_extension(twisted).all_pass());
  CHECK(abelian_invariants(split.E.target) == std::vector<long>{2, 2});
  CHECK(abelian_invariants(twisted.E.target) == std::vector<long>{4});
  CHECK(induced_psi(split) == std::vector<Elem>{0, 0});
  CHECK_FALSE(are_equivalent(split, twisted).has_value());
  // the identity is the least self-equivalence
  std::vector<Elem> id(4);
  for (Elem i = 0; i < 4; ++i) id[i] = i;
  CHECK(are_equivalent(twisted, twisted) == id);
}

TEST_CASE("crossed product over a nontrivial Gamma-module") {
  const auto m = catalog_module("Z4(-)->0");
  const auto q = testing::z2_module(cyclic_group(2), {0, 1});
  const auto b = m.pi1();
  int cocycles = 0;
  for (Elem c = 0; c < 4; ++c)
    for (Elem s = 0; s < 4; ++s) {
      auto f = z2_cochain(q, b, c);
      f.at_grade(1, 1) = s;
      if (!is_2cocycle(f)) {
        CHECK(error_kind([&] { crossed_product(m, q, f, {0, 0}); }) == ErrorKind::NotWellDefined);
        continue;
      }
      ++cocycles;
      const auto e = crossed_product(m, q, f, {0, 0});
      CHECK(validate_extension(e).all_pass());
      CHECK(e.E.target.order() == 8);
      CHECK(section_cochain(e, least_section(e)) == f);
    }
  CHECK(cocycles == static_cast<int>(enumerate_2cocycles(q, b).size()));
}

TEST_CASE("crossed_product rejects non-cocycles") {
  const auto m = catalog_module("Z2->0");
  const auto q = trivial_module(klein_four_group());
  auto f = SymmetricCochain2::zero(q, m.pi1());
  f(1, 2) = 1;
  CHECK(error_kind([&] { crossed_product(m, q, f, {0, 0, 0, 0}); }) == ErrorKind::NotWellDefined);
}

TEST_CASE("a hand-built Z4 extension and its sections") {
  // 0 -> Z2 -> Z4 -> Z2 -> 0 with eps = 0 into D = 0
  const auto m = catalog_module("Z2->0");
  const GammaModuleExtension e{m, trivial_module(cyclic_group(2)), trivial_module(cyclic_group(4)),
                               {0, 2}, {0, 1, 0, 1}, {0, 0, 0, 0}};
  REQUIRE(validate_extension(e).all_pass());
  // e_1 = 1: 1+1 = 2 = j(1)
  CHECK(section_cochain(e, {0, 1})(1, 1) == 1);
  CHECK(section_cochain(e, {0, 3})(1, 1) == 1);
  CHECK(least_section(e) == std::vector<Elem>{0, 1});
  CHECK(error_kind([&] { section_cochain(e, {1, 1}); }) == ErrorKind::BadSection);
  CHECK(error_kind([&] { section_cochain(e, {0, 2}); }) == ErrorKind::BadSection);

  // j not injective
  auto bad = e;
  bad.j = {0, 0};
  CHECK_FALSE(validate_extension(bad).all_pass());
}

TEST_CASE("changing the section adds a coboundary") {
  const auto m = catalog_module("Z4(-)->0");
  const auto q = testing::z2_module(klein_four_group(), {0, 2, 1, 3});
  const auto b = m.pi1();
  const auto cocycles = enumerate_2cocycles(q, b);
  REQUIRE(cocycles.size() > 1);
  for (const auto& f : {cocycles[0], cocycles[1], cocycles.back()}) {
    const auto e = crossed_product(m, q, f, {0, 0, 0, 0});
    REQUIRE(validate_extension(e).all_pass());
    const auto s = least_section(e);
    for (Elem g1 = 0; g1 < 4; ++g1)
      for (Elem g3 = 0; g3 < 4; ++g3) {
        const Cochain1 g{q, b, {0, g1, 2, g3}};
        std::vector<Elem> s2(4);
        for (Elem u = 0; u < 4; ++u) s2[u] = e.E.target.mul(s[u], e.j[g(u)]);
        CHECK(section_cochain(e, s2) == section_cochain(e, s) + coboundary2(g));
      }
  }
}

TEST_CASE("functors from Dis Q and extensions correspond") {
  for (const char* name : {"Z2->0", "Z4(-)->0", "Z2-0->Z2", "Z2->Z4"}) {
    INFO(name);
    const auto m = catalog_module(name);
    const auto q = name[1] == '4' ? testing::z2_module(cyclic_group(2), {0, 1}) : trivial_module(cyclic_group(2));
    const auto g = build_catgroup(m);
    const auto dis = discrete_catgroup(q);
    const std::vector<Elem> psi(2, 0);
    const auto hc = homotopy_classes(dis, g, discrete_type(dis, m, g, psi));
    REQUIRE(hc.class_count() > 0);
    for (const auto& F : hc.functors) {
      const auto e = extension_from_functor(F, m, q, dis, g);
      CHECK(validate_extension(e).all_pass());
      CHECK(induced_psi(e) == psi);
      const auto back = functor_from_extension(e, least_section(e), dis, g);
      CHECK(check_graded_functor(back, dis, g).all_pass());
      CHECK(functor_cochain(back, m, q, dis, g) == section_cochain(e, least_section(e)));
    }
    const auto report = schreier_bijection_check(m, q, psi);
    CHECK_MESSAGE(report.ok(), report.checks.summary());
    CHECK(report.functor_classes == hc.class_count());
  }
}

TEST_CASE("classification of extensions") {
  const auto q = trivial_module(cyclic_group(2));
  const auto c = classify(catalog_module("Z2->0"), q, {0, 0});
  CHECK_FALSE(c.obstructed);
  CHECK(c.class_count == 2);
  CHECK(c.enumerated_count == 2);
  std::vector<std::vector<long>> inv;
  for (const auto& e : c.representatives) inv.push_back(abelian_invariants(e.E.target));
  std::sort(inv.begin(), inv.end());
  CHECK(inv == std::vector<std::vector<long>>{{2, 2}, {4}});

  const auto iso = classify(catalog_module("Z2=Z2"), q, {0, 0});
  CHECK(iso.class_count == 1);
  CHECK(iso.enumerated_count == 1);

  // Z2 -> Z4 with psi = id: eps must be injective, so E = Z4
  const auto z4 = classify(catalog_module("Z2->Z4"), q, {0, 1});
  CHECK_FALSE(z4.obstructed);
  CHECK(z4.class_count == 1);
  REQUIRE(z4.representatives.size() == 1);
  CHECK(abelian_invariants(z4.representatives[0].E.target) == std::vector<long>{4});

  // B = Z4 negated, D = Z8 with x -> 3x, d(1) = 4, Q = Coker = Z4 negated, psi = id.
  // A lift e of 1 has odd eps(e), forcing sigma e = -e + j(b) with b odd; applying
  // sigma twice gives 2b = 0. So no extension exists.
  const auto neg4 = testing::z2_module(cyclic_group(4), {0, 3, 2, 1});
  const auto tri8 = testing::z2_module(cyclic_group(8), {0, 3, 6, 1, 4, 7, 2, 5});
  const ValidatedModule twisted(abelian_module(neg4, tri8, {0, 4, 0, 4}));
  REQUIRE(twisted.pi0().target.order() == 4);
  std::vector<Elem> psi_id = {0, 1, 2, 3};
  const auto qn = twisted.pi0();
  const auto ob = classify(twisted, qn, psi_id, std::uint64_t{1} << 20);
  CHECK(ob.obstructed);
  CHECK(ob.class_count == 0);
  CHECK(ob.representatives.empty());

  const auto free = classify(catalog_module("Z2-0->Z2"), q, {0, 1});
  CHECK_FALSE(free.obstructed);
  CHECK(free.class_count == 2);

  CHECK(error_kind([&] { classify(catalog_module("S3/A3"), q, {0, 1}); }) == ErrorKind::WrongType);
  CHECK(error_kind([&] { classify(catalog_module("Z2-0->Z2,eta=xy"), q, {0, 1}); }) == ErrorKind::WrongType);
}
