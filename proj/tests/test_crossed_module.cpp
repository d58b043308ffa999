#include <algorithm>

#include "helpers.hpp"
#include "xmodcat/exec.hpp"
#include "xmodcat/catalog.hpp"
#include "xmodcat/crossed_module.hpp"

using namespace xmodcat;
using testing::error_kind;

namespace {

ElemSet a3_in_s3() {
  const auto s3 = symmetric_group3();
  ElemSet a3;
  for (Elem x = 0; x < 6; ++x)
    if (s3.element_order(x) != 2) a3.push_back(x);
  return a3;
}

}  // namespace

TEST_CASE("conjugation module of A3 in S3") {
  const auto m = conjugation_module(symmetric_group3(), a3_in_s3());
  CHECK(validate(*m).all_pass());
  // Coker d = S3/A3 = Z2, Ker d = 1 (inclusion).
  CHECK(m.pi0().target.order() == 2);
  CHECK(m.pi1().target.order() == 1);
  CHECK_FALSE(is_abelian(*m));
}

TEST_CASE("conjugation module preconditions") {
  const auto s3 = symmetric_group3();
  Elem t = 1;
  while (s3.element_order(t) != 2) ++t;
  CHECK(error_kind([&] { conjugation_module(s3, subgroup_generated(s3, {t})); }) == ErrorKind::NotNormal);
  CHECK(error_kind([&] { conjugation_module(s3, {0}); }) == ErrorKind::QuotientNotAbelian);
  // the swap of V4 moves {0,1}
  const auto v4 = klein_four_group();
  const auto swap = testing::z2_module(v4, {0, 2, 1, 3});
  CHECK(error_kind([&] { conjugation_module(swap, {0, 1}); }) == ErrorKind::NotGammaStable);
}

TEST_CASE("every catalog module passes validation and is stable under copy") {
  for (const auto& nm : catalog_modules()) {
    INFO(nm.name);
    CHECK(validate(*nm.module).all_pass());
    CHECK(ValidatedModule(*nm.module) == nm.module);
  }
}

TEST_CASE("validate reports failing axioms with witnesses") {
  auto raw = *conjugation_module(symmetric_group3(), a3_in_s3());
  raw.eta[1 * 6 + 2] = (raw.eta[1 * 6 + 2] + 1) % 3;
  const auto r = validate(raw);
  CHECK_FALSE(r.all_pass());
  for (const auto& name : r.failing()) CHECK_FALSE(r.at(name).witnesses.empty());
  CHECK(error_kind([&] { ValidatedModule{raw}; }) == ErrorKind::NotValidated);
  auto shape = raw;
  shape.d.pop_back();
  CHECK(error_kind([&] { validate(shape); }) == ErrorKind::ShapeMismatch);
}

TEST_CASE("a gamma action that does not commute with d is rejected") {
  // identity Z4 -> Z4 with Gamma fixing B and negating D
  const auto z4 = cyclic_group(4);
  const auto fixed = trivial_action(cyclic_group(2), z4);
  const auto neg = testing::z2_module(z4, {0, 3, 2, 1});
  const auto m = abelian_module(fixed, neg, {0, 1, 2, 3});
  CHECK_FALSE(validate(m).all_pass());
  CHECK_FALSE(validate(m).at("d_equivariant").pass());
}

TEST_CASE("morphism enumeration on tiny modules") {
  const auto m = catalog_module("Z2->0");
  // f1 in Hom(Z2,Z2) (2 choices), f0 trivial, phi in Z^2(Coker d = 0, Ker d = Z2) = {0}.
  const auto all = enumerate_morphisms(m, m, kDefaultGuard);
  CHECK(all.size() == 2);
  for (const auto& f : all) CHECK(validate_morphism(f, m, m).all_pass());
  // Z2 -0-> Z2: Coker = Z2, Ker = Z2; f1, f0 each in Hom(Z2,Z2) and phi in Z^2(Z2,Z2) of size 2
  // (the 2-cocycles of Z2 in Z2 are 0 and the carry cocycle f(1,1)=1).
  const auto n = catalog_module("Z2-0->Z2");
  CHECK(enumerate_morphisms(n, n, kDefaultGuard).size() == 8);
}

TEST_CASE("composition of morphisms is associative and unital") {
  std::vector<ValidatedModule> ms;
  for (const auto& nm : catalog_modules())
    if (nm.module->nb() * nm.module->nd() <= 8 && nm.module->ng() == 1) ms.push_back(nm.module);
  for (const auto& a : ms)
    for (const auto& b : ms) {
      const auto ab = enumerate_morphisms(a, b, kDefaultGuard);
      for (const auto& f : ab) {
        CHECK(compose_morphisms(identity_morphism(b), f, a, b, b) == f);
        CHECK(compose_morphisms(f, identity_morphism(a), a, a, b) == f);
      }
      for (const auto& c : ms) {
        const auto bc = enumerate_morphisms(b, c, kDefaultGuard);
        for (std::size_t i = 0; i < std::min<std::size_t>(ab.size(), 3); ++i)
          for (std::size_t j = 0; j < std::min<std::size_t>(bc.size(), 3); ++j) {
            const auto gf = compose_morphisms(bc[j], ab[i], a, b, c);
            CHECK(validate_morphism(gf, a, c).all_pass());
            for (const auto& h : enumerate_morphisms(c, a, kDefaultGuard))
              CHECK(compose_morphisms(h, gf, a, c, a) ==
                    compose_morphisms(compose_morphisms(h, bc[j], b, c, a), ab[i], a, b, a));
          }
      }
    }
}

TEST_CASE("induced maps on homotopy groups") {
  const auto a = catalog_module("Z2->Z4");
  const auto b = catalog_module("Z4->Z2");
  for (const auto& f : enumerate_morphisms(a, b, kDefaultGuard)) {
    const auto c = induced_on_coker(f.f0, a, b);
    CHECK(check_hom(GroupHom{a.pi0().target, b.pi0().target, c}));
    const auto k = induced_on_ker(f.f1, a, b);
    CHECK(check_hom(GroupHom{a.pi1().target, b.pi1().target, k}));
  }
}
