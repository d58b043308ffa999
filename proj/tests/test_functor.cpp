#include "helpers.hpp"
#include "xmodcat/catalog.hpp"
#include "xmodcat/cohomology.hpp"
#include "xmodcat/functor.hpp"

using namespace xmodcat;
using testing::error_kind;
using testing::trivial_module;

namespace {

std::vector<Elem> identity_map(int n) {
  std::vector<Elem> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Functors Dis(q) -> G(h) of type (id, 0).
HomotopyClasses from_discrete(const GammaModule& q, const Cochain3& h, Exec exec = Exec::Parallel) {
  const GradedCatGroup dis = discrete_catgroup(q);
  const GradedCatGroup dst = build_reduced(h);
  return homotopy_classes(dis, dst, reduced_type(dis, dst, identity_map(q.target.order()), {0}), kDefaultGuard, exec);
}

}  // namespace

TEST_CASE("classes of functors out of a discrete category count H2") {
  const std::vector<std::pair<GammaModule, GammaModule>> cases = {
      {trivial_module(cyclic_group(2)), trivial_module(cyclic_group(2))},
      {trivial_module(cyclic_group(2)), trivial_module(cyclic_group(3))},
      {trivial_module(cyclic_group(4)), trivial_module(cyclic_group(2))},
      {trivial_module(klein_four_group()), trivial_module(cyclic_group(2))},
      {testing::z2_module(cyclic_group(2), {0, 1}), testing::z2_module(cyclic_group(4), {0, 3, 2, 1})},
  };
  for (const auto& [q, b] : cases) {
    const auto hc = from_discrete(q, Cochain3::zero(q, b));
    CHECK(static_cast<long>(hc.class_count()) == H2Linear(q, b).order());
    CHECK(hc.late_rejections == 0);
    for (const auto& f : hc.functors) CHECK(check_graded_functor(f, discrete_catgroup(q), build_reduced(Cochain3::zero(q, b))).all_pass());
  }
}

TEST_CASE("no functor reaches a reduced model with nonvanishing braiding class") {
  const auto z2 = trivial_module(cyclic_group(2));
  Cochain3 h = Cochain3::zero(z2, z2);
  h.c(1, 1) = 1;
  CHECK(from_discrete(z2, h).class_count() == 0);
  const GradedCatGroup dis = discrete_catgroup(z2), dst = build_reduced(h);
  CHECK_FALSE(find_functor(dis, dst, reduced_type(dis, dst, {0, 1}, {0})).has_value());
}

TEST_CASE("serial and parallel searches return the same functors") {
  const auto q = testing::z2_module(cyclic_group(2), {0, 1});
  const auto b = testing::z2_module(cyclic_group(4), {0, 3, 2, 1});
  const auto s = from_discrete(q, Cochain3::zero(q, b), Exec::Serial);
  const auto p = from_discrete(q, Cochain3::zero(q, b), Exec::Parallel);
  CHECK(s.functors == p.functors);
  CHECK(s.class_of == p.class_of);
}

TEST_CASE("transport produces homotopic functors in the same class") {
  const auto q = trivial_module(cyclic_group(2)), b = trivial_module(cyclic_group(4));
  const GradedCatGroup dis = discrete_catgroup(q), dst = build_reduced(Cochain3::zero(q, b));
  const auto hc = from_discrete(q, Cochain3::zero(q, b));
  REQUIRE(hc.class_count() == 2);
  for (std::size_t i = 0; i < hc.functors.size(); ++i) {
    const auto& f = hc.functors[i];
    for (Elem a = 0; a < 4; ++a) {
      const std::vector<MorId> theta = {dst.id(f.obj[0]), dst.find({f.obj[1], f.obj[1], a, 0})};
      const GradedFunctor g = transport(f, theta, dis, dst);
      CHECK(check_graded_functor(g, dis, dst).all_pass());
      CHECK(is_homotopy(theta, f, g, dis, dst));
      for (std::size_t j = 0; j < hc.functors.size(); ++j)
        if (hc.functors[j] == g) CHECK(hc.class_of[j] == hc.class_of[i]);
    }
  }
}

TEST_CASE("homotopy_report rejects mistyped components") {
  const auto q = trivial_module(cyclic_group(2)), b = trivial_module(cyclic_group(2));
  const GradedCatGroup dis = discrete_catgroup(q), dst = build_reduced(Cochain3::zero(q, b));
  const auto hc = from_discrete(q, Cochain3::zero(q, b));
  REQUIRE(hc.class_count() == 2);
  const auto& f = hc.functors[hc.representatives[0]];
  const auto& g = hc.functors[hc.representatives[1]];
  CHECK(is_homotopy({dst.id(0), dst.id(1)}, f, f, dis, dst));
  // distinct classes: no identity-shaped theta links them
  CHECK_FALSE(is_homotopy({dst.id(0), dst.id(1)}, f, g, dis, dst));
  CHECK_FALSE(homotopy_report({dst.id(1), dst.id(1)}, f, f, dis, dst).all_pass());
}

TEST_CASE("morphisms and functors correspond") {
  for (const auto& [sname, tname] : std::vector<std::pair<std::string, std::string>>{
           {"Z2->Z4", "Z4->Z2"}, {"Z2-0->Z2", "Z2-0->Z2"}, {"S3/A3", "S3/A3"}, {"Z4(-)->0", "Z4(-)->0"},
           {"Z2-0->Z2,eta=xy", "Z2-0->Z2,eta=xy"}}) {
    INFO(sname << " -> " << tname);
    const auto a = catalog_module(sname), b = catalog_module(tname);
    const auto ga = build_catgroup(a), gb = build_catgroup(b);
    const auto mors = enumerate_morphisms(a, b, kDefaultGuard);
    CHECK_FALSE(mors.empty());
    for (const auto& m : mors) {
      const GradedFunctor f = morphism_to_functor(m, a, b, ga, gb);
      CHECK(check_graded_functor(f, ga, gb).all_pass());
      CHECK(is_regular(f, ga, gb));
      CHECK(functor_to_morphism(f, a, b, ga, gb) == m);
    }
  }
}

TEST_CASE("functor_to_morphism rejects incoherent input") {
  // Z2 -0-> Z4: shifting F~ at (1,1) alone breaks associativity
  const ValidatedModule a(abelian_module(trivial_module(cyclic_group(2)), trivial_module(cyclic_group(4)), {0, 0}));
  const auto ga = build_catgroup(a);
  const auto mors = enumerate_morphisms(a, a, kDefaultGuard);
  REQUIRE_FALSE(mors.empty());
  GradedFunctor f = morphism_to_functor(mors.front(), a, a, ga, ga);
  const auto& r = ga.mor(f.ft(1, 1));
  f.ftilde[1 * 4 + 1] = ga.find({r.src, r.dst, a->B.mul(r.payload, 1), r.grade});
  CHECK_FALSE(check_graded_functor(f, ga, ga).all_pass());
  CHECK(error_kind([&] { functor_to_morphism(f, a, a, ga, ga); }) == ErrorKind::NotCoherent);
}

TEST_CASE("the search needs a skeletal source") {
  const auto m = catalog_module("S3/A3");
  const auto g = build_catgroup(m);
  FunctorType t;
  t.object_candidates.assign(g.objects, identity_map(g.objects));
  t.unit_auto_map.assign(g.size(), -1);
  CHECK(error_kind([&] { homotopy_classes(g, g, t); }) == ErrorKind::WrongType);
}
