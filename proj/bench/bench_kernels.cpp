// Serial reference vs OpenMP kernel timings; each pair must agree.
// usage: bench_kernels [repeats]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <omp.h>

#include "xmodcat/catalog.hpp"
#include "xmodcat/catgroup.hpp"
#include "xmodcat/cohomology.hpp"
#include "xmodcat/crossed_module.hpp"
#include "xmodcat/extension.hpp"
#include "xmodcat/functor.hpp"

using namespace xmodcat;

namespace {

double best_of(int repeats, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

bool all_agree = true;

template <class F>
void kernel(const char* name, int repeats, F run) {
  decltype(run(Exec::Serial)) s, p;
  const double ts = best_of(repeats, [&] { s = run(Exec::Serial); });
  const double tp = best_of(repeats, [&] { p = run(Exec::Parallel); });
  const bool same = s == p;
  all_agree = all_agree && same;
  std::printf("%-22s serial %9.4fs  parallel %9.4fs  speedup %5.2fx  %s\n", name, ts, tp, ts / tp,
              same ? "agree" : "DISAGREE");
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads %d\n", omp_get_max_threads());

  // D8 over its rotation subgroup: 128 arrows per grade
  const auto d8 = dihedral_group(8);
  ElemSet rotations;
  for (Elem x = 0; x < d8.order(); ++x)
    if (d8.element_order(x) != 2 || d8.conjugate(1, x) == x) rotations.push_back(x);
  const auto big = build_catgroup(conjugation_module(d8, subgroup_generated(d8, rotations)));
  kernel("check_axioms", repeats, [&](Exec e) { return check_axioms(big, e); });

  const auto v4 = trivial_action(FiniteGroup(), klein_four_group());
  const auto z8 = trivial_action(FiniteGroup(), cyclic_group(8));
  kernel("enumerate_2cocycles", repeats, [&](Exec e) { return enumerate_2cocycles(v4, z8, kDefaultGuard, e); });

  kernel("h2_brute", repeats, [&](Exec e) { return h2_brute(v4, z8, kDefaultGuard, e).class_of; });

  const auto dis = discrete_catgroup(v4);
  const auto g0 = build_reduced(Cochain3::zero(v4, trivial_action(FiniteGroup(), cyclic_group(2))));
  const auto type = reduced_type(dis, g0, {0, 1, 2, 3}, {0});
  kernel("homotopy_classes", repeats, [&](Exec e) {
    const auto hc = homotopy_classes(dis, g0, type, kDefaultGuard, e);
    return std::make_pair(hc.functors, hc.class_of);
  });

  const auto m = catalog_module("Z4(-)->0");
  const auto q = make_action(cyclic_group(2), klein_four_group(), {{0, 1, 2, 3}, {0, 2, 1, 3}});
  const auto exts = enumerate_extensions(m, q, {0, 0, 0, 0});
  kernel("are_equivalent", repeats, [&](Exec e) {
    std::vector<std::optional<std::vector<Elem>>> out;
    for (std::size_t i = 0; i < exts.size(); i += 7) out.push_back(are_equivalent(exts[0], exts[i], kDefaultGuard, e));
    return out;
  });

  kernel("check_graded_functor", repeats, [&](Exec e) {
    return check_graded_functor(identity_functor(big), big, big, e);
  });

  return all_agree ? 0 : 1;
}
