// Acceptance runner: one line per criterion, exit status 0 only when all pass.
// usage: acceptance <corpus-dir> <xmodcat-cli>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "xmodcat/abelian.hpp"
#include "xmodcat/catalog.hpp"
#include "xmodcat/catgroup.hpp"
#include "xmodcat/error.hpp"
#include "xmodcat/cohomology.hpp"
#include "xmodcat/extension.hpp"
#include "xmodcat/functor.hpp"
#include "xmodcat/scenario.hpp"

namespace fs = std::filesystem;
using namespace xmodcat;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int n, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = limit_s <= 0 || s < limit_s;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs", s);
  std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL") << "  " << title << "  [" << timing;
  if (limit_s > 0) std::cout << " / limit " << limit_s << "s";
  std::cout << "]  " << o.detail << (in_time ? "" : " (over time limit)") << std::endl;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<fs::path> scenario_files(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  return files;
}

// Modules named in the corpus scenarios (inline ones only).
std::vector<BraidedGammaCrossedModule> corpus_modules(const std::string& dir) {
  std::vector<BraidedGammaCrossedModule> out;
  for (const auto& f : scenario_files(dir)) {
    const auto j = io::parse(slurp(f));
    if (!j.contains("inputs")) continue;
    for (const char* key : {"module", "target"}) {
      if (!j["inputs"].contains(key) || !j["inputs"][key].is_object()) continue;
      auto m = io::module_from_json(j["inputs"][key], key);
      if (validate(m).all_pass()) out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<GammaModule> small_gamma_modules(int max_order) {
  std::vector<GammaModule> out;
  const FiniteGroup z2 = cyclic_group(2);
  for (const auto& inv : std::vector<std::vector<long>>{{}, {2}, {3}, {4}, {2, 2}}) {
    const FiniteGroup a = abelian_group(inv);
    if (a.order() > max_order) continue;
    out.push_back(trivial_action(FiniteGroup(), a));
    for (const auto& f : automorphisms(a)) {
      bool involutive = true;
      for (Elem x = 0; x < a.order(); ++x) involutive = involutive && f(f(x)) == x;
      if (involutive) out.push_back(make_action(z2, a, {identity_hom(a).map, f.map}));
    }
  }
  return out;
}

GammaModule z2_trivial_gamma(const FiniteGroup& g) { return trivial_action(FiniteGroup(), g); }

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <corpus-dir> <xmodcat-cli>\n";
    return 2;
  }
  const std::string corpus = argv[1];
  const std::string cli = argv[2];
  const std::uint64_t seed = seed_from_env(20240601);
  std::cout << "seed " << seed << std::endl;

  criterion(1, "conjugation modules satisfy every crossed-module axiom", 1.0, [] {
    int n = 0;
    for (const auto& nm : catalog_modules()) {
      if (nm.name.find('/') == std::string::npos || nm.name == "S3/S3" || nm.name == "Z4/1") continue;
      const auto r = validate(*nm.module);
      if (!r.all_pass()) return Outcome{false, nm.name + ": " + r.summary()};
      ++n;
    }
    return Outcome{n == 6, std::to_string(n) + " modules (S3/A3, Q8/<i>, D4/V4, each with Gamma 1 and Z2)"};
  });

  criterion(2, "build_catgroup coherence on corpus and random modules; mutation detection", 60.0, [&] {
    std::vector<BraidedGammaCrossedModule> mods;
    for (const auto& nm : catalog_modules()) mods.push_back(*nm.module);
    for (auto& m : corpus_modules(corpus)) mods.push_back(std::move(m));
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 1000; ++i) mods.push_back(random_module(rng, 8));
    for (const auto& m : mods) {
      const ValidatedModule v(m);
      const auto r = check_axioms(build_catgroup(v));
      if (!r.all_pass()) return Outcome{false, "check_axioms failed: " + r.summary()};
    }
    int broken = 0, by_validate = 0, by_axioms = 0, tried = 0;
    while (broken < 100 && tried < 100000) {
      const auto& base = mods[static_cast<std::size_t>(tried++) % mods.size()];
      Mutation mu;
      try {
        mu = random_mutation(base, rng);
      } catch (const Error&) {
        continue;
      }
      const auto mutated = apply_mutation(base, mu);
      const auto r = validate(mutated);
      if (r.all_pass()) continue;  // the change produced another valid module
      ++broken;
      if (!r.failing().empty()) ++by_validate;
      if (!check_axioms(detail::build_catgroup_unchecked(mutated)).all_pass()) ++by_axioms;
    }
    std::ostringstream d;
    d << mods.size() << " modules coherent; " << by_validate << "/" << broken
      << " breaking mutations caught by validate (" << by_axioms << " also by check_axioms on the unchecked build)";
    return Outcome{broken == 100 && by_validate == broken, d.str()};
  });

  criterion(3, "morphisms <-> regular functors and module <-> category round trips", 120.0, [] {
    const auto cat = catalog_modules();
    std::size_t pairs = 0, morphisms = 0;
    for (const auto& a : cat) {
      const auto ga = build_catgroup(a.module);
      if (!(catgroup_to_crossed(ga) == a.module) || !(build_catgroup(catgroup_to_crossed(ga)) == ga))
        return Outcome{false, a.name + ": rebuild differs"};
      if (a.module.pi0().target.order() > 2) continue;
      for (const auto& b : cat) {
        if (b.module.pi1().target.order() > 4 || !(a.module->gamma == b.module->gamma)) continue;
        const auto gb = build_catgroup(b.module);
        ++pairs;
        for (const auto& m : enumerate_morphisms(a.module, b.module, kDefaultGuard)) {
          ++morphisms;
          const auto f = morphism_to_functor(m, a.module, b.module, ga, gb);
          if (!is_regular(f, ga, gb)) return Outcome{false, a.name + " -> " + b.name + ": functor not regular"};
          const auto back = functor_to_morphism(f, a.module, b.module, ga, gb);
          if (!(back == m)) return Outcome{false, a.name + " -> " + b.name + ": morphism round trip differs"};
          if (!(morphism_to_functor(back, a.module, b.module, ga, gb) == f))
            return Outcome{false, a.name + " -> " + b.name + ": functor round trip differs"};
        }
      }
    }
    return Outcome{pairs > 0 && morphisms > 0, std::to_string(pairs) + " module pairs, " + std::to_string(morphisms) +
                                                    " morphisms; " + std::to_string(cat.size()) + " rebuilds"};
  });

  criterion(4, "H2 by Smith normal form agrees with brute force", 120.0, [] {
    const auto mods = small_gamma_modules(4);
    std::size_t cases = 0;
    for (const auto& q : mods)
      for (const auto& b : mods) {
        if (!(q.gamma == b.gamma)) continue;
        const H2Linear lin(q, b);
        const H2Brute brute = h2_brute(q, b);
        const std::string why = h2_paths_agree(lin, brute);
        if (!why.empty()) return Outcome{false, why};
        ++cases;
      }
    const auto z2 = z2_trivial_gamma(cyclic_group(2));
    const long base = H2Linear(z2, z2).order();
    return Outcome{base == 2, std::to_string(cases) + " (Q,B) pairs; |H2(Z2,Z2)| = " + std::to_string(base)};
  });

  criterion(5, "functor classes Dis(Z2) -> G(h) against H2 and the obstruction", 60.0, [] {
    const auto z2 = z2_trivial_gamma(cyclic_group(2));
    const auto dis = discrete_catgroup(z2);
    const auto g0 = build_reduced(Cochain3::zero(z2, z2));
    const auto zero = homotopy_classes(dis, g0, reduced_type(dis, g0, {0, 1}, {0}));
    Cochain3 h = Cochain3::zero(z2, z2);
    h.c(1, 1) = 1;
    const auto gh = build_reduced(h);
    const auto braided = homotopy_classes(dis, gh, reduced_type(dis, gh, {0, 1}, {0}));
    const long h2 = H2Linear(z2, z2).order();
    std::ostringstream d;
    d << "h = 0: " << zero.class_count() << " classes, |H2| = " << h2 << "; braided h: " << braided.class_count()
      << " classes, obstruction vanishes: " << std::boolalpha << class_vanishes(h);
    return Outcome{static_cast<long>(zero.class_count()) == h2 && h2 == 2 && braided.class_count() == 0 &&
                       !class_vanishes(h),
                   d.str()};
  });

  criterion(6, "Schreier bijection between functor classes and extension classes", 300.0, [] {
    const auto one = FiniteGroup();
    const auto z2 = cyclic_group(2), z4 = cyclic_group(4);
    const auto gz2 = [&](const FiniteGroup& g, std::vector<Elem> inv) {
      std::vector<Elem> id(g.order());
      for (int i = 0; i < g.order(); ++i) id[i] = i;
      return make_action(z2, g, {id, inv});
    };
    struct Case {
      std::string name;
      ValidatedModule m;
      GammaModule q;
      std::vector<Elem> psi;
    };
    std::vector<Case> cases = {
        {"Z2->0, Q=Z2", catalog_module("Z2->0"), z2_trivial_gamma(z2), {0, 0}},
        {"Z2->0, Q=V4", catalog_module("Z2->0"), z2_trivial_gamma(klein_four_group()), {0, 0, 0, 0}},
        {"Z4->0, Q=Z2", ValidatedModule(abelian_module(z2_trivial_gamma(z4), z2_trivial_gamma(one), {0, 0, 0, 0})),
         z2_trivial_gamma(z2), {0, 0}},
        {"Z2->Z4, Q=Z2, psi=id", catalog_module("Z2->Z4"), z2_trivial_gamma(z2), {0, 1}},
        {"Z2-0->Z2, Q=Z2, psi=id", catalog_module("Z2-0->Z2"), z2_trivial_gamma(z2), {0, 1}},
        {"Z4(-)->0, Q=Z2, Gamma=Z2", catalog_module("Z4(-)->0"), gz2(z2, {0, 1}), {0, 0}},
        {"Z2->0 over Gamma=Z2, Q=V4 swap",
         ValidatedModule(abelian_module(trivial_action(z2, z2), trivial_action(z2, one), {0, 0})),
         gz2(klein_four_group(), {0, 2, 1, 3}), {0, 0, 0, 0}},
        {"Z2->V4 swap, Q=Z2, psi=id", catalog_module("Z2->V4(swap)"), gz2(z2, {0, 1}), {0, 1}},
    };
    std::ostringstream d;
    bool ok = true;
    bool saw_split_only = false, saw_nonsplit = false;
    for (const auto& c : cases) {
      const auto r = schreier_bijection_check(c.m, c.q, c.psi);
      ok = ok && r.ok();
      // non-split: some extension has E not isomorphic to B x Q
      const auto exts = enumerate_extensions(c.m, c.q, c.psi);
      const auto split = abelian_invariants(direct_product(c.m->B, c.q.target));
      bool nonsplit = false;
      for (const auto& e : exts) nonsplit = nonsplit || abelian_invariants(e.E.target) != split;
      saw_nonsplit = saw_nonsplit || nonsplit;
      saw_split_only = saw_split_only || !nonsplit;
      d << c.name << ": " << r.functor_classes << "=" << r.extension_classes << (r.ok() ? "" : " FAILED " + r.checks.summary())
        << "; ";
    }
    d << cases.size() << " scenarios";
    return Outcome{ok && cases.size() >= 6 && saw_nonsplit && saw_split_only, d.str()};
  });

  criterion(7, "classify: (Z2,0,0) over Z2 gives Z4 and Z2xZ2; d an isomorphism gives one class", 30.0, [] {
    const auto q = z2_trivial_gamma(cyclic_group(2));
    const auto c = classify(catalog_module("Z2->0"), q, {0, 0});
    std::vector<std::vector<long>> inv;
    for (const auto& e : c.representatives) inv.push_back(abelian_invariants(e.E.target));
    std::sort(inv.begin(), inv.end());
    const auto iso = classify(catalog_module("Z2=Z2"), q, {0, 0});
    std::ostringstream d;
    d << "count " << c.class_count << " (enumerated " << c.enumerated_count << "), invariants";
    for (const auto& v : inv) {
      d << " [";
      for (std::size_t i = 0; i < v.size(); ++i) d << (i ? "," : "") << v[i];
      d << "]";
    }
    d << "; isomorphism case count " << iso.class_count;
    const std::vector<std::vector<long>> want = {{2, 2}, {4}};
    return Outcome{c.class_count == 2 && c.enumerated_count == 2 && inv == want && iso.class_count == 1 &&
                       iso.enumerated_count == 1,
                   d.str()};
  });

  criterion(8, "CLI reports byte-identical over 3 runs at 1, 2 and 8 threads", 0, [&] {
    const auto files = scenario_files(corpus);
    const fs::path tmp = fs::temp_directory_path() / ("xmodcat-accept-" + std::to_string(seed));
    fs::create_directories(tmp);
    std::size_t compared = 0;
    std::string bad;
    for (const auto& f : files) {
      std::string first;
      for (int threads : {1, 2, 8})
        for (int run = 0; run < 3; ++run) {
          const fs::path out = tmp / "report.json";
          fs::remove(out);
          const std::string cmd = "\"" + cli + "\" run \"" + f.string() + "\" --threads " + std::to_string(threads) +
                                  " --json \"" + out.string() + "\" > /dev/null 2>&1";
          if (std::system(cmd.c_str()) == -1 && bad.empty()) bad = "cannot start " + cli;
          const std::string text = fs::exists(out) ? slurp(out) : std::string();
          if (text.empty() && bad.empty()) bad = f.filename().string() + ": no report";
          if (run == 0 && threads == 1)
            first = text;
          else if (text != first && bad.empty())
            bad = f.filename().string() + " differs at " + std::to_string(threads) + " threads";
          ++compared;
        }
    }
    fs::remove_all(tmp);
    return Outcome{bad.empty() && !files.empty(),
                   bad.empty() ? std::to_string(files.size()) + " scenarios, " + std::to_string(compared) + " reports"
                               : bad};
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
