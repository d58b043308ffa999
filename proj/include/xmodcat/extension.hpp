#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "xmodcat/catgroup.hpp"
#include "xmodcat/cochain.hpp"
#include "xmodcat/crossed_module.hpp"
#include "xmodcat/exec.hpp"
#include "xmodcat/report.hpp"

namespace xmodcat {

/// 0 -> B -j-> E -p-> Q -> 0 of Gamma-modules with eps: E -> D, eps j = d,
/// for an abelian Gamma-crossed module M = (B, D, d).
struct GammaModuleExtension {
  ValidatedModule M;
  GammaModule Q;
  GammaModule E;
  std::vector<Elem> j;    // B -> E
  std::vector<Elem> p;    // E -> Q
  std::vector<Elem> eps;  // E -> D
};

/// Checks M_abelian, E_module, j_hom, p_hom, eps_hom, j_equivariant,
/// p_equivariant, eps_equivariant, j_injective, p_surjective, exact,
/// eps_j_is_d. Throws ShapeMismatch for out-of-range tables.
AxiomReport validate_extension(const GammaModuleExtension& ext);

/// psi: Q -> Coker d with psi p = q eps (cosets indexed as in coker_d()).
/// Throws NotWellDefined.
std::vector<Elem> induced_psi(const GammaModuleExtension& ext);

/// The crossed product B x_f Q with eps(b,u) = d(b) F(u); element (b,u) has
/// index b*|Q|+u. f takes values in B. Throws NotWellDefined when the data do
/// not form an extension of type M.
GammaModuleExtension crossed_product(const ValidatedModule& m, const GammaModule& q, const SymmetricCochain2& f,
                                     const std::vector<Elem>& objects);

/// f read off a functor Dis Q -> build_catgroup(m): f(u,v) from F~_{u,v},
/// f(u,sigma) from F(0,sigma)_u.
SymmetricCochain2 functor_cochain(const GradedFunctor& F, const ValidatedModule& m, const GammaModule& q,
                                  const GradedCatGroup& dis, const GradedCatGroup& g);

/// Crossed product of a functor Dis Q -> build_catgroup(m) with F(0) = I and
/// F_* = id. Throws NotCoherent, WrongType.
GammaModuleExtension extension_from_functor(const GradedFunctor& F, const ValidatedModule& m, const GammaModule& q,
                                            const GradedCatGroup& dis, const GradedCatGroup& g);

/// The factor cochain of a set-theoretic section (e_0 = 0, p e_u = u), with
/// values in B. Throws BadSection.
SymmetricCochain2 section_cochain(const GammaModuleExtension& ext, const std::vector<Elem>& section);

/// F(u) = eps(e_u), F~ and F(0,sigma) from the factor cochain of the section.
/// Throws BadSection.
GradedFunctor functor_from_extension(const GammaModuleExtension& ext, const std::vector<Elem>& section,
                                     const GradedCatGroup& dis, const GradedCatGroup& g);

/// Least section: e_u is the least element of p^-1(u).
std::vector<Elem> least_section(const GammaModuleExtension& ext);

/// Lexicographically least equivalence alpha: E -> E' (alpha j = j',
/// p' alpha = p, eps' alpha = eps, Gamma-equivariant hom), if any.
/// Throws ShapeMismatch for different M or Q, SearchSpaceTooLarge.
std::optional<std::vector<Elem>> are_equivalent(const GammaModuleExtension& a, const GammaModuleExtension& b,
                                                std::uint64_t guard = kDefaultGuard, Exec exec = Exec::Parallel);

/// Every crossed product B x_f Q of type M inducing psi, over all f in Z^2(Q,B)
/// and every admissible object map; ordered by (f, objects).
std::vector<GammaModuleExtension> enumerate_extensions(const ValidatedModule& m, const GammaModule& q,
                                                       const std::vector<Elem>& psi,
                                                       std::uint64_t guard = kDefaultGuard,
                                                       Exec exec = Exec::Parallel);

/// Indices of the class representatives and the class of each extension.
struct ExtensionClasses {
  std::vector<int> class_of;
  std::vector<int> representatives;
  std::size_t class_count() const { return representatives.size(); }
};

ExtensionClasses extension_classes(const std::vector<GammaModuleExtension>& exts, std::uint64_t guard = kDefaultGuard,
                                   Exec exec = Exec::Parallel);

struct SchreierReport {
  std::size_t functor_classes = 0;
  std::size_t extension_classes = 0;
  std::size_t functors = 0;
  std::size_t extensions = 0;
  AxiomReport checks;  // omega_well_defined, omega_injective, omega_surjective,
                       // equivalence_implies_homotopy, round_trip, induces_psi
  bool ok() const { return checks.all_pass() && functor_classes == extension_classes; }
};

/// Homotopy classes of type-(psi,0) functors Dis Q -> G_M against
/// equivalence classes of extensions inducing psi.
SchreierReport schreier_bijection_check(const ValidatedModule& m, const GammaModule& q, const std::vector<Elem>& psi,
                                        std::uint64_t guard = kDefaultGuard, Exec exec = Exec::Parallel);

struct Classification {
  bool obstructed = false;
  std::vector<long> h2_invariants;
  std::size_t class_count = 0;
  std::vector<GammaModuleExtension> representatives;
  /// Classes found by exhaustive enumeration, or -1 when it exceeded the guard.
  long enumerated_count = -1;
};

/// Obstruction psi* h for the reduced model of G_M; when it vanishes, one
/// extension per class of H^2(Q, Ker d). Throws SearchSpaceTooLarge.
Classification classify(const ValidatedModule& m, const GammaModule& q, const std::vector<Elem>& psi,
                        std::uint64_t guard = kDefaultGuard, Exec exec = Exec::Parallel);

}  // namespace xmodcat
