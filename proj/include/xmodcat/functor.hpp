#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "xmodcat/catgroup.hpp"
#include "xmodcat/crossed_module.hpp"
#include "xmodcat/exec.hpp"
#include "xmodcat/report.hpp"

namespace xmodcat {

/// Regularity for a functor between categories with recorded lifts: strict on
/// object tensor and on grade-1 tensor, F~ symmetric in payload, and
/// compatible with the Gamma-actions read off the lifts.
bool is_regular(const GradedFunctor& f, const GradedCatGroup& src, const GradedCatGroup& dst);

/// The functor of a crossed-module morphism between build_catgroup(src) and
/// build_catgroup(dst): F(b,sigma) = (phi(px,sigma) + f1 b, sigma),
/// F~_{x,y} = (phi(px,py),1), F_* = id.
GradedFunctor morphism_to_functor(const CrossedMorphism& m, const ValidatedModule& src, const ValidatedModule& dst,
                                  const GradedCatGroup& gsrc, const GradedCatGroup& gdst);

/// Inverse of morphism_to_functor. Throws NotCoherent, NotRegular,
/// FNotConstantOnCosets.
CrossedMorphism functor_to_morphism(const GradedFunctor& f, const ValidatedModule& src, const ValidatedModule& dst,
                                    const GradedCatGroup& gsrc, const GradedCatGroup& gdst);

/// theta per source object, theta_X: F X -> F' X of grade 1. Checks
/// theta_typing, theta_natural, theta_monoidal, theta_unit.
AxiomReport homotopy_report(const std::vector<MorId>& theta, const GradedFunctor& f, const GradedFunctor& g,
                            const GradedCatGroup& src, const GradedCatGroup& dst, Exec exec = Exec::Parallel);
bool is_homotopy(const std::vector<MorId>& theta, const GradedFunctor& f, const GradedFunctor& g,
                 const GradedCatGroup& src, const GradedCatGroup& dst, Exec exec = Exec::Parallel);

/// The functor obtained from f by conjugating with theta.
GradedFunctor transport(const GradedFunctor& f, const std::vector<MorId>& theta, const GradedCatGroup& src,
                        const GradedCatGroup& dst);

/// Filter for the functor search: admissible F(x) per source object and the
/// prescribed map on grade-1 automorphisms of the unit (indexed by source
/// morphism id, -1 elsewhere).
struct FunctorType {
  std::vector<std::vector<Elem>> object_candidates;
  std::vector<MorId> unit_auto_map;
};

/// Type (phi, f) between reduced models: F(r) = phi(r), F(a,1)_0 = (f a,1)_0.
FunctorType reduced_type(const GradedCatGroup& src, const GradedCatGroup& dst, const std::vector<Elem>& phi,
                         const std::vector<Elem>& f);
/// Type (psi, 0) from Dis Q into build_catgroup(m): F(u) ranges over the
/// coset psi(u) of Coker d.
FunctorType discrete_type(const GradedCatGroup& dis, const ValidatedModule& m, const GradedCatGroup& g,
                          const std::vector<Elem>& psi);

struct HomotopyClasses {
  std::vector<GradedFunctor> functors;  // normalized: F(I) = I', F_* = id
  std::vector<int> class_of;            // per functor
  std::vector<int> representatives;     // per class, least functor index
  std::uint64_t late_rejections = 0;    // candidates that passed the search but failed the full check

  std::size_t class_count() const { return representatives.size(); }
};

/// Exhaustive search over coherent functors src -> dst of the given type,
/// grouped by homotopy. The source must be skeletal with recorded lifts and
/// strict unitors. Throws SearchSpaceTooLarge, WrongType.
HomotopyClasses homotopy_classes(const GradedCatGroup& src, const GradedCatGroup& dst, const FunctorType& type,
                                 std::uint64_t guard = kDefaultGuard, Exec exec = Exec::Parallel);

/// First functor of the search, if any.
std::optional<GradedFunctor> find_functor(const GradedCatGroup& src, const GradedCatGroup& dst, const FunctorType& type,
                                          std::uint64_t guard = kDefaultGuard, Exec exec = Exec::Parallel);

}  // namespace xmodcat
