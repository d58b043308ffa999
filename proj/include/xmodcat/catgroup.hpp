#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "xmodcat/cochain.hpp"
#include "xmodcat/crossed_module.hpp"
#include "xmodcat/exec.hpp"
#include "xmodcat/group.hpp"
#include "xmodcat/report.hpp"

namespace xmodcat {

using MorId = int;

struct Morphism {
  Elem src = 0;
  Elem dst = 0;
  Elem payload = 0;
  Elem grade = 0;
  friend bool operator==(const Morphism&, const Morphism&) = default;
  friend auto operator<=>(const Morphism&, const Morphism&) = default;
};

/// A finite braided Gamma-graded monoidal groupoid given by explicit tables.
/// Morphisms are identified by (src, dst, payload, grade); composition and
/// tensor are precomputed (-1 where undefined).
struct GradedCatGroup {
  FiniteGroup gamma;
  int objects = 0;
  int payloads = 1;  // payload values range over 0..payloads-1
  std::vector<Morphism> morphisms;
  std::vector<MorId> compose_table;  // g o f at f*|Mor|+g (f first), -1 if f.dst != g.src
  std::vector<MorId> tensor_table;   // f (x) g at f*|Mor|+g, -1 if grades differ
  std::vector<Elem> object_tensor;   // x (x) y at x*objects+y
  Elem unit = 0;
  std::vector<MorId> identities;  // per object
  std::vector<MorId> assoc;       // a_{x,y,z}: (xy)z -> x(yz)
  std::vector<MorId> left_unit;   // l_x: I x -> x
  std::vector<MorId> right_unit;  // r_x: x I -> x
  std::vector<MorId> braiding;    // c_{x,y}: xy -> yx
  std::vector<MorId> unit_functor;  // I(sigma): I -> I
  /// Optional grade-sigma lifts recorded by the builder, x*|Gamma|+sigma.
  std::vector<MorId> lifts;

  int size() const { return static_cast<int>(morphisms.size()); }
  int ng() const { return gamma.order(); }
  const Morphism& mor(MorId f) const { return morphisms[f]; }
  MorId comp(MorId f, MorId g) const { return compose_table[static_cast<std::size_t>(f) * size() + g]; }
  MorId tens(MorId f, MorId g) const { return tensor_table[static_cast<std::size_t>(f) * size() + g]; }
  Elem otens(Elem x, Elem y) const { return object_tensor[static_cast<std::size_t>(x) * objects + y]; }
  MorId id(Elem x) const { return identities[x]; }
  MorId a(Elem x, Elem y, Elem z) const { return assoc[(static_cast<std::size_t>(x) * objects + y) * objects + z]; }
  MorId c(Elem x, Elem y) const { return braiding[static_cast<std::size_t>(x) * objects + y]; }
  MorId lift(Elem x, Elem sigma) const { return lifts[static_cast<std::size_t>(x) * ng() + sigma]; }
  bool has_lifts() const { return !lifts.empty(); }

  /// Index of the morphism with the given record, or -1.
  MorId find(const Morphism& m) const;
  /// Inverse morphism, or -1.
  MorId inverse(MorId f) const { return f < 0 ? -1 : inverses_[f]; }
  /// All morphisms x -> y of the given grade, in index order.
  std::vector<MorId> homs(Elem x, Elem y, Elem grade) const;

  /// Sorts the record list, builds the lookup index and fills tables from
  /// the supplied composition and tensor rules (-1 means undefined).
  template <class Compose, class Tensor>
  void finalize(Compose&& compose, Tensor&& tensor);

  friend bool operator==(const GradedCatGroup& a, const GradedCatGroup& b) {
    return a.gamma == b.gamma && a.objects == b.objects && a.payloads == b.payloads && a.morphisms == b.morphisms &&
           a.compose_table == b.compose_table && a.tensor_table == b.tensor_table &&
           a.object_tensor == b.object_tensor && a.unit == b.unit && a.identities == b.identities &&
           a.assoc == b.assoc && a.left_unit == b.left_unit && a.right_unit == b.right_unit &&
           a.braiding == b.braiding && a.unit_functor == b.unit_functor && a.lifts == b.lifts;
  }

  /// Fills the inverse table; builders call this after setting identities.
  void index_inverses();

  std::vector<MorId> index_;     // dense (src,dst,payload,grade) -> id
  std::vector<MorId> inverses_;  // per morphism, -1 when none
};

/// The category of a braided Gamma-crossed module: objects D, morphisms
/// (b,sigma): x -> y with sigma x = d(b) y.
GradedCatGroup build_catgroup(const ValidatedModule& m);

namespace detail {
/// Builds the tables from unvalidated data (for mutation testing); entries
/// that do not type-check become -1 rather than errors.
GradedCatGroup build_catgroup_unchecked(const BraidedGammaCrossedModule& m);
}  // namespace detail

/// The reduced model with objects M and morphisms (a,sigma): r -> sigma r, a in N.
GradedCatGroup build_reduced(const Cochain3& h);
/// Dis Q: build_reduced(Q, 0, 0).
GradedCatGroup discrete_catgroup(const GammaModule& q);

/// Checks every axiom family; see README for the list.
AxiomReport check_axioms(const GradedCatGroup& g, Exec exec = Exec::Parallel);

/// The grade-1 part with Gamma replaced by the trivial group.
GradedCatGroup ker(const GradedCatGroup& g);

/// A graded monoidal functor given by tables: object map, morphism map,
/// F~_{x,y}: Fx Fy -> F(xy) at x*|Ob|+y, and F_*: I' -> F I. Functors on
/// Ker G leave non-grade-1 morphisms at -1.
struct GradedFunctor {
  std::vector<Elem> obj;
  std::vector<MorId> mor;
  std::vector<MorId> ftilde;
  MorId fstar = -1;

  MorId ft(Elem x, Elem y) const { return ftilde[static_cast<std::size_t>(x) * obj.size() + y]; }
  friend bool operator==(const GradedFunctor&, const GradedFunctor&) = default;
};

/// Functoriality, grade preservation, naturality of F~ and the coherence
/// conditions with a, l, r, c and the unit functor.
AxiomReport check_graded_functor(const GradedFunctor& f, const GradedCatGroup& src, const GradedCatGroup& dst,
                                 Exec exec = Exec::Parallel);

GradedFunctor identity_functor(const GradedCatGroup& g);

struct FactorSet {
  std::vector<GradedFunctor> F;          // per sigma, on Ker G
  std::vector<std::vector<MorId>> theta;  // per (sigma*|Gamma|+tau), per object: F^s F^t x -> F^{st} x
  friend bool operator==(const FactorSet&, const FactorSet&) = default;
};

/// Factor set from chosen lifts (x*|Gamma|+sigma -> grade-sigma morphism out
/// of x, identity for sigma = 1). Throws BadChoice.
FactorSet extract_factor_set(const GradedCatGroup& g, const std::vector<MorId>& lifts);

/// Definition-level checks: F1_identity, theta_unit, F_monoidal (per sigma),
/// theta_natural, theta_monoidal, cocycle.
AxiomReport check_factor_set(const GradedCatGroup& g, const FactorSet& fs);

/// True when every F^sigma is regular and every theta is an identity.
bool is_regular_factor_set(const GradedCatGroup& g, const FactorSet& fs);

/// Inverse construction. Requires recorded lifts. Throws NotStrict,
/// NotRegularFactorSet, NotValidated.
ValidatedModule catgroup_to_crossed(const GradedCatGroup& g);

/// Data for transporting a categorical group to its reduced model.
struct ReductionChoices {
  GammaModule M;                // pi0 as a Gamma-module
  GammaModule N;                // pi1 as a Gamma-module
  std::vector<Elem> rep;        // per r in M: representative object X_r
  std::vector<MorId> unit_aut;  // per a in N: grade-1 automorphism of I
  std::vector<MorId> beta;      // per (r,sigma): X_r -> X_{sigma r}, grade sigma
  std::vector<MorId> lambda;    // per (r,s): X_r X_s -> X_{r+s}, grade 1
};

/// Canonical least choices for build_catgroup(m) indexed by pi0/pi1 of m.
ReductionChoices canonical_choices(const ValidatedModule& m, const GradedCatGroup& g);

/// The 3-cochain h with G(h) equivalent to G via the choices. Throws BadChoice.
Cochain3 reduce(const GradedCatGroup& g, const ReductionChoices& ch);

}  // namespace xmodcat

#include "xmodcat/catgroup_impl.hpp"
