#pragma once

#include <memory>
#include <vector>

#include "xmodcat/abelian.hpp"
#include "xmodcat/cochain.hpp"
#include "xmodcat/group.hpp"
#include "xmodcat/report.hpp"

namespace xmodcat {

/// Raw data (B, D, d, theta, eta) with Gamma-actions on B and D. B is written
/// additively and D multiplicatively in reports, but both use the index
/// tables of FiniteGroup.
struct BraidedGammaCrossedModule {
  FiniteGroup B;
  FiniteGroup D;
  std::vector<Elem> d;      // |B|
  std::vector<Elem> theta;  // theta_x(b) at x*|B|+b
  std::vector<Elem> eta;    // eta(x,y) at x*|D|+y, values in B
  FiniteGroup gamma;
  std::vector<Elem> act_b;  // sigma b at sigma*|B|+b
  std::vector<Elem> act_d;  // sigma x at sigma*|D|+x

  int nb() const { return B.order(); }
  int nd() const { return D.order(); }
  int ng() const { return gamma.order(); }

  Elem dm(Elem b) const { return d[b]; }
  Elem th(Elem x, Elem b) const { return theta[static_cast<std::size_t>(x) * nb() + b]; }
  Elem et(Elem x, Elem y) const { return eta[static_cast<std::size_t>(x) * nd() + y]; }
  Elem sb(Elem sigma, Elem b) const { return act_b[static_cast<std::size_t>(sigma) * nb() + b]; }
  Elem sd(Elem sigma, Elem x) const { return act_d[static_cast<std::size_t>(sigma) * nd() + x]; }

  GroupHom d_hom() const { return {B, D, d}; }
  GammaAction action_b() const { return {gamma, B, act_b}; }
  GammaAction action_d() const { return {gamma, D, act_d}; }

  friend bool operator==(const BraidedGammaCrossedModule&, const BraidedGammaCrossedModule&) = default;
};

/// Per-axiom report. Structural checks: d_hom, theta_hom, gamma_action_B,
/// gamma_action_D, d_equivariant; axioms C1..C7, Gamma1, Gamma2; derived
/// consequences eta_unit, ker_central, coker_abelian, ker_fixed_by_theta.
/// Throws ShapeMismatch when table sizes or entries are out of range.
AxiomReport validate(const BraidedGammaCrossedModule& m);

/// A module that passed validate(), with its homotopy groups cached.
class ValidatedModule {
 public:
  /// Throws NotValidated (listing failing axioms) when validation fails.
  explicit ValidatedModule(BraidedGammaCrossedModule m);

  const BraidedGammaCrossedModule& operator*() const { return impl_->module; }
  const BraidedGammaCrossedModule* operator->() const { return &impl_->module; }
  const BraidedGammaCrossedModule& module() const { return impl_->module; }

  /// Ker d as an increasing element list of B.
  const ElemSet& ker_d() const { return impl_->ker; }
  /// D / Im d; cosets indexed by least member.
  const Quotient& coker_d() const { return impl_->coker; }
  /// pi0 = Coker d and pi1 = Ker d as Gamma-modules. pi1 elements are
  /// positions in ker_d().
  const GammaModule& pi0() const { return impl_->pi0; }
  const GammaModule& pi1() const { return impl_->pi1; }
  /// Position of b in ker_d(), or -1.
  Elem ker_index(Elem b) const { return impl_->ker_pos[b]; }

  friend bool operator==(const ValidatedModule& a, const ValidatedModule& b) { return a.module() == b.module(); }

 private:
  struct Impl {
    BraidedGammaCrossedModule module;
    ElemSet ker;
    std::vector<Elem> ker_pos;
    Quotient coker;
    GammaModule pi0;
    GammaModule pi1;
  };
  std::shared_ptr<const Impl> impl_;
};

/// (N, G, inclusion, conjugation, commutator) with the Gamma-action of g_action
/// restricted to N. Throws NotNormal, QuotientNotAbelian, NotGammaStable.
ValidatedModule conjugation_module(const GammaAction& g_action, const ElemSet& n);
ValidatedModule conjugation_module(const FiniteGroup& g, const ElemSet& n);

/// Abelian Gamma-crossed module (theta = 0, eta = 0) from Gamma-modules and an
/// equivariant homomorphism.
BraidedGammaCrossedModule abelian_module(const GammaModule& b, const GammaModule& d, const std::vector<Elem>& dmap);

/// Like abelian_module but with a supplied eta table (theta trivial).
BraidedGammaCrossedModule module_with_eta(const GammaModule& b, const GammaModule& d, const std::vector<Elem>& dmap,
                                          const std::vector<Elem>& eta);

GammaModule pi0(const ValidatedModule& m);
GammaModule pi1(const ValidatedModule& m);
bool is_symmetric(const BraidedGammaCrossedModule& m);
bool is_abelian(const BraidedGammaCrossedModule& m);

/// (f1, f0, phi) with phi a symmetric 2-cochain on (Coker d, Ker d') whose
/// values are positions in Ker d'.
struct CrossedMorphism {
  std::vector<Elem> f1;  // B -> B'
  std::vector<Elem> f0;  // D -> D'
  SymmetricCochain2 phi;

  friend bool operator==(const CrossedMorphism&, const CrossedMorphism&) = default;
};

/// Checks: f1_hom, f0_hom, f1_equivariant, f0_equivariant, H1, H2, H3,
/// phi_shape, phi_normalized, phi_cocycle.
AxiomReport validate_morphism(const CrossedMorphism& f, const ValidatedModule& src, const ValidatedModule& dst);

/// Map Coker d -> Coker d' induced by f0.
std::vector<Elem> induced_on_coker(const std::vector<Elem>& f0, const ValidatedModule& src, const ValidatedModule& dst);
/// Map Ker d -> Ker d' (positions) induced by f1.
std::vector<Elem> induced_on_ker(const std::vector<Elem>& f1, const ValidatedModule& src, const ValidatedModule& dst);

CrossedMorphism identity_morphism(const ValidatedModule& m);

/// (f1'f1, f0'f0, f1'_* phi + f0^* phi'). Throws NotComposable.
CrossedMorphism compose_morphisms(const CrossedMorphism& second, const CrossedMorphism& first, const ValidatedModule& a,
                                  const ValidatedModule& b, const ValidatedModule& c);

/// All morphisms src -> dst: every Gamma-equivariant (f1, f0) satisfying
/// H1-H3 paired with every symmetric 2-cocycle phi. Throws SearchSpaceTooLarge
/// when the candidate count exceeds guard.
std::vector<CrossedMorphism> enumerate_morphisms(const ValidatedModule& src, const ValidatedModule& dst,
                                                 std::uint64_t guard);

}  // namespace xmodcat
