#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace xmodcat {

/// Element of a finite group, addressed by its index in the multiplication table.
using Elem = int;
/// Sorted, duplicate-free list of element indices.
using ElemSet = std::vector<Elem>;

/// A finite group given by its multiplication table. The identity is always
/// index 0. Values are immutable and cheap to copy (the table is shared).
class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup();

  /// Validates a square table: closure, identity at index 0, inverses,
  /// associativity (checked in that order; the first witness is reported).
  static FiniteGroup from_table(const std::vector<std::vector<Elem>>& rows);

  int order() const { return n_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return (*inverse_)[a]; }
  Elem pow(Elem a, long k) const;
  /// x y x^-1 y^-1
  Elem commutator(Elem x, Elem y) const;
  Elem conjugate(Elem x, Elem b) const { return mul(mul(x, b), inv(x)); }
  int element_order(Elem a) const;
  bool is_abelian() const { return abelian_; }

  std::vector<std::vector<Elem>> rows() const;
  std::span<const Elem> table() const { return {table_.data(), table_.size()}; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.n_ == b.n_ && (a.inverse_ == b.inverse_ || a.table_ == b.table_);
  }

 private:
  FiniteGroup(int n, std::vector<Elem> table);

  int n_ = 1;
  std::vector<Elem> table_;
  std::shared_ptr<const std::vector<Elem>> inverse_;
  bool abelian_ = true;
};

/// A map between finite groups given by an element table.
struct GroupHom {
  FiniteGroup domain;
  FiniteGroup codomain;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }
  friend bool operator==(const GroupHom&, const GroupHom&) = default;
};

/// A left action of gamma on target by automorphisms, act[sigma][x].
struct GammaAction {
  FiniteGroup gamma;
  FiniteGroup target;
  std::vector<Elem> act;

  Elem operator()(Elem sigma, Elem x) const {
    return act[static_cast<std::size_t>(sigma) * target.order() + x];
  }
  std::vector<std::vector<Elem>> rows() const;
  friend bool operator==(const GammaAction&, const GammaAction&) = default;
};

/// A Gamma-module: a Gamma-action on an abelian group (written additively).
using GammaModule = GammaAction;

// -- construction ---------------------------------------------------------

FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
FiniteGroup klein_four_group();
/// Closure of a set of permutations (given as images of 0..k-1) under
/// composition, indexed in breadth-first discovery order from the identity.
FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& generators);
FiniteGroup symmetric_group3();
FiniteGroup dihedral_group(int n);  // order 2n
FiniteGroup quaternion_group();
/// Product of cyclic groups Z/d1 x Z/d2 x ...; element index is mixed radix
/// with the last factor varying fastest.
FiniteGroup abelian_group(const std::vector<long>& invariants);
/// Z<n>, V4, S3, Q8, D4, D<n>, trivial, and products joined by 'x' (e.g. "Z2xZ4").
FiniteGroup named_group(const std::string& name);

GroupHom identity_hom(const FiniteGroup& g);
GroupHom zero_hom(const FiniteGroup& from, const FiniteGroup& to);
GroupHom compose(const GroupHom& outer, const GroupHom& inner);
GammaAction trivial_action(const FiniteGroup& gamma, const FiniteGroup& target);
GammaAction make_action(const FiniteGroup& gamma, const FiniteGroup& target,
                        const std::vector<std::vector<Elem>>& rows);

// -- checks ---------------------------------------------------------------

bool check_hom(const GroupHom& f);
bool check_action(const GammaAction& a);
bool is_module(const GammaAction& a);
bool is_equivariant(const GroupHom& f, const GammaAction& on_domain, const GammaAction& on_codomain);

// -- subgroups ------------------------------------------------------------

ElemSet subgroup_generated(const FiniteGroup& g, const ElemSet& s);
ElemSet commutator_subgroup(const FiniteGroup& g);
ElemSet center(const FiniteGroup& g);
bool is_subgroup(const FiniteGroup& g, const ElemSet& s);
/// Returns a witness (x, n) with x n x^-1 outside s, or nullopt when s is normal.
std::optional<std::pair<Elem, Elem>> normality_witness(const FiniteGroup& g, const ElemSet& s);
bool is_normal(const FiniteGroup& g, const ElemSet& s);
bool is_gamma_stable(const GammaAction& a, const ElemSet& s);
ElemSet image_set(const GroupHom& f);
ElemSet kernel_set(const GroupHom& f);

struct Quotient {
  FiniteGroup group;
  GroupHom projection;
  std::vector<Elem> representatives;  // least member of each coset
};

/// G/N with cosets indexed by increasing least member. Throws NotNormal.
Quotient quotient(const FiniteGroup& g, const ElemSet& n);

struct Subgroup {
  FiniteGroup group;
  GroupHom inclusion;  // increasing element order
};

Subgroup subgroup_as_group(const FiniteGroup& g, const ElemSet& s);

/// Restricts a Gamma-action to a stable subgroup; throws NotGammaStable.
GammaAction restrict_action(const GammaAction& a, const Subgroup& s);
/// Induced action on a quotient by a stable normal subgroup.
GammaAction induced_action(const GammaAction& a, const Quotient& q);

// -- homomorphism search --------------------------------------------------

/// Greedy generating set: repeatedly adds the least element outside the
/// subgroup generated so far.
std::vector<Elem> generating_set(const FiniteGroup& g);
/// All homomorphisms g -> h, in lexicographic order of generator images.
std::vector<GroupHom> enumerate_homs(const FiniteGroup& g, const FiniteGroup& h);
std::vector<GroupHom> automorphisms(const FiniteGroup& g);
/// Backtracking over generator images; orders above 64 are rejected.
std::optional<GroupHom> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h);

}  // namespace xmodcat
