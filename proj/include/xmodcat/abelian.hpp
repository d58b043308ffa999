#pragma once

#include <vector>

#include "xmodcat/group.hpp"
#include "xmodcat/snf.hpp"

namespace xmodcat {

/// A commutative FiniteGroup together with an invariant-factor basis:
/// generators g_1..g_k of orders d_1 | d_2 | ... | d_k (all > 1) such that
/// every element is uniquely sum c_i g_i with 0 <= c_i < d_i.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() : FiniteAbelianGroup(FiniteGroup()) {}
  /// Throws WrongType when g is not commutative.
  explicit FiniteAbelianGroup(FiniteGroup g);

  const FiniteGroup& group() const { return group_; }
  int order() const { return group_.order(); }
  const std::vector<long>& invariants() const { return invariants_; }
  const std::vector<Elem>& generators() const { return generators_; }
  std::size_t rank() const { return invariants_.size(); }

  const std::vector<long>& coordinates(Elem x) const { return coords_[x]; }
  /// Element with the given coordinates (reduced modulo the invariants).
  Elem element(const std::vector<long>& coords) const;

 private:
  FiniteGroup group_;
  std::vector<long> invariants_;
  std::vector<Elem> generators_;
  std::vector<std::vector<long>> coords_;
  std::vector<Elem> by_index_;  // mixed-radix coordinate index -> element
};

/// Invariant factors d_1 | ... | d_k of a finite abelian group (trivial -> []).
std::vector<long> abelian_invariants(const FiniteGroup& a);

/// Independent route: counts |A[p^k]| for every prime p and rebuilds the
/// invariant factors from the elementary divisors.
std::vector<long> abelian_invariants_by_counting(const FiniteGroup& a);

/// Kernel and image of a homomorphism between Z/a_1 x ... x Z/a_m and
/// Z/b_1 x ... x Z/b_n, given by the n x m matrix whose column i is the image
/// of the i-th domain generator.
struct KernelImage {
  std::vector<long> kernel_invariants;
  /// Generator lifts in domain coordinates (m x k), reduced mod a.
  IntMatrix kernel_generators;
  std::vector<long> image_invariants;
  /// Generators in codomain coordinates (n x l), reduced mod b.
  IntMatrix image_generators;
};

KernelImage hom_kernel_image(const std::vector<long>& domain, const std::vector<long>& codomain,
                             const IntMatrix& matrix);

/// Number of elements of a group given by invariants.
long product_of(const std::vector<long>& invariants);

}  // namespace xmodcat
