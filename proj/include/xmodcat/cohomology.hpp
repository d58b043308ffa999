#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xmodcat/abelian.hpp"
#include "xmodcat/cochain.hpp"
#include "xmodcat/exec.hpp"
#include "xmodcat/report.hpp"

namespace xmodcat {

// -- degree 2 ---------------------------------------------------------------

/// Checks the four identity families on f:
///   grade:     tau f(x,sigma) + f(sigma x,tau) = f(x,tau sigma)
///   action:    sigma f(x,y) + f(x+y,sigma) = f(x,sigma) + f(y,sigma) + f(sigma x,sigma y)
///   assoc:     f(y,z) + f(x,y+z) = f(x,y) + f(x+y,z)
///   symmetry:  f(x,y) = f(y,x)
/// Witnesses are (family, args...) with family 0..3 in the order above.
AxiomCheck cocycle_check(const SymmetricCochain2& f);

struct CocycleVerdict {
  bool ok = true;
  std::string identity;  // empty when ok
  Witness witness;
  explicit operator bool() const { return ok; }
};

/// First failing identity (lexicographically least witness), if any.
CocycleVerdict is_2cocycle(const SymmetricCochain2& f);

/// delta g(u,v) = g(u)+g(v)-g(u+v), delta g(u,sigma) = sigma g(u) - g(sigma u).
/// Throws NotNormalized when g(0) != 0.
SymmetricCochain2 coboundary2(const Cochain1& g);

SymmetricCochain2 operator+(const SymmetricCochain2& f, const SymmetricCochain2& g);
SymmetricCochain2 operator-(const SymmetricCochain2& f, const SymmetricCochain2& g);

/// Number of free (normalized) entries of a 2-cochain on q.
std::size_t free_entries(const GammaModule& q);

/// All normalized cocycles Q -> B in lexicographic order of their free
/// entries. Throws SearchSpaceTooLarge when |B|^free_entries exceeds guard.
std::vector<SymmetricCochain2> enumerate_2cocycles(const GammaModule& q, const GammaModule& b,
                                                   std::uint64_t guard = kDefaultGuard, Exec exec = Exec::Parallel);

/// H^2 via Smith normal form: cocycle identities as an integer system over
/// the invariant-factor coordinates of B.
class H2Linear {
 public:
  H2Linear(const GammaModule& q, const GammaModule& b);

  const std::vector<long>& invariants() const { return invariants_; }
  long order() const { return product_of(invariants_); }
  /// Class coordinates of a cocycle. Throws NotWellDefined when f is not a cocycle.
  std::vector<long> coordinates(const SymmetricCochain2& f) const;
  /// A cocycle with the given class coordinates.
  SymmetricCochain2 cocycle(const std::vector<long>& coords) const;
  /// One cocycle per class, in mixed-radix order of coordinates.
  std::vector<SymmetricCochain2> representatives() const;

 private:
  std::vector<BigInt> to_vector(const SymmetricCochain2& f) const;
  SymmetricCochain2 from_vector(const std::vector<BigInt>& v) const;

  GammaModule q_, b_;
  FiniteAbelianGroup bgroup_;
  std::vector<long> invariants_;
  LatticeQuotient quotient_;
};

/// H^2 by exhaustive enumeration of cocycles and coboundaries.
struct H2Brute {
  std::vector<SymmetricCochain2> cocycles;      // Z^2, lexicographic
  std::vector<SymmetricCochain2> coboundaries;  // B^2, lexicographic, distinct
  std::vector<int> class_of;                    // per cocycle
  std::vector<int> representatives;             // per class: least cocycle index
  std::vector<long> invariants;                 // of Z^2/B^2, by element counting

  std::size_t class_count() const { return representatives.size(); }
  /// Class index of a cocycle; throws NotWellDefined for non-cocycles.
  int classify(const SymmetricCochain2& f) const;
};

H2Brute h2_brute(const GammaModule& q, const GammaModule& b, std::uint64_t guard = kDefaultGuard,
                 Exec exec = Exec::Parallel);

struct H2Result {
  std::vector<long> invariants;
  std::vector<SymmetricCochain2> representatives;
};

/// Linear path; representatives as in H2Linear::representatives().
H2Result h2(const GammaModule& q, const GammaModule& b);

/// Checks that SNF coordinates and brute-force classes describe the same
/// group: coordinates -> class is a bijective homomorphism. Empty on success,
/// otherwise a description of the first mismatch.
std::string h2_paths_agree(const H2Linear& lin, const H2Brute& brute);

// -- degree 3 ---------------------------------------------------------------

/// check_axioms of build_reduced(h).
AxiomReport three_cocycle_report(const Cochain3& h, Exec exec = Exec::Parallel);
bool is_3cocycle(const Cochain3& h, Exec exec = Exec::Parallel);

/// phi* h' over (M, h'.N) for an equivariant phi: M -> h'.M.
Cochain3 pullback3(const GammaModule& m, const std::vector<Elem>& phi, const Cochain3& h);
/// f_* h over (h.M, n) for an equivariant f: h.N -> n.
Cochain3 pushforward3(const GammaModule& n, const std::vector<Elem>& f, const Cochain3& h);
/// k = phi* h' - f_* h over (h.M, h'.N).
Cochain3 obstruction(const std::vector<Elem>& phi, const std::vector<Elem>& f, const Cochain3& h, const Cochain3& h2);
Cochain3 operator+(const Cochain3& a, const Cochain3& b);
Cochain3 operator-(const Cochain3& a, const Cochain3& b);

/// True iff some functor G(0) -> G(k) of type (id, id) exists, i.e. the
/// class of k vanishes. Throws SearchSpaceTooLarge.
bool class_vanishes(const Cochain3& k, std::uint64_t guard = kDefaultGuard, Exec exec = Exec::Parallel);

}  // namespace xmodcat
