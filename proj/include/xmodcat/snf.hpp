#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace xmodcat {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  static IntMatrix identity(std::size_t n);
  /// Diagonal n x n matrix from the given entries.
  static IntMatrix diagonal(const std::vector<BigInt>& d);

  BigInt& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  std::vector<BigInt> column(std::size_t j) const;
  IntMatrix columns(std::size_t first, std::size_t last) const;
  IntMatrix top_rows(std::size_t count) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<BigInt> operator*(const IntMatrix& a, const std::vector<BigInt>& x);
/// [a | b]
IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);

/// U * A * V = S with U, V unimodular, S diagonal with s_1 | s_2 | ... and
/// nonnegative entries. Inverses of U and V are kept alongside.
struct SmithForm {
  IntMatrix S, U, Uinv, V, Vinv;
  std::size_t rank = 0;
  std::vector<BigInt> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Basis (as columns) of the integer kernel {x : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Basis (as columns) of the lattice spanned by the columns of A.
IntMatrix column_basis(const IntMatrix& a);

/// Solves K y = x exactly for K of full column rank; nullopt if x is not in
/// the lattice spanned by K.
std::optional<std::vector<BigInt>> solve_in_lattice(const IntMatrix& k, const std::vector<BigInt>& x);

/// L / L' where L is spanned by the columns of K (full column rank) and L' by
/// the columns of W (all inside L). Trivial factors are dropped; a free
/// factor is reported with invariant 0.
struct LatticeQuotient {
  std::vector<BigInt> invariants;
  /// Lifts in ambient coordinates, one column per invariant.
  IntMatrix generators;
  /// Coordinates of an element of L in the quotient basis (reduced mod each
  /// invariant). Throws NotWellDefined if x is not in L.
  std::vector<BigInt> coordinates(const std::vector<BigInt>& x) const;

  IntMatrix basis;         // K
  IntMatrix to_snf_basis;  // rows of U kept for the nontrivial factors
  std::shared_ptr<const SmithForm> basis_snf;
};

LatticeQuotient lattice_quotient(const IntMatrix& k, const IntMatrix& w);

/// Euclidean remainder in [0, |m|) (returns a when m == 0).
BigInt mod_floor(const BigInt& a, const BigInt& m);

}  // namespace xmodcat
