#include "xmodcat/snf.hpp"

#include <utility>

#include "xmodcat/error.hpp"

namespace xmodcat {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<BigInt>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

std::vector<BigInt> IntMatrix::column(std::size_t j) const {
  std::vector<BigInt> c(rows);
  for (std::size_t i = 0; i < rows; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t last) const {
  IntMatrix m(rows, last - first);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = first; j < last; ++j) m(i, j - first) = (*this)(i, j);
  return m;
}

IntMatrix IntMatrix::top_rows(std::size_t count) const {
  IntMatrix m(count, cols);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*this)(i, j);
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw Error(ErrorKind::MatrixShapeMismatch, "product of incompatible matrices");
  IntMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::vector<BigInt> operator*(const IntMatrix& a, const std::vector<BigInt>& x) {
  if (a.cols != x.size()) throw Error(ErrorKind::MatrixShapeMismatch, "matrix-vector size mismatch");
  std::vector<BigInt> y(a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k)
      if (a(i, k) != 0 && x[k] != 0) y[i] += a(i, k) * x[k];
  return y;
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows != b.rows) throw Error(ErrorKind::MatrixShapeMismatch, "hconcat row mismatch");
  IntMatrix m(a.rows, a.cols + b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols; ++j) m(i, a.cols + j) = b(i, j);
  }
  return m;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  if (m == 0) return a;
  const BigInt am = abs(m);
  BigInt r = a % am;
  if (r < 0) r += am;
  return r;
}

std::vector<BigInt> SmithForm::diagonal() const {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(S.rows, S.cols); ++i) d.push_back(S(i, i));
  return d;
}

namespace {

class Reducer {
 public:
  explicit Reducer(const IntMatrix& a)
      : A(a), U(IntMatrix::identity(a.rows)), Ui(IntMatrix::identity(a.rows)),
        V(IntMatrix::identity(a.cols)), Vi(IntMatrix::identity(a.cols)) {}

  IntMatrix A, U, Ui, V, Vi;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < A.cols; ++c) std::swap(A(i, c), A(j, c));
    for (std::size_t c = 0; c < U.cols; ++c) std::swap(U(i, c), U(j, c));
    for (std::size_t r = 0; r < Ui.rows; ++r) std::swap(Ui(r, i), Ui(r, j));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < A.rows; ++r) std::swap(A(r, i), A(r, j));
    for (std::size_t r = 0; r < V.rows; ++r) std::swap(V(r, i), V(r, j));
    for (std::size_t c = 0; c < Vi.cols; ++c) std::swap(Vi(i, c), Vi(j, c));
  }
  // row_i += c * row_j
  void add_row(std::size_t i, std::size_t j, const BigInt& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < A.cols; ++k)
      if (A(j, k) != 0) A(i, k) += c * A(j, k);
    for (std::size_t k = 0; k < U.cols; ++k)
      if (U(j, k) != 0) U(i, k) += c * U(j, k);
    for (std::size_t r = 0; r < Ui.rows; ++r)
      if (Ui(r, i) != 0) Ui(r, j) -= c * Ui(r, i);
  }
  // col_j += c * col_i
  void add_col(std::size_t j, std::size_t i, const BigInt& c) {
    if (c == 0) return;
    for (std::size_t r = 0; r < A.rows; ++r)
      if (A(r, i) != 0) A(r, j) += c * A(r, i);
    for (std::size_t r = 0; r < V.rows; ++r)
      if (V(r, i) != 0) V(r, j) += c * V(r, i);
    for (std::size_t k = 0; k < Vi.cols; ++k)
      if (Vi(j, k) != 0) Vi(i, k) -= c * Vi(j, k);
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < A.cols; ++k) A(i, k) = -A(i, k);
    for (std::size_t k = 0; k < U.cols; ++k) U(i, k) = -U(i, k);
    for (std::size_t r = 0; r < Ui.rows; ++r) Ui(r, i) = -Ui(r, i);
  }

  // Moves the smallest nonzero entry of the trailing block to (t,t).
  bool pivot(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < A.rows; ++i)
      for (std::size_t j = t; j < A.cols; ++j)
        if (A(i, j) != 0 && (!found || abs(A(i, j)) < best)) {
          best = abs(A(i, j));
          bi = i;
          bj = j;
          found = true;
          if (best == 1) goto done;
        }
  done:
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void run(std::size_t& rank) {
    const std::size_t lim = std::min(A.rows, A.cols);
    for (std::size_t t = 0; t < lim; ++t) {
      if (!pivot(t)) break;
      while (true) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < A.rows; ++i) {
          if (A(i, t) == 0) continue;
          add_row(i, t, -BigInt(A(i, t) / A(t, t)));
          if (A(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < A.cols; ++j) {
          if (A(t, j) == 0) continue;
          add_col(j, t, -BigInt(A(t, j) / A(t, t)));
          if (A(t, j) != 0) dirty = true;
        }
        if (dirty) {
          pivot(t);
          continue;
        }
        // Enforce divisibility of the trailing block by the pivot.
        bool fixed = false;
        for (std::size_t i = t + 1; i < A.rows && !fixed; ++i)
          for (std::size_t j = t + 1; j < A.cols; ++j)
            if (A(i, j) != 0 && A(i, j) % A(t, t) != 0) {
              add_row(t, i, 1);
              fixed = true;
              break;
            }
        if (!fixed) break;
      }
      if (A(t, t) < 0) negate_row(t);
      ++rank;
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  Reducer r(a);
  SmithForm f;
  r.run(f.rank);
  f.S = std::move(r.A);
  f.U = std::move(r.U);
  f.Uinv = std::move(r.Ui);
  f.V = std::move(r.V);
  f.Vinv = std::move(r.Vi);
  return f;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const SmithForm f = smith_normal_form(a);
  return f.V.columns(f.rank, a.cols);
}

IntMatrix column_basis(const IntMatrix& a) {
  const SmithForm f = smith_normal_form(a);
  return (a * f.V).columns(0, f.rank);
}

namespace {

std::optional<std::vector<BigInt>> solve_with(const SmithForm& f, const IntMatrix& k, const std::vector<BigInt>& x) {
  const std::vector<BigInt> ux = f.U * x;
  std::vector<BigInt> z(k.cols);
  for (std::size_t i = 0; i < ux.size(); ++i) {
    if (i < k.cols) {
      if (ux[i] % f.S(i, i) != 0) return std::nullopt;
      z[i] = ux[i] / f.S(i, i);
    } else if (ux[i] != 0) {
      return std::nullopt;
    }
  }
  return f.V * z;
}

}  // namespace

std::optional<std::vector<BigInt>> solve_in_lattice(const IntMatrix& k, const std::vector<BigInt>& x) {
  const SmithForm f = smith_normal_form(k);
  if (f.rank != k.cols) throw Error(ErrorKind::MatrixShapeMismatch, "lattice basis is not of full column rank");
  return solve_with(f, k, x);
}

LatticeQuotient lattice_quotient(const IntMatrix& k, const IntMatrix& w) {
  if (k.rows != w.rows) throw Error(ErrorKind::MatrixShapeMismatch, "lattice and sublattice differ in ambient rank");
  const SmithForm kf = smith_normal_form(k);
  if (kf.rank != k.cols) throw Error(ErrorKind::MatrixShapeMismatch, "lattice basis is not of full column rank");
  // Y = K^-1 W
  IntMatrix y(k.cols, w.cols);
  for (std::size_t j = 0; j < w.cols; ++j) {
    const std::vector<BigInt> uw = kf.U * w.column(j);
    for (std::size_t i = 0; i < uw.size(); ++i) {
      if (i < k.cols) {
        if (uw[i] % kf.S(i, i) != 0)
          throw Error(ErrorKind::NotWellDefined, "sublattice generator outside the lattice");
      } else if (uw[i] != 0) {
        throw Error(ErrorKind::NotWellDefined, "sublattice generator outside the lattice");
      }
    }
    std::vector<BigInt> z(k.cols);
    for (std::size_t i = 0; i < k.cols; ++i) z[i] = uw[i] / kf.S(i, i);
    const std::vector<BigInt> col = kf.V * z;
    for (std::size_t i = 0; i < k.cols; ++i) y(i, j) = col[i];
  }
  const SmithForm yf = smith_normal_form(y);
  LatticeQuotient q;
  q.basis = k;
  q.basis_snf = std::make_shared<const SmithForm>(kf);
  const IntMatrix lifts = k * yf.Uinv;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < k.cols; ++i) {
    const BigInt s = i < std::min(yf.S.rows, yf.S.cols) ? yf.S(i, i) : BigInt(0);
    if (s == 1) continue;
    keep.push_back(i);
    q.invariants.push_back(s);
  }
  q.generators = IntMatrix(k.rows, keep.size());
  q.to_snf_basis = IntMatrix(keep.size(), k.cols);
  for (std::size_t g = 0; g < keep.size(); ++g) {
    for (std::size_t r = 0; r < k.rows; ++r) q.generators(r, g) = lifts(r, keep[g]);
    for (std::size_t c = 0; c < k.cols; ++c) q.to_snf_basis(g, c) = yf.U(keep[g], c);
  }
  return q;
}

std::vector<BigInt> LatticeQuotient::coordinates(const std::vector<BigInt>& x) const {
  auto y = solve_with(*basis_snf, basis, x);
  if (!y) throw Error(ErrorKind::NotWellDefined, "vector is not in the lattice");
  std::vector<BigInt> c = to_snf_basis * *y;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_floor(c[i], invariants[i]);
  return c;
}

}  // namespace xmodcat
