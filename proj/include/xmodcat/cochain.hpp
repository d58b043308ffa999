#pragma once

#include <vector>

#include "xmodcat/group.hpp"

namespace xmodcat {

/// Normalized function f on Q x Q and Q x Gamma with values in B, where Q and
/// B are Gamma-modules over the same Gamma (written additively).
struct SymmetricCochain2 {
  GammaModule Q;
  GammaModule B;
  std::vector<Elem> pairs;   // f(u,v) at u*|Q|+v
  std::vector<Elem> grades;  // f(u,sigma) at u*|Gamma|+sigma

  static SymmetricCochain2 zero(const GammaModule& q, const GammaModule& b);

  Elem operator()(Elem u, Elem v) const { return pairs[static_cast<std::size_t>(u) * Q.target.order() + v]; }
  Elem at_grade(Elem u, Elem sigma) const { return grades[static_cast<std::size_t>(u) * Q.gamma.order() + sigma]; }
  Elem& operator()(Elem u, Elem v) { return pairs[static_cast<std::size_t>(u) * Q.target.order() + v]; }
  Elem& at_grade(Elem u, Elem sigma) { return grades[static_cast<std::size_t>(u) * Q.gamma.order() + sigma]; }

  bool is_normalized() const;

  friend bool operator==(const SymmetricCochain2&, const SymmetricCochain2&) = default;
};

/// Degree-1 cochain g: Q -> B.
struct Cochain1 {
  GammaModule Q;
  GammaModule B;
  std::vector<Elem> values;

  Elem operator()(Elem u) const { return values[u]; }
  friend bool operator==(const Cochain1&, const Cochain1&) = default;
};

/// The data h consumed by the reduced model: h(r,s,t) (associator), h(r,s)
/// (braiding), h(r,r',sigma) (tensor of graded arrows) and h(r,tau,sigma)
/// (composition), all valued in N.
struct Cochain3 {
  GammaModule M;
  GammaModule N;
  std::vector<Elem> assoc;    // |M|^3
  std::vector<Elem> braid;    // |M|^2
  std::vector<Elem> tensor;   // |M|^2 * |Gamma|
  std::vector<Elem> compose;  // |M| * |Gamma|^2

  static Cochain3 zero(const GammaModule& m, const GammaModule& n);

  int m() const { return M.target.order(); }
  int g() const { return M.gamma.order(); }

  Elem a(Elem r, Elem s, Elem t) const { return assoc[(static_cast<std::size_t>(r) * m() + s) * m() + t]; }
  Elem c(Elem r, Elem s) const { return braid[static_cast<std::size_t>(r) * m() + s]; }
  Elem t(Elem r, Elem s, Elem sigma) const { return tensor[(static_cast<std::size_t>(r) * m() + s) * g() + sigma]; }
  Elem k(Elem r, Elem tau, Elem sigma) const { return compose[(static_cast<std::size_t>(r) * g() + tau) * g() + sigma]; }
  Elem& a(Elem r, Elem s, Elem t) { return assoc[(static_cast<std::size_t>(r) * m() + s) * m() + t]; }
  Elem& c(Elem r, Elem s) { return braid[static_cast<std::size_t>(r) * m() + s]; }
  Elem& t(Elem r, Elem s, Elem sigma) { return tensor[(static_cast<std::size_t>(r) * m() + s) * g() + sigma]; }
  Elem& k(Elem r, Elem tau, Elem sigma) { return compose[(static_cast<std::size_t>(r) * g() + tau) * g() + sigma]; }

  /// Zero whenever an argument is the unit of M or 1 in Gamma.
  bool is_normalized() const;
  bool is_zero() const;

  friend bool operator==(const Cochain3&, const Cochain3&) = default;
};

}  // namespace xmodcat
