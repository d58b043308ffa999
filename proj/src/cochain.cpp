#include "xmodcat/cochain.hpp"

#include <algorithm>

namespace xmodcat {

SymmetricCochain2 SymmetricCochain2::zero(const GammaModule& q, const GammaModule& b) {
  const std::size_t n = q.target.order();
  return {q, b, std::vector<Elem>(n * n, 0), std::vector<Elem>(n * q.gamma.order(), 0)};
}

bool SymmetricCochain2::is_normalized() const {
  const int n = Q.target.order();
  for (Elem u = 0; u < n; ++u) {
    if ((*this)(0, u) != 0 || (*this)(u, 0) != 0 || at_grade(u, 0) != 0) return false;
  }
  return true;
}

Cochain3 Cochain3::zero(const GammaModule& m, const GammaModule& n) {
  const std::size_t k = m.target.order();
  const std::size_t g = m.gamma.order();
  return {m, n, std::vector<Elem>(k * k * k, 0), std::vector<Elem>(k * k, 0), std::vector<Elem>(k * k * g, 0),
          std::vector<Elem>(k * g * g, 0)};
}

bool Cochain3::is_normalized() const {
  for (Elem r = 0; r < m(); ++r)
    for (Elem s = 0; s < m(); ++s) {
      if (a(0, r, s) || a(r, 0, s) || a(r, s, 0)) return false;
      if (c(0, r) || c(r, 0)) return false;
      for (Elem x = 0; x < g(); ++x)
        if (t(0, r, x) || t(r, 0, x) || t(r, s, 0)) return false;
    }
  for (Elem r = 0; r < m(); ++r)
    for (Elem x = 0; x < g(); ++x)
      for (Elem y = 0; y < g(); ++y)
        if (k(0, x, y) || k(r, 0, y) || k(r, x, 0)) return false;
  return true;
}

bool Cochain3::is_zero() const {
  auto z = [](const std::vector<Elem>& v) { return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; }); };
  return z(assoc) && z(braid) && z(tensor) && z(compose);
}

}  // namespace xmodcat
