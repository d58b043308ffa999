#pragma once

#include <algorithm>

namespace xmodcat {

template <class Compose, class Tensor>
void GradedCatGroup::finalize(Compose&& compose, Tensor&& tensor) {
  std::sort(morphisms.begin(), morphisms.end());
  const std::size_t n = morphisms.size();
  const std::size_t ng = gamma.order();
  index_.assign(static_cast<std::size_t>(objects) * objects * payloads * ng, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& m = morphisms[i];
    index_[((static_cast<std::size_t>(m.src) * objects + m.dst) * payloads + m.payload) * ng + m.grade] =
        static_cast<MorId>(i);
  }
  compose_table.assign(n * n, -1);
  tensor_table.assign(n * n, -1);
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g) {
      const auto& mf = morphisms[f];
      const auto& mg = morphisms[g];
      if (mf.dst == mg.src) {
        auto r = compose(mf, mg);
        compose_table[f * n + g] = r ? find(*r) : -1;
      }
      if (mf.grade == mg.grade) {
        auto r = tensor(mf, mg);
        tensor_table[f * n + g] = r ? find(*r) : -1;
      }
    }
}

}  // namespace xmodcat
