#pragma once

#include <vector>

namespace sgw::test {

// Coefficient of x^c in prod_i sum_{j <= c} (w_i x)^j, with every series
// truncated at x^c. Written independently of the dynamic program.
template <class T>
T truncated_series_oracle(unsigned c, const std::vector<T>& w, const T& one) {
  const T zero = one - one;
  std::vector<T> acc(c + 1, zero);
  acc[0] = one;
  for (const T& wi : w) {
    std::vector<T> geo(c + 1, zero);
    geo[0] = one;
    for (unsigned j = 1; j <= c; ++j) geo[j] = geo[j - 1] * wi;
    std::vector<T> next(c + 1, zero);
    for (unsigned i = 0; i <= c; ++i) {
      for (unsigned j = 0; i + j <= c; ++j) next[i + j] = next[i + j] + acc[i] * geo[j];
    }
    acc = next;
  }
  return acc[c];
}

}  // namespace sgw::test
