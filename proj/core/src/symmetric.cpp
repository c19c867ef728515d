#include "sgw/exact/symmetric.hpp"

namespace sgw {

// h_j(w_1..w_i) = h_j(w_1..w_{i-1}) + w_i * h_{j-1}(w_1..w_i): fold in one
// weight at a time, updating degrees in ascending order.

Poly complete_homogeneous(unsigned c, const std::vector<LinForm>& weights, std::size_t num_tau) {
  std::vector<Poly> h(c + 1, Poly(num_tau));
  h[0] = Poly::constant(num_tau, Rational(1));
  for (const LinForm& w : weights) {
    const Poly wp = w.to_poly(num_tau);
    for (unsigned j = 1; j <= c; ++j) h[j] += wp * h[j - 1];
  }
  return h[c];
}

DualRational complete_homogeneous(unsigned c, const std::vector<DualRational>& weights) {
  std::vector<DualRational> h(c + 1);
  h[0] = {Rational(1), Rational(0)};
  for (const DualRational& w : weights) {
    for (unsigned j = 1; j <= c; ++j) h[j] = h[j] + w * h[j - 1];
  }
  return h[c];
}

}  // namespace sgw
