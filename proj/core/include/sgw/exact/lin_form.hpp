#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sgw/exact/poly.hpp"
#include "sgw/exact/rational.hpp"

namespace sgw {

/// Homogeneous degree-one element sum_i c_i t_i + c_lambda * lambda.
/// A torus weight w entering an Euler-class factor (kappa + w).
struct LinForm {
  std::map<std::size_t, Rational> tau_coeffs;
  Rational lambda_coeff;

  static LinForm zero() { return {}; }
  static LinForm tau(std::size_t index, const Rational& coeff = Rational(1));
  static LinForm lambda(const Rational& coeff = Rational(1));

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool has_lambda() const { return !lambda_coeff.is_zero(); }

  [[nodiscard]] Poly to_poly(std::size_t num_tau) const;
  [[nodiscard]] DualRational eval_tau(const std::vector<Rational>& tau) const;
  [[nodiscard]] std::string to_string() const;

  LinForm& operator+=(const LinForm& rhs);
  friend LinForm operator+(LinForm lhs, const LinForm& rhs) { return lhs += rhs; }
  friend LinForm operator-(const LinForm& lhs, const LinForm& rhs);
  friend LinForm operator*(const Rational& s, const LinForm& f);

  /// Equality after dropping zero coefficients.
  friend bool operator==(const LinForm& lhs, const LinForm& rhs);
  /// Arbitrary but fixed total order, for sorting weight multisets.
  friend bool operator<(const LinForm& lhs, const LinForm& rhs);
};

}  // namespace sgw
