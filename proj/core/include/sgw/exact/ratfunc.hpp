#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sgw/exact/poly.hpp"

namespace sgw {

/// Quotient num/den of polynomials with a lambda-free denominator.
///
/// Canonical form: den has coprime integer coefficients and a positive
/// leading coefficient. When the ring has at most kFullGcdMaxTau variables
/// the common polynomial factor of num and den is cancelled as well.
class RatFunc {
 public:
  static constexpr std::size_t kFullGcdMaxTau = 3;

  explicit RatFunc(std::size_t num_tau = 1);
  explicit RatFunc(Poly num);
  /// Throws ArithmeticError for a zero denominator and DomainError when the
  /// denominator contains lambda.
  RatFunc(Poly num, Poly den);

  static RatFunc constant(std::size_t num_tau, const Rational& value);

  [[nodiscard]] std::size_t num_tau() const { return num_.num_tau(); }
  [[nodiscard]] const Poly& num() const { return num_; }
  [[nodiscard]] const Poly& den() const { return den_; }

  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  /// True when the value is a lambda-free rational constant.
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] Rational constant_value() const;

  /// Coefficient of lambda^e as a lambda-free rational function.
  [[nodiscard]] RatFunc lambda_coefficient(unsigned e) const;

  /// Multiplicative inverse. A lambda-bearing numerator a + b*lambda is
  /// inverted through (a - b*lambda)/a^2. Throws ArithmeticError when the
  /// lambda-free part vanishes.
  [[nodiscard]] RatFunc inverse() const;

  /// Throws ArithmeticError when the denominator vanishes at tau.
  [[nodiscard]] DualRational eval_tau(const std::vector<Rational>& tau) const;

  [[nodiscard]] std::string to_string() const;

  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);

  friend RatFunc operator+(RatFunc lhs, const RatFunc& rhs) { return lhs += rhs; }
  friend RatFunc operator-(RatFunc lhs, const RatFunc& rhs);
  friend RatFunc operator*(RatFunc lhs, const RatFunc& rhs) { return lhs *= rhs; }
  friend RatFunc operator-(const RatFunc& value);

  friend bool operator==(const RatFunc& lhs, const RatFunc& rhs);

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

RatFunc ratfunc_add(const RatFunc& a, const RatFunc& b);
RatFunc ratfunc_mul(const RatFunc& a, const RatFunc& b);
RatFunc ratfunc_neg(const RatFunc& a);

}  // namespace sgw
