#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sgw {

/// Arbitrary-precision rational number in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(mpq_class value);

  /// Parses "p", "-p" or "p/q". Throws DomainError on malformed input or a
  /// zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] const mpq_class& raw() const { return value_; }
  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_one() const { return value_ == 1; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }

  [[nodiscard]] Rational inverse() const;
  [[nodiscard]] Rational abs() const;
  [[nodiscard]] Rational pow(int exponent) const;

  /// "p/q" in lowest terms, or "p" when the denominator is 1.
  [[nodiscard]] std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& value);

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Element a + b·λ of Q[λ]/(λ²). Used when torus weights have been
/// substituted but the M̄_{0,4} class λ is still pending integration.
struct DualRational {
  Rational value;
  Rational lambda;

  [[nodiscard]] bool is_zero() const { return value.is_zero() && lambda.is_zero(); }

  /// Throws ArithmeticError when the λ-free part vanishes.
  [[nodiscard]] DualRational inverse() const;

  friend DualRational operator+(const DualRational& a, const DualRational& b) {
    return {a.value + b.value, a.lambda + b.lambda};
  }
  friend DualRational operator-(const DualRational& a, const DualRational& b) {
    return {a.value - b.value, a.lambda - b.lambda};
  }
  friend DualRational operator*(const DualRational& a, const DualRational& b) {
    return {a.value * b.value, a.value * b.lambda + a.lambda * b.value};
  }
  friend bool operator==(const DualRational& a, const DualRational& b) = default;
};

}  // namespace sgw
