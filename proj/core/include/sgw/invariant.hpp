#pragma once

#include <optional>
#include <string>

#include "sgw/exact/rational.hpp"

namespace sgw {

/// Either zero or coefficient * kappa^kappa_exp.
class Invariant {
 public:
  Invariant() = default;
  Invariant(const Rational& coefficient, int kappa_exp);

  static Invariant zero() { return {}; }

  [[nodiscard]] bool is_zero() const { return !coefficient_.has_value(); }
  /// Throws DomainError on the zero invariant.
  [[nodiscard]] const Rational& coefficient() const;
  [[nodiscard]] int kappa_exp() const;

  /// "0" or "p/q * kappa^e".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Invariant& a, const Invariant& b) = default;

 private:
  std::optional<Rational> coefficient_;
  int kappa_exp_ = 0;
};

}  // namespace sgw
