#pragma once

#include <map>
#include <string>
#include <vector>

#include "sgw/exact/rational.hpp"

namespace sgw {

/// coefficient * prod_m ((f^*)^m psi_{l-m})^{p_m} * prod_a kappa_a^{q_a}
/// on M̄_{0,l}. psi maps pull depth m to power p_m, kappa maps index a >= 1
/// to power q_a. kappa_0 never appears: it is the scalar l - 2.
struct TautMonomial {
  unsigned l = 3;
  std::map<unsigned, unsigned> psi;
  std::map<unsigned, unsigned> kappa;
  Rational coefficient{1};

  /// Chain monomial ((f^*)^{k-4} psi_4)^{i_4} ... psi_k^{i_k} on M̄_{0,k}
  /// from exps = (i_4, ..., i_k).
  static TautMonomial chain(unsigned k, const std::vector<unsigned>& exps);

  [[nodiscard]] unsigned degree() const;
  [[nodiscard]] std::string to_string() const;
};

/// Linear combination of TautMonomials on a common M̄_{0,l}.
class TautExpr {
 public:
  explicit TautExpr(unsigned l = 3);
  TautExpr(const TautMonomial& m);  // NOLINT(google-explicit-constructor)

  [[nodiscard]] unsigned l() const { return l_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::vector<TautMonomial> monomials() const;
  /// Coefficient of the empty monomial.
  [[nodiscard]] Rational scalar_part() const;
  [[nodiscard]] std::string to_string() const;

  /// Adds m. Throws DomainError when m lives on another space or violates
  /// the chain shape.
  void add(const TautMonomial& m);

  TautExpr& operator+=(const TautExpr& rhs);
  TautExpr& operator*=(const Rational& s);
  friend TautExpr operator+(TautExpr a, const TautExpr& b) { return a += b; }
  friend TautExpr operator*(const Rational& s, TautExpr e) { return e *= s; }
  friend bool operator==(const TautExpr& a, const TautExpr& b) = default;

 private:
  using Key = std::pair<std::map<unsigned, unsigned>, std::map<unsigned, unsigned>>;
  unsigned l_;
  std::map<Key, Rational> terms_;
};

/// Pushforward along the map M̄_{0,l} -> M̄_{0,l-1} forgetting point l.
/// Throws DomainError for l = 3.
TautExpr pushforward_step(const TautExpr& e);

/// Integral over M̄_{0,l}: push forward down to M̄_{0,3} and read off the
/// degree-zero part.
Rational integrate(const TautExpr& e);

}  // namespace sgw
