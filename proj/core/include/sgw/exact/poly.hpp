#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sgw/exact/rational.hpp"

namespace sgw {

/// Exponent vector (e_0, ..., e_n, e_lambda). The λ slot is always last.
using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order with t0 < t1 < ... < tn < lambda, sorted
/// descending so that the leading monomial is the first map entry.
struct GrlexDescending {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const;
};

/// Sparse polynomial in t0..tn and a nilpotent lambda (lambda^2 = 0) with
/// exact rational coefficients. Zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexDescending>;

  explicit Poly(std::size_t num_tau = 1);

  static Poly constant(std::size_t num_tau, const Rational& value);
  static Poly tau(std::size_t num_tau, std::size_t index);
  static Poly lambda(std::size_t num_tau);
  static Poly monomial(std::size_t num_tau, Exponents exps, const Rational& coeff);

  [[nodiscard]] std::size_t num_tau() const { return num_tau_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] bool has_lambda() const;
  [[nodiscard]] Rational constant_term() const;
  [[nodiscard]] int total_degree() const;
  /// Degree in a single t variable; -1 for the zero polynomial.
  [[nodiscard]] int degree_in(std::size_t var) const;

  [[nodiscard]] const Exponents& leading_exponents() const;
  [[nodiscard]] const Rational& leading_coefficient() const;

  /// Coefficient of lambda^e (e in {0,1}) as a lambda-free polynomial.
  [[nodiscard]] Poly lambda_coefficient(unsigned e) const;
  /// Coefficient of t_var^e, with t_var removed.
  [[nodiscard]] Poly coefficient_in(std::size_t var, std::uint32_t e) const;

  /// Positive rational c such that (*this / c) has coprime integer
  /// coefficients. Zero for the zero polynomial.
  [[nodiscard]] Rational content() const;

  /// Largest exponent of each tau variable.
  [[nodiscard]] std::vector<std::uint32_t> max_exponents() const;

  [[nodiscard]] Rational eval(const std::vector<Rational>& tau, const Rational& lambda_value) const;
  [[nodiscard]] DualRational eval_tau(const std::vector<Rational>& tau) const;

  [[nodiscard]] Poly pow(unsigned exponent) const;

  /// Deterministic text form under the fixed monomial order, e.g.
  /// "t0^2 - 1/2*t0*t1 + lambda".
  [[nodiscard]] std::string to_string() const;

  void add_term(const Exponents& exps, const Rational& coeff);

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Poly operator*(const Rational& lhs, Poly rhs) { return rhs *= lhs; }
  friend Poly operator-(Poly value);

  friend bool operator==(const Poly& lhs, const Poly& rhs) {
    return lhs.num_tau_ == rhs.num_tau_ && lhs.terms_ == rhs.terms_;
  }

 private:
  void check_same_ring(const Poly& other) const;

  std::size_t num_tau_;
  TermMap terms_;
};

/// Product with lambda-truncation. Throws DimensionError on mismatched rings.
Poly poly_mul(const Poly& a, const Poly& b);
Rational poly_eval(const Poly& p, const std::vector<Rational>& tau, const Rational& lambda_value);

}  // namespace sgw
