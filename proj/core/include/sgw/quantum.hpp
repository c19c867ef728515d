#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sgw/exact/rational.hpp"
#include "sgw/invariant.hpp"

namespace sgw {

/// Finite Laurent polynomial in kappa: exponent -> nonzero coefficient.
using KappaSeries = std::map<int, Rational>;

/// Element of H^*(P^n) with coefficients in Q[kappa, kappa^{-1}], modulo q^2.
/// coeffs[q][p] is the coefficient of Lambda^p q^q; q^2 has no slot.
class QElement {
 public:
  explicit QElement(int n);

  /// Lambda^power with coefficient 1.
  static QElement basis(int n, int power);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const KappaSeries& coeff(int q, int power) const;
  void add(int q, int power, int kappa_exp, const Rational& value);

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const QElement&, const QElement&) = default;

 private:
  int n_;
  std::array<std::vector<KappaSeries>, 2> coeffs_;
};

/// Poincare pairing g_{ab} = delta_{a+b,n} on the basis Lambda^0..Lambda^n.
struct PairingMatrix {
  int n;
  [[nodiscard]] int g(int a, int b) const { return a + b == n ? 1 : 0; }
  [[nodiscard]] int g_inv(int a, int b) const { return a == n - b ? 1 : 0; }
};

/// Three-point invariants <Lambda^a, Lambda^b, Lambda^c> in degree one.
struct StructureRow {
  int a;
  int b;
  std::vector<std::pair<int, Invariant>> entries;  // (c, invariant)
};

/// Every (a, b) with a <= b. Throws UnsupportedError for n > 5.
std::vector<StructureRow> structure_table(int n);

/// Super quantum product truncated at first order in q.
QElement star(int n, const QElement& x, const QElement& y);

}  // namespace sgw
