#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgw/exact/lin_form.hpp"
#include "sgw/exact/poly.hpp"
#include "sgw/exact/ratfunc.hpp"

namespace sgw {

/// Torus-fixed locus of degree-d maps to P^n: a d-fold cover of the line
/// through q_a and q_b, with the marked points in A sitting over q_a and the
/// remaining ones over q_b.
struct FixedGraph {
  int n = 1;
  int d = 1;
  int k = 1;
  int a = 0;
  int b = 1;
  std::uint32_t A = 0;  // bit i-1 set iff marked point i lies over q_a

  [[nodiscard]] bool at_a(int mark) const { return (A >> (mark - 1)) & 1U; }
  [[nodiscard]] int marks_at_a() const;
  [[nodiscard]] int marks_at_b() const { return k - marks_at_a(); }
  [[nodiscard]] std::size_t num_tau() const { return static_cast<std::size_t>(n) + 1; }

  /// "G(k=3,d=1,a=0,b=1,A={1,3})"
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const FixedGraph&, const FixedGraph&) = default;
};

enum class ModuliKind { Point, M04 };

struct GraphGeometry {
  ModuliKind moduli_kind = ModuliKind::Point;
  bool has_lambda = false;
};

/// The fixed locus is a point, except for three marked points collected on
/// a single contracted component, where it is M̄_{0,4}.
GraphGeometry geometry(const FixedGraph& g);

/// Which edge ends carry a special point (a marking or a node to a
/// contracted component).
enum class EdgeConfig { NoMark, MarkAtA, MarksAtBoth };

/// numerator / prod(denominator), the denominator kept as linear factors.
struct FactoredInverse {
  Poly numerator;
  std::vector<LinForm> denominator;

  /// Throws ArithmeticError when a denominator factor vanishes at tau.
  [[nodiscard]] DualRational eval_tau(const std::vector<Rational>& tau) const;
};

struct EulerData {
  /// Weights w with Euler class prod (kappa + w) of the restricted SUSY
  /// normal bundle.
  std::vector<LinForm> susy_weights;
  /// Inverse torus Euler class of the normal bundle of the fixed locus,
  /// linear in lambda.
  RatFunc et_inverse;
  /// Same class before expansion; used for fast evaluation.
  FactoredInverse et_factored;
};

/// All fixed graphs for degree one with k marks, ordered by (a, b) and then
/// by the bitmask of A. Throws UnsupportedError unless k is 1, 2 or 3.
std::vector<FixedGraph> enumerate(int n, int k);

/// SUSY normal-bundle weights of a single edge of degree d.
/// NoMark leaves only the b end special, MarkAtA only the a end.
std::vector<LinForm> single_edge_weights(int n, int d, int a, int b, EdgeConfig config);

/// Edge configuration and splitting factors assembled for a degree-one graph.
EulerData euler_data(const FixedGraph& g);

/// prod_i t_a^{a_i} over marks in A times prod_i t_b^{a_i} over the rest.
Poly ev_pullback(const FixedGraph& g, const std::vector<int>& classes);

}  // namespace sgw
