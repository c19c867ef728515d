#include "sgw/graphs.hpp"

#include <bit>

#include "sgw/errors.hpp"

namespace sgw {

namespace {

void check_edge(int n, int a, int b) {
  if (a < 0 || b > n || a >= b) {
    throw DomainError("edge endpoints need 0 <= a < b <= n, got a=" + std::to_string(a) +
                      ", b=" + std::to_string(b) + ", n=" + std::to_string(n));
  }
}

LinForm diff(int i, int j) {
  return LinForm::tau(static_cast<std::size_t>(i)) - LinForm::tau(static_cast<std::size_t>(j));
}

// prod_{j != a} (t_a - t_j) * prod_{j != b} (t_b - t_j)
std::vector<LinForm> vertex_factors(const FixedGraph& g) {
  std::vector<LinForm> out;
  for (int j = 0; j <= g.n; ++j) {
    if (j != g.a) out.push_back(diff(g.a, j));
    if (j != g.b) out.push_back(diff(g.b, j));
  }
  return out;
}

// prod_{j != a,b} (t_a - t_j)(t_b - t_j)
std::vector<LinForm> off_edge_factors(const FixedGraph& g) {
  std::vector<LinForm> out;
  for (int j = 0; j <= g.n; ++j) {
    if (j == g.a || j == g.b) continue;
    out.push_back(diff(g.a, j));
    out.push_back(diff(g.b, j));
  }
  return out;
}

std::vector<LinForm> with(LinForm head, std::vector<LinForm> rest) {
  rest.insert(rest.begin(), std::move(head));
  return rest;
}

FactoredInverse et_factors(const FixedGraph& g) {
  const std::size_t nt = g.num_tau();
  const Poly one = Poly::constant(nt, Rational(1));
  const Poly lam = Poly::lambda(nt);
  const LinForm ab = diff(g.a, g.b);
  const LinForm ba = diff(g.b, g.a);
  const int at_a = g.marks_at_a();
  switch (g.k) {
    case 1:
      return {one, with(at_a == 0 ? ba : ab, off_edge_factors(g))};
    case 2:
      return {at_a == 1 ? one : -one, vertex_factors(g)};
    case 3:
      switch (at_a) {
        case 0: return {ab.to_poly(nt) - lam, with(ba, vertex_factors(g))};
        case 1: return {one, with(ba, vertex_factors(g))};
        case 2: return {one, with(ab, vertex_factors(g))};
        default: return {ba.to_poly(nt) - lam, with(ab, vertex_factors(g))};
      }
    default:
      throw UnsupportedError("euler data needs k in {1,2,3}");
  }
}

}  // namespace

int FixedGraph::marks_at_a() const { return std::popcount(A); }

std::string FixedGraph::to_string() const {
  std::string marks;
  for (int i = 1; i <= k; ++i) {
    if (!at_a(i)) continue;
    if (!marks.empty()) marks += ",";
    marks += std::to_string(i);
  }
  return "G(k=" + std::to_string(k) + ",d=" + std::to_string(d) + ",a=" + std::to_string(a) +
         ",b=" + std::to_string(b) + ",A={" + marks + "})";
}

GraphGeometry geometry(const FixedGraph& g) {
  const int at_a = g.marks_at_a();
  if (g.k == 3 && (at_a == 0 || at_a == 3)) return {ModuliKind::M04, true};
  return {ModuliKind::Point, false};
}

std::vector<FixedGraph> enumerate(int n, int k) {
  if (k < 1 || k > 3) throw UnsupportedError("localization supports k in {1,2,3}, got " + std::to_string(k));
  if (n < 1) throw DomainError("n must be >= 1");
  std::vector<FixedGraph> out;
  for (int a = 0; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (std::uint32_t mask = 0; mask < (1U << k); ++mask) out.push_back({n, 1, k, a, b, mask});
    }
  }
  return out;
}

std::vector<LinForm> single_edge_weights(int n, int d, int a, int b, EdgeConfig config) {
  check_edge(n, a, b);
  if (d < 1) throw DomainError("degree must be >= 1");
  const auto ua = static_cast<std::size_t>(a);
  const auto ub = static_cast<std::size_t>(b);
  const LinForm ta_minus_tb = LinForm::tau(ua) - LinForm::tau(ub);
  std::vector<LinForm> out;
  for (int q = 0; q <= 2 * d - 1; ++q) {
    if (config == EdgeConfig::MarkAtA && q == d) continue;
    if (config == EdgeConfig::NoMark && q == d - 1) continue;
    out.push_back(Rational(2 * d - 2 * q - 1, 2 * d) * ta_minus_tb);
  }
  for (int m = 0; m <= n; ++m) {
    if (m == a || m == b) continue;
    for (int q = 0; q <= d - 1; ++q) {
      out.push_back(LinForm::tau(ua, Rational(2 * q - 1, 2 * d)) +
                    LinForm::tau(ub, Rational(-(2 * d - 2 * q - 1), 2 * d)) +
                    LinForm::tau(static_cast<std::size_t>(m)));
    }
  }
  return out;
}

EulerData euler_data(const FixedGraph& g) {
  if (g.d != 1 || g.k < 1 || g.k > 3) {
    throw UnsupportedError("euler data is available for d = 1 and k in {1,2,3}");
  }
  check_edge(g.n, g.a, g.b);
  const int at_a = g.marks_at_a();
  const int at_b = g.marks_at_b();
  const EdgeConfig config = at_a == 0   ? EdgeConfig::NoMark
                            : at_b == 0 ? EdgeConfig::MarkAtA
                                        : EdgeConfig::MarksAtBoth;
  FactoredInverse factored = et_factors(g);
  Poly den = Poly::constant(g.num_tau(), Rational(1));
  for (const LinForm& f : factored.denominator) den *= f.to_poly(g.num_tau());
  EulerData data{single_edge_weights(g.n, g.d, g.a, g.b, config), RatFunc(factored.numerator, den),
                 std::move(factored)};
  for (const int marks : {at_a, at_b}) {
    // a contracted component holding `marks` points and the node
    if (marks == 2) data.susy_weights.push_back(LinForm::zero());
    if (marks == 3) {
      data.susy_weights.push_back(LinForm::zero());
      data.susy_weights.push_back(LinForm::lambda(Rational(-1, 2)));
    }
  }
  return data;
}

DualRational FactoredInverse::eval_tau(const std::vector<Rational>& tau) const {
  Rational den(1);
  for (const LinForm& f : denominator) den *= f.eval_tau(tau).value;
  if (den.is_zero()) throw ArithmeticError("denominator vanishes at the evaluation point");
  const DualRational num = numerator.eval_tau(tau);
  const Rational inv = den.inverse();
  return {num.value * inv, num.lambda * inv};
}

Poly ev_pullback(const FixedGraph& g, const std::vector<int>& classes) {
  if (classes.size() != static_cast<std::size_t>(g.k)) {
    throw DomainError("expected " + std::to_string(g.k) + " classes, got " + std::to_string(classes.size()));
  }
  const std::size_t nt = g.num_tau();
  Exponents e(nt + 1, 0);
  for (int i = 1; i <= g.k; ++i) {
    const int power = classes[static_cast<std::size_t>(i - 1)];
    if (power < 0 || power > g.n) throw DomainError("class exponent out of range");
    e[static_cast<std::size_t>(g.at_a(i) ? g.a : g.b)] += static_cast<std::uint32_t>(power);
  }
  return Poly::monomial(nt, std::move(e), Rational(1));
}

}  // namespace sgw
