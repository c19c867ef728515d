#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "sgw/errors.hpp"
#include "sgw/taut0.hpp"
#include "support.hpp"

using namespace sgw;

namespace {

Rational factorial(int n) {
  Rational out(1);
  for (int i = 2; i <= n; ++i) out *= Rational(i);
  return out;
}

// Pure psi integrals on M̄_{0,n}: (n-3)! / prod a_i!.
Rational psi_integral(int n, const std::vector<int>& a) {
  if (std::accumulate(a.begin(), a.end(), 0) != n - 3) return Rational(0);
  Rational out = factorial(n - 3);
  for (int x : a) out /= factorial(x);
  return out;
}

// Integral of psi_l^p kappa_{b_1} ... kappa_{b_m} over M̄_{0,l}, from
//   <psi_l^p prod psi_{l+j}^{b_j+1}>_{l+m} = sum_{sigma in S_m} <psi_l^p prod_cycles kappa_{b(c)}>_l
// solved for the identity term. Independent of the pushforward code.
Rational kappa_oracle(int l, int p, std::vector<int> b) {
  std::sort(b.begin(), b.end());
  const int m = static_cast<int>(b.size());
  std::vector<int> exps(static_cast<std::size_t>(l + m), 0);
  exps[static_cast<std::size_t>(l - 1)] = p;
  for (int j = 0; j < m; ++j) exps[static_cast<std::size_t>(l + j)] = b[static_cast<std::size_t>(j)] + 1;
  Rational value = psi_integral(l + m, exps);

  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    std::vector<int> sums;
    for (int s = 0; s < m; ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      int total = 0;
      for (int i = s; !seen[static_cast<std::size_t>(i)]; i = perm[static_cast<std::size_t>(i)]) {
        seen[static_cast<std::size_t>(i)] = true;
        total += b[static_cast<std::size_t>(i)];
      }
      sums.push_back(total);
    }
    value -= kappa_oracle(l, p, sums);
  }
  return value;
}

Rational chain_integral(unsigned k, std::vector<unsigned> exps) {
  return integrate(TautExpr(TautMonomial::chain(k, exps)));
}

}  // namespace

TEST_CASE("pushforward_step examples") {
  const TautExpr psi4(TautMonomial::chain(4, {1}));
  const TautExpr down = pushforward_step(psi4);
  CHECK(down.l() == 3);
  CHECK(down.scalar_part() == Rational(1));

  const TautExpr step = pushforward_step(TautExpr(TautMonomial::chain(5, {1, 1})));
  CHECK(step == TautExpr(TautMonomial{4, {{0, 1}}, {}, Rational(2)}));
  CHECK(step.to_string() == "2 psi4");

  CHECK(pushforward_step(TautExpr(TautMonomial::chain(5, {1, 0}))).is_zero());
  CHECK_THROWS_AS(pushforward_step(TautExpr(3)), DomainError);
}

TEST_CASE("integrate reproduces the worked monomials") {
  CHECK(chain_integral(4, {1}) == Rational(1));
  CHECK(chain_integral(5, {1, 1}) == Rational(2));
  CHECK(chain_integral(5, {0, 2}) == Rational(1));
  CHECK(chain_integral(6, {1, 1, 1}) == Rational(6));
  CHECK(chain_integral(6, {1, 0, 2}) == Rational(2));
  CHECK(chain_integral(6, {0, 1, 2}) == Rational(3));
  CHECK(chain_integral(6, {0, 0, 3}) == Rational(1));
  CHECK(integrate(TautExpr(TautMonomial{})) == Rational(1));
}

TEST_CASE("the fifth nonzero k=6 chain monomial") {
  // (f^*psi_5)^2 psi_6 pushes to psi_5^2 kappa_0 = 3 psi_5^2 on M̄_{0,5}
  CHECK(chain_integral(6, {0, 2, 1}) == Rational(3));
}

TEST_CASE("kappa integrals") {
  CHECK(integrate(TautExpr(TautMonomial{5, {}, {{1, 2}}, Rational(1)})) == Rational(5));
  for (unsigned l = 4; l <= 9; ++l) {
    CHECK(integrate(TautExpr(TautMonomial{l, {}, {{l - 3, 1}}, Rational(1)})) == Rational(1));
  }
  // kappa_0 is the scalar l - 2
  CHECK(TautExpr(TautMonomial{6, {{0, 3}}, {{0, 1}}, Rational(1)}) ==
        TautExpr(TautMonomial{6, {{0, 3}}, {}, Rational(4)}));
}

TEST_CASE("kappa and psi integrals agree with the permutation oracle") {
  CHECK(kappa_oracle(5, 0, {1, 1}) == Rational(5));
  std::mt19937 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const int l = 4 + static_cast<int>(rng() % 5);
    int budget = l - 3;
    const int p = static_cast<int>(rng() % static_cast<unsigned>(budget + 1));
    budget -= p;
    std::vector<int> b;
    while (budget > 0) {
      const int x = 1 + static_cast<int>(rng() % static_cast<unsigned>(budget));
      b.push_back(x);
      budget -= x;
    }
    TautMonomial m{static_cast<unsigned>(l), {}, {}, Rational(1)};
    if (p > 0) m.psi[0] = static_cast<unsigned>(p);
    for (int x : b) m.kappa[static_cast<unsigned>(x)] += 1;
    CAPTURE(m.to_string());
    CHECK(integrate(TautExpr(m)) == kappa_oracle(l, p, b));
  }
}

TEST_CASE("degree gate") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned l = 4 + rng() % 5;
    TautMonomial m{l, {}, {}, Rational(1)};
    for (unsigned depth = 0; depth + 3 < l; ++depth) {
      if (rng() % 2) m.psi[depth] = 1 + rng() % 3;
    }
    if (rng() % 3 == 0) m.kappa[1 + rng() % 2] = 1 + rng() % 2;
    if (m.degree() == l - 3) continue;
    CAPTURE(m.to_string());
    CHECK(integrate(TautExpr(m)).is_zero());
  }
}

TEST_CASE("integrate is linear") {
  std::mt19937 rng(2);
  auto random_expr = [&rng](unsigned l) {
    TautExpr e(l);
    for (int t = 0; t < 3; ++t) {
      TautMonomial m{l, {}, {}, test::random_rational(rng)};
      unsigned budget = l - 3;
      for (unsigned depth = 0; depth + 3 < l && budget > 0; ++depth) {
        const unsigned p = rng() % (budget + 1);
        if (p) m.psi[depth] = p;
        budget -= p;
      }
      if (budget > 0) m.kappa[budget] = 1;
      e.add(m);
    }
    return e;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned l = 4 + rng() % 4;
    const TautExpr e1 = random_expr(l);
    const TautExpr e2 = random_expr(l);
    const Rational a = test::random_rational(rng);
    const Rational b = test::random_rational(rng);
    CHECK(integrate(a * e1 + b * e2) == a * integrate(e1) + b * integrate(e2));
  }
}

TEST_CASE("malformed monomials are rejected") {
  CHECK_THROWS_AS(TautMonomial::chain(6, {1, 1}), DomainError);
  CHECK_THROWS_AS(TautExpr(TautMonomial{5, {{3, 1}}, {}, Rational(1)}), DomainError);
  TautExpr e(5);
  CHECK_THROWS_AS(e.add(TautMonomial::chain(6, {0, 0, 3})), DomainError);
}
