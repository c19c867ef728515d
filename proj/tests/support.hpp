#pragma once

#include <doctest.h>

#include <random>
#include <vector>

#include "sgw/exact/lin_form.hpp"
#include "sgw/exact/poly.hpp"
#include "sgw/invariant.hpp"
#include "oracles.hpp"

namespace sgw::test {

inline Rational random_rational(std::mt19937& rng, int span = 9) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 4);
  return Rational(num(rng), den(rng));
}

inline Poly random_poly(std::mt19937& rng, std::size_t num_tau, int max_terms = 4, int max_deg = 2) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_deg);
  std::uniform_int_distribution<int> lam(0, 1);
  Poly p(num_tau);
  for (int t = terms(rng); t > 0; --t) {
    Exponents e(num_tau + 1);
    for (std::size_t i = 0; i < num_tau; ++i) e[i] = static_cast<std::uint32_t>(exp(rng));
    e[num_tau] = static_cast<std::uint32_t>(lam(rng));
    p.add_term(e, random_rational(rng));
  }
  return p;
}

inline LinForm random_lin_form(std::mt19937& rng, std::size_t num_tau, bool with_lambda) {
  LinForm f;
  std::uniform_int_distribution<int> coin(0, 2);
  for (std::size_t i = 0; i < num_tau; ++i) {
    if (coin(rng) != 0) f = f + LinForm::tau(i, random_rational(rng));
  }
  if (with_lambda && coin(rng) == 0) f.lambda_coeff = random_rational(rng);
  return f;
}

inline std::vector<Rational> distinct_tau(std::mt19937& rng, std::size_t count) {
  std::uniform_int_distribution<int> d(-50, 50);
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational v(d(rng), 1 + static_cast<int>(rng() % 3));
    bool fresh = true;
    for (const auto& x : out) fresh = fresh && x != v;
    if (fresh) out.push_back(v);
  }
  return out;
}

inline Invariant inv(const char* coefficient, int kappa_exp) {
  return Invariant(Rational::parse(coefficient), kappa_exp);
}

}  // namespace sgw::test
