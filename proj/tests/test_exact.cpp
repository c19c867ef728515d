#include <doctest.h>

#include <map>
#include <random>

#include "sgw/errors.hpp"
#include "sgw/exact/gcd.hpp"
#include "sgw/exact/lin_form.hpp"
#include "sgw/exact/poly.hpp"
#include "sgw/exact/ratfunc.hpp"
#include "sgw/exact/symmetric.hpp"
#include "support.hpp"

using namespace sgw;

namespace {

Poly t(std::size_t nt, std::size_t i) { return Poly::tau(nt, i); }
Poly one(std::size_t nt) { return Poly::constant(nt, Rational(1)); }

DualRational truncated_series_oracle(unsigned c, const std::vector<DualRational>& w) {
  return test::truncated_series_oracle(c, w, DualRational{Rational(1), Rational(0)});
}

using RawTerms = std::map<Exponents, Rational>;

RawTerms untruncated_product(const Poly& a, const Poly& b) {
  RawTerms out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("rational canonical form and text") {
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7").is_integer());
  CHECK(Rational::parse("+3/9").to_string() == "1/3");
  CHECK(Rational(-5, 2).denominator() == 2);
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), DomainError);
  CHECK_THROWS_AS(Rational::parse("x"), DomainError);
  CHECK_THROWS_AS(Rational::parse(""), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), ArithmeticError);
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("dual numbers") {
  const DualRational x{Rational(2), Rational(3)};
  const DualRational y = x.inverse();
  CHECK(x * y == DualRational{Rational(1), Rational(0)});
  CHECK_THROWS_AS((DualRational{Rational(0), Rational(1)}.inverse()), ArithmeticError);
}

TEST_CASE("poly_mul examples") {
  const std::size_t nt = 2;
  CHECK(poly_mul(t(nt, 0), t(nt, 1)).to_string() == "t0*t1");
  CHECK(poly_mul(Poly::lambda(nt), Poly::lambda(nt)).is_zero());
  CHECK(poly_mul(t(nt, 0) - t(nt, 1), t(nt, 0) + t(nt, 1)) == t(nt, 0).pow(2) - t(nt, 1).pow(2));
  CHECK((t(nt, 0).pow(2) - t(nt, 1).pow(2)).to_string() == "-t1^2 + t0^2");
  CHECK_THROWS_AS(poly_mul(t(2, 0), t(3, 0)), DimensionError);
}

TEST_CASE("monomial order puts lambda above every t") {
  const std::size_t nt = 3;
  const Poly p = t(nt, 0) * t(nt, 2) + t(nt, 1).pow(2) + Poly::lambda(nt) * t(nt, 0) + t(nt, 2);
  CHECK(p.to_string() == "t0*lambda + t0*t2 + t1^2 + t2");
  CHECK(p.leading_exponents() == Exponents{1, 0, 0, 1});
}

TEST_CASE("poly_eval examples") {
  const std::size_t nt = 2;
  CHECK(poly_eval(t(nt, 1) - t(nt, 0), {Rational(0), Rational(1)}, Rational(0)) == Rational(1));
  CHECK(poly_eval(t(nt, 0) * t(nt, 1), {Rational(2, 3), Rational(3)}, Rational(0)) == Rational(2));
  CHECK(poly_eval(Poly::lambda(nt), {Rational(5), Rational(7)}, Rational(0)).is_zero());
  CHECK_THROWS_AS(poly_eval(t(nt, 0), {Rational(1)}, Rational(0)), DimensionError);
}

TEST_CASE("complete_homogeneous examples") {
  const std::size_t nt = 2;
  const LinForm w1 = LinForm::tau(0);
  const LinForm w2 = LinForm::tau(1, Rational(-2));
  CHECK(complete_homogeneous(0, {w1, w2}, nt) == one(nt));
  CHECK(complete_homogeneous(0, {}, nt) == one(nt));
  CHECK(complete_homogeneous(1, {w1, w2}, nt) == w1.to_poly(nt) + w2.to_poly(nt));
  CHECK(complete_homogeneous(2, {LinForm::zero(), LinForm::lambda(Rational(-1, 2))}, nt).is_zero());
  CHECK(complete_homogeneous(2, {w2}, nt) == w2.to_poly(nt).pow(2));
  CHECK(complete_homogeneous(3, {w1, w2}, nt) ==
        t(nt, 0).pow(3) - Rational(2) * t(nt, 0).pow(2) * t(nt, 1) + Rational(4) * t(nt, 0) * t(nt, 1).pow(2) -
            Rational(8) * t(nt, 1).pow(3));
}

TEST_CASE("complete_homogeneous agrees with the truncated-series oracle") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t nt = 1 + rng() % 4;
    const std::size_t size = rng() % 7;
    const unsigned c = static_cast<unsigned>(rng() % 6);
    std::vector<LinForm> weights;
    for (std::size_t i = 0; i < size; ++i) weights.push_back(test::random_lin_form(rng, nt, true));
    const std::vector<Rational> tau = test::distinct_tau(rng, nt);
    std::vector<DualRational> values;
    for (const LinForm& w : weights) values.push_back(w.eval_tau(tau));

    const DualRational expected = truncated_series_oracle(c, values);
    CHECK(complete_homogeneous(c, weights, nt).eval_tau(tau) == expected);
    CHECK(complete_homogeneous(c, values) == expected);
  }
}

TEST_CASE("poly ring laws") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t nt = 1 + rng() % 3;
    const Poly a = test::random_poly(rng, nt);
    const Poly b = test::random_poly(rng, nt);
    const Poly c = test::random_poly(rng, nt);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b - b == a);
    CHECK(a * one(nt) == a);
  }
}

TEST_CASE("lambda truncation matches an untruncated reference product") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t nt = 1 + rng() % 3;
    const Poly a = test::random_poly(rng, nt, 5);
    const Poly b = test::random_poly(rng, nt, 5);
    const Poly product = a * b;
    RawTerms expected;
    for (const auto& [e, c] : untruncated_product(a, b)) {
      if (e[nt] < 2 && !c.is_zero()) expected.emplace(e, c);
    }
    RawTerms got(product.terms().begin(), product.terms().end());
    CHECK(got == expected);
    for (const auto& [e, c] : product.terms()) CHECK(e[nt] < 2);
  }
}

TEST_CASE("lin_form conversions") {
  const LinForm f = Rational(1, 2) * (LinForm::tau(1) - LinForm::tau(0));
  CHECK(f.to_string() == "-1/2*t0 + 1/2*t1");
  CHECK(f.eval_tau({Rational(1), Rational(3)}) == DualRational{Rational(1), Rational(0)});
  CHECK(LinForm::lambda(Rational(-1, 2)).to_poly(2).to_string() == "-1/2*lambda");
  CHECK((LinForm::tau(0) - LinForm::tau(0)).is_zero());
  CHECK_THROWS_AS(LinForm::tau(4).to_poly(2), DimensionError);
}

TEST_CASE("polynomial gcd") {
  const std::size_t nt = 3;
  const Poly x = t(nt, 0);
  const Poly y = t(nt, 1);
  const Poly z = t(nt, 2);
  CHECK(poly_gcd((x - y) * (x + y), Rational(3) * (x - y).pow(2)) == primitive_normalized(x - y));
  CHECK(poly_gcd((x - z) * (y - z) * (x + y), (y - z) * (x + y + z)) == primitive_normalized(y - z));
  CHECK(poly_gcd(x + y, x - y).is_constant());
  CHECK(poly_gcd(Rational(2) * x * y, Rational(4) * y * z) == y);
  const Poly g = x * y - z.pow(2);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Poly a = test::random_poly(rng, nt, 3, 1).lambda_coefficient(0);
    Poly b = test::random_poly(rng, nt, 3, 1).lambda_coefficient(0);
    if (a.is_zero() || b.is_zero()) continue;
    const Poly d = poly_gcd(a * g, b * g);
    // g divides the gcd, and the gcd divides both inputs
    CHECK_NOTHROW(divide_exact(d, g));
    CHECK_NOTHROW(divide_exact(a * g, d));
    CHECK_NOTHROW(divide_exact(b * g, d));
    CHECK(d.leading_coefficient() > Rational(0));
  }
  CHECK_THROWS_AS(divide_exact(x, y), ArithmeticError);
}

TEST_CASE("ratfunc examples") {
  const std::size_t nt = 2;
  const Poly d10 = t(nt, 1) - t(nt, 0);
  const Poly d01 = t(nt, 0) - t(nt, 1);
  CHECK(ratfunc_add(RatFunc(one(nt), d10), RatFunc(one(nt), d01)).is_zero());
  const RatFunc sum = ratfunc_add(RatFunc(t(nt, 1), d10), RatFunc(t(nt, 0), d01));
  REQUIRE(sum.is_constant());
  CHECK(sum.constant_value() == Rational(1));
  const RatFunc xy(t(nt, 0), t(nt, 1));
  const RatFunc yx(t(nt, 1), t(nt, 0));
  CHECK(ratfunc_mul(xy, yx) == RatFunc::constant(nt, Rational(1)));
  CHECK(ratfunc_mul(xy, yx).is_constant());
  CHECK(ratfunc_neg(xy) + xy == RatFunc(nt));
  CHECK_THROWS_AS(RatFunc(one(nt), Poly(nt)), ArithmeticError);
  CHECK_THROWS_AS(RatFunc(one(nt), Poly::lambda(nt)), DomainError);
}

TEST_CASE("ratfunc canonical form") {
  const std::size_t nt = 2;
  const RatFunc r(Rational(4) * t(nt, 0), Rational(-6) * t(nt, 0) * t(nt, 1));
  CHECK(r.den() == t(nt, 1));
  CHECK(r.num() == Poly::constant(nt, Rational(-2, 3)));
  CHECK(r.to_string() == "(-2/3)/(t1)");
  // no full gcd above three variables, but the value is unchanged
  const RatFunc big(t(4, 0) * t(4, 3), t(4, 3) * Rational(2));
  CHECK(big.den().leading_coefficient() > Rational(0));
  CHECK(big == RatFunc(Rational(1, 2) * t(4, 0)));
}

TEST_CASE("ratfunc inverse") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t nt = 1 + rng() % 3;
    const Poly num = test::random_poly(rng, nt);
    Poly den = test::random_poly(rng, nt).lambda_coefficient(0);
    if (num.lambda_coefficient(0).is_zero() || den.is_zero()) continue;
    const RatFunc r(num, den);
    CHECK(ratfunc_mul(r, r.inverse()) == RatFunc::constant(nt, Rational(1)));
    CHECK(ratfunc_mul(r, r.inverse()).is_constant());
  }
  CHECK_THROWS_AS(RatFunc(Poly::lambda(2)).inverse(), ArithmeticError);
}

TEST_CASE("ratfunc evaluation splits off lambda") {
  const std::size_t nt = 2;
  const RatFunc r(Poly::lambda(nt) + t(nt, 1) - t(nt, 0), (t(nt, 1) - t(nt, 0)).pow(3));
  CHECK(r.eval_tau({Rational(0), Rational(2)}) == DualRational{Rational(1, 4), Rational(1, 8)});
  CHECK_THROWS_AS(r.eval_tau({Rational(1), Rational(1)}), ArithmeticError);
  CHECK(r.lambda_coefficient(1) == RatFunc(one(nt), (t(nt, 1) - t(nt, 0)).pow(3)));
}
