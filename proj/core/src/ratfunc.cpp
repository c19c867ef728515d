#include "sgw/exact/ratfunc.hpp"

#include "sgw/errors.hpp"
#include "sgw/exact/gcd.hpp"

namespace sgw {

RatFunc::RatFunc(std::size_t num_tau) : num_(num_tau), den_(Poly::constant(num_tau, Rational(1))) {}

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.num_tau(), Rational(1))) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.num_tau() != den_.num_tau()) throw DimensionError("numerator and denominator rings differ");
  if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
  if (den_.has_lambda()) throw DomainError("denominator must be lambda-free");
  normalize();
}

RatFunc RatFunc::constant(std::size_t num_tau, const Rational& value) {
  return RatFunc(Poly::constant(num_tau, value));
}

void RatFunc::normalize() {
  const std::size_t nt = num_.num_tau();
  if (num_.is_zero()) {
    den_ = Poly::constant(nt, Rational(1));
    return;
  }
  if (nt <= kFullGcdMaxTau && !den_.is_constant()) {
    Poly g = poly_gcd(den_, num_.lambda_coefficient(0));
    g = poly_gcd(g, num_.lambda_coefficient(1));
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  Rational scale = den_.content();
  if (den_.leading_coefficient().sign() < 0) scale = -scale;
  if (!scale.is_one()) {
    const Rational inv = scale.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

bool RatFunc::is_constant() const { return den_.is_constant() && num_.is_constant(); }

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw DomainError("rational function is not constant: " + to_string());
  return num_.constant_term() / den_.constant_term();
}

RatFunc RatFunc::lambda_coefficient(unsigned e) const {
  return RatFunc(num_.lambda_coefficient(e), den_);
}

RatFunc RatFunc::inverse() const {
  const Poly a = num_.lambda_coefficient(0);
  if (a.is_zero()) throw ArithmeticError("inverse of a nilpotent rational function");
  if (!num_.has_lambda()) return RatFunc(den_, a);
  const Poly b = num_.lambda_coefficient(1);
  const Poly conj = a - Poly::lambda(a.num_tau()) * b;
  return RatFunc(den_ * conj, a * a);
}

DualRational RatFunc::eval_tau(const std::vector<Rational>& tau) const {
  const Rational d = den_.eval(tau, Rational(0));
  if (d.is_zero()) throw ArithmeticError("denominator vanishes at the evaluation point");
  const DualRational n = num_.eval_tau(tau);
  const Rational inv = d.inverse();
  return {n.value * inv, n.lambda * inv};
}

std::string RatFunc::to_string() const {
  if (den_.is_constant() && den_.constant_term().is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (den_ == rhs.den_) {
    *this = RatFunc(num_ + rhs.num_, den_);
  } else {
    *this = RatFunc(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  }
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  *this = RatFunc(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

RatFunc operator-(const RatFunc& value) {
  RatFunc out = value;
  out.num_ = -out.num_;
  return out;
}

RatFunc operator-(RatFunc lhs, const RatFunc& rhs) { return lhs += -rhs; }

bool operator==(const RatFunc& lhs, const RatFunc& rhs) {
  // Cross-multiplication keeps equality exact even when the ring is too
  // large for full gcd normalization.
  return lhs.num_ * rhs.den_ == rhs.num_ * lhs.den_;
}

RatFunc ratfunc_add(const RatFunc& a, const RatFunc& b) { return a + b; }
RatFunc ratfunc_mul(const RatFunc& a, const RatFunc& b) { return a * b; }
RatFunc ratfunc_neg(const RatFunc& a) { return -a; }

}  // namespace sgw
