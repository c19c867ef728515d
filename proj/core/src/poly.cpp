#include "sgw/exact/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sgw/errors.hpp"

namespace sgw {

namespace {

std::uint32_t degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

}  // namespace

bool GrlexDescending::operator()(const Exponents& lhs, const Exponents& rhs) const {
  const auto dl = degree_of(lhs);
  const auto dr = degree_of(rhs);
  if (dl != dr) return dl > dr;
  // lambda is the largest variable and sits in the last slot, so lex
  // comparison runs from the back.
  for (std::size_t i = lhs.size(); i-- > 0;) {
    if (lhs[i] != rhs[i]) return lhs[i] > rhs[i];
  }
  return false;
}

Poly::Poly(std::size_t num_tau) : num_tau_(num_tau) {}

Poly Poly::constant(std::size_t num_tau, const Rational& value) {
  Poly p(num_tau);
  p.add_term(Exponents(num_tau + 1, 0), value);
  return p;
}

Poly Poly::tau(std::size_t num_tau, std::size_t index) {
  if (index >= num_tau) throw DimensionError("tau index out of range");
  Exponents e(num_tau + 1, 0);
  e[index] = 1;
  return monomial(num_tau, std::move(e), Rational(1));
}

Poly Poly::lambda(std::size_t num_tau) {
  Exponents e(num_tau + 1, 0);
  e[num_tau] = 1;
  return monomial(num_tau, std::move(e), Rational(1));
}

Poly Poly::monomial(std::size_t num_tau, Exponents exps, const Rational& coeff) {
  if (exps.size() != num_tau + 1) throw DimensionError("exponent vector has wrong length");
  Poly p(num_tau);
  p.add_term(exps, coeff);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

bool Poly::has_lambda() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [this](const auto& t) { return t.first[num_tau_] != 0; });
}

Rational Poly::constant_term() const {
  const auto it = terms_.find(Exponents(num_tau_ + 1, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree_of(terms_.begin()->first));
}

int Poly::degree_in(std::size_t var) const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(e[var]));
  return best;
}

const Exponents& Poly::leading_exponents() const {
  if (terms_.empty()) throw ArithmeticError("leading term of zero polynomial");
  return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw ArithmeticError("leading term of zero polynomial");
  return terms_.begin()->second;
}

Poly Poly::lambda_coefficient(unsigned e) const {
  Poly out(num_tau_);
  for (const auto& [exps, c] : terms_) {
    if (exps[num_tau_] != e) continue;
    Exponents stripped = exps;
    stripped[num_tau_] = 0;
    out.terms_.emplace(std::move(stripped), c);
  }
  return out;
}

Poly Poly::coefficient_in(std::size_t var, std::uint32_t e) const {
  Poly out(num_tau_);
  for (const auto& [exps, c] : terms_) {
    if (exps[var] != e) continue;
    Exponents stripped = exps;
    stripped[var] = 0;
    out.terms_.emplace(std::move(stripped), c);
  }
  return out;
}

Rational Poly::content() const {
  if (terms_.empty()) return Rational(0);
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    num_gcd = gcd(num_gcd, c.numerator());
    den_lcm = lcm(den_lcm, c.denominator());
  }
  return Rational(mpq_class(num_gcd, den_lcm));
}

namespace {

// powers[i][e] = tau_i^e for every exponent that occurs
std::vector<std::vector<Rational>> power_table(const std::vector<Rational>& tau, std::size_t num_tau,
                                               const std::vector<std::uint32_t>& max_exp) {
  std::vector<std::vector<Rational>> powers(num_tau);
  for (std::size_t i = 0; i < num_tau; ++i) {
    powers[i].reserve(max_exp[i] + 1);
    powers[i].emplace_back(1);
    for (std::uint32_t e = 1; e <= max_exp[i]; ++e) powers[i].push_back(powers[i].back() * tau[i]);
  }
  return powers;
}

}  // namespace

std::vector<std::uint32_t> Poly::max_exponents() const {
  std::vector<std::uint32_t> out(num_tau_, 0);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < num_tau_; ++i) out[i] = std::max(out[i], e[i]);
  }
  return out;
}

Rational Poly::eval(const std::vector<Rational>& tau, const Rational& lambda_value) const {
  const DualRational v = eval_tau(tau);
  return v.lambda.is_zero() ? v.value : v.value + v.lambda * lambda_value;
}

DualRational Poly::eval_tau(const std::vector<Rational>& tau) const {
  if (tau.size() != num_tau_) throw DimensionError("tau vector has wrong length");
  const auto powers = power_table(tau, num_tau_, max_exponents());
  DualRational out;
  Rational term;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < num_tau_; ++i) {
      if (e[i] != 0) term *= powers[i][e[i]];
    }
    (e[num_tau_] == 0 ? out.value : out.lambda) += term;
  }
  return out;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(num_tau_, Rational(1));
  Poly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    for (std::size_t i = 0; i <= num_tau_; ++i) {
      if (e[i] == 0) continue;
      std::string name = i == num_tau_ ? "lambda" : "t" + std::to_string(i);
      if (e[i] > 1) name += "^" + std::to_string(e[i]);
      factors.push_back(std::move(name));
    }
    if (factors.empty()) {
      os << mag.to_string();
      continue;
    }
    if (!mag.is_one()) os << mag.to_string() << '*';
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i != 0) os << '*';
      os << factors[i];
    }
  }
  return os.str();
}

void Poly::add_term(const Exponents& exps, const Rational& coeff) {
  if (coeff.is_zero()) return;
  if (exps.size() != num_tau_ + 1) throw DimensionError("exponent vector has wrong length");
  if (exps[num_tau_] >= 2) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void Poly::check_same_ring(const Poly& other) const {
  if (num_tau_ != other.num_tau_) {
    throw DimensionError("polynomials over " + std::to_string(num_tau_) + " and " +
                         std::to_string(other.num_tau_) + " tau variables");
  }
}

Poly& Poly::operator+=(const Poly& rhs) {
  check_same_ring(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  check_same_ring(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly& Poly::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= rhs;
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  lhs.check_same_ring(rhs);
  const std::size_t lam = lhs.num_tau_;
  Poly out(lam);
  Exponents e(lam + 1);
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      if (el[lam] + er[lam] >= 2) continue;
      for (std::size_t i = 0; i <= lam; ++i) e[i] = el[i] + er[i];
      out.add_term(e, cl * cr);
    }
  }
  return out;
}

Poly operator-(Poly value) {
  for (auto& [e, c] : value.terms_) c = -c;
  return value;
}

Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

Rational poly_eval(const Poly& p, const std::vector<Rational>& tau, const Rational& lambda_value) {
  return p.eval(tau, lambda_value);
}

}  // namespace sgw
