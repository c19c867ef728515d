#include "sgw/exact/lin_form.hpp"

#include <algorithm>
#include <tuple>

#include "sgw/errors.hpp"

namespace sgw {

namespace {

std::map<std::size_t, Rational> nonzero(const std::map<std::size_t, Rational>& m) {
  std::map<std::size_t, Rational> out;
  for (const auto& [i, c] : m) {
    if (!c.is_zero()) out.emplace(i, c);
  }
  return out;
}

}  // namespace

LinForm LinForm::tau(std::size_t index, const Rational& coeff) {
  LinForm f;
  if (!coeff.is_zero()) f.tau_coeffs.emplace(index, coeff);
  return f;
}

LinForm LinForm::lambda(const Rational& coeff) {
  LinForm f;
  f.lambda_coeff = coeff;
  return f;
}

bool LinForm::is_zero() const {
  return lambda_coeff.is_zero() &&
         std::all_of(tau_coeffs.begin(), tau_coeffs.end(),
                     [](const auto& t) { return t.second.is_zero(); });
}

Poly LinForm::to_poly(std::size_t num_tau) const {
  Poly p(num_tau);
  for (const auto& [i, c] : tau_coeffs) {
    if (i >= num_tau) throw DimensionError("linear form uses t" + std::to_string(i));
    p += Poly::tau(num_tau, i) * c;
  }
  p += Poly::lambda(num_tau) * lambda_coeff;
  return p;
}

DualRational LinForm::eval_tau(const std::vector<Rational>& tau) const {
  DualRational out{Rational(0), lambda_coeff};
  for (const auto& [i, c] : tau_coeffs) {
    if (i >= tau.size()) throw DimensionError("linear form uses t" + std::to_string(i));
    out.value += c * tau[i];
  }
  return out;
}

std::string LinForm::to_string() const {
  std::string out;
  auto append = [&out](const Rational& c, const std::string& name) {
    if (c.is_zero()) return;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (!mag.is_one()) out += mag.to_string() + "*";
    out += name;
  };
  for (const auto& [i, c] : tau_coeffs) append(c, "t" + std::to_string(i));
  append(lambda_coeff, "lambda");
  return out.empty() ? "0" : out;
}

LinForm& LinForm::operator+=(const LinForm& rhs) {
  for (const auto& [i, c] : rhs.tau_coeffs) tau_coeffs[i] += c;
  lambda_coeff += rhs.lambda_coeff;
  tau_coeffs = nonzero(tau_coeffs);
  return *this;
}

LinForm operator-(const LinForm& lhs, const LinForm& rhs) {
  return lhs + Rational(-1) * rhs;
}

LinForm operator*(const Rational& s, const LinForm& f) {
  LinForm out;
  for (const auto& [i, c] : f.tau_coeffs) out.tau_coeffs[i] = s * c;
  out.tau_coeffs = nonzero(out.tau_coeffs);
  out.lambda_coeff = s * f.lambda_coeff;
  return out;
}

bool operator==(const LinForm& lhs, const LinForm& rhs) {
  return lhs.lambda_coeff == rhs.lambda_coeff && nonzero(lhs.tau_coeffs) == nonzero(rhs.tau_coeffs);
}

bool operator<(const LinForm& lhs, const LinForm& rhs) {
  const auto l = nonzero(lhs.tau_coeffs);
  const auto r = nonzero(rhs.tau_coeffs);
  return std::tie(l, lhs.lambda_coeff) < std::tie(r, rhs.lambda_coeff);
}

}  // namespace sgw
