#include "sgw/invariant.hpp"

#include "sgw/errors.hpp"

namespace sgw {

Invariant::Invariant(const Rational& coefficient, int kappa_exp) {
  if (coefficient.is_zero()) return;
  coefficient_ = coefficient;
  kappa_exp_ = kappa_exp;
}

const Rational& Invariant::coefficient() const {
  if (!coefficient_) throw DomainError("zero invariant has no coefficient");
  return *coefficient_;
}

int Invariant::kappa_exp() const {
  if (!coefficient_) throw DomainError("zero invariant has no kappa exponent");
  return kappa_exp_;
}

std::string Invariant::to_string() const {
  if (!coefficient_) return "0";
  return coefficient_->to_string() + " * kappa^" + std::to_string(kappa_exp_);
}

}  // namespace sgw
