#pragma once

#include "sgw/exact/poly.hpp"

namespace sgw {

/// Greatest common divisor of two lambda-free polynomials over Q, by
/// recursive primitive pseudo-remainder sequences. The result has coprime
/// integer coefficients and a positive leading coefficient; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Exact quotient a / b. Throws ArithmeticError when b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);

/// Scales p to coprime integer coefficients with positive leading term.
Poly primitive_normalized(const Poly& p);

}  // namespace sgw
