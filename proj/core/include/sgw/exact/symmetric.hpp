#pragma once

#include <cstddef>
#include <vector>

#include "sgw/exact/lin_form.hpp"
#include "sgw/exact/poly.hpp"

namespace sgw {

/// Complete homogeneous symmetric polynomial h_c(w_1, ..., w_r), the sum of
/// all degree-c monomials in the weights, with lambda^2 = 0.
///
/// (-1)^c h_c is the coefficient of kappa^{-r-c} in prod_i (kappa + w_i)^{-1}.
Poly complete_homogeneous(unsigned c, const std::vector<LinForm>& weights, std::size_t num_tau);

/// Same quantity for weights already evaluated at a torus point.
DualRational complete_homogeneous(unsigned c, const std::vector<DualRational>& weights);

}  // namespace sgw
