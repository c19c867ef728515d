#pragma once

#include <functional>
#include <vector>

#include "sgw/exact/rational.hpp"
#include "sgw/invariant.hpp"

namespace sgw {

/// Calls visit(i_4, ..., i_k) for every composition of k - 3 into k - 3
/// nonnegative parts, in lexicographic order. With prune set, compositions
/// having a prefix i_4 + ... + i_l > l - 3 are skipped: their integrals
/// vanish for degree reasons.
void for_each_composition(unsigned k, bool prune,
                          const std::function<void(const std::vector<unsigned>&)>& visit);

/// Sum over compositions of the chain-monomial integrals on M̄_{0,k}.
Rational point_composition_sum(unsigned k, bool prune = true);

/// Super GW number of a point with k >= 3 marked points:
/// (-1)^{k-3} / 2^{k-3} * point_composition_sum(k) * kappa^{5-2k}.
Invariant sgw_point(int k);

/// Degree-zero invariant of P^n with insertions Lambda^{a_i}: the point
/// value times the integral of the cup product over P^n.
Invariant mapping_to_point(int n, const std::vector<int>& classes);

}  // namespace sgw
