#include "sgw/point_sgw.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sgw/errors.hpp"
#include "sgw/taut0.hpp"

namespace sgw {

namespace {

void compose(unsigned k, bool prune, unsigned pos, unsigned used, std::vector<unsigned>& parts,
             const std::function<void(const std::vector<unsigned>&)>& visit) {
  const unsigned total = k - 3;
  if (pos == parts.size()) {
    if (used == total) visit(parts);
    return;
  }
  // parts[pos] is i_{pos+4}; the prefix through it lives on M̄_{0,pos+4}
  const unsigned cap = prune ? std::min(total, pos + 1) : total;
  for (unsigned v = 0; used + v <= cap; ++v) {
    parts[pos] = v;
    compose(k, prune, pos + 1, used + v, parts, visit);
  }
}

}  // namespace

void for_each_composition(unsigned k, bool prune,
                          const std::function<void(const std::vector<unsigned>&)>& visit) {
  if (k < 3) throw DomainError("k must be >= 3");
  std::vector<unsigned> parts(k - 3, 0);
  compose(k, prune, 0, 0, parts, visit);
}

Rational point_composition_sum(unsigned k, bool prune) {
  Rational sum;
  for_each_composition(k, prune, [&](const std::vector<unsigned>& exps) {
    sum += integrate(TautExpr(TautMonomial::chain(k, exps)));
  });
  return sum;
}

Invariant sgw_point(int k) {
  if (k < 3) throw DomainError("k must be >= 3");
  const auto uk = static_cast<unsigned>(k);
  Rational scale = Rational(-1, 2).pow(k - 3);
  return Invariant(scale * point_composition_sum(uk), 5 - 2 * k);
}

Invariant mapping_to_point(int n, const std::vector<int>& classes) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (classes.size() < 3) throw DomainError("mapping to a point needs k >= 3 insertions");
  for (int a : classes) {
    if (a < 0 || a > n) {
      throw DomainError("class exponent " + std::to_string(a) + " outside [0, " + std::to_string(n) + "]");
    }
  }
  const int total = std::accumulate(classes.begin(), classes.end(), 0);
  if (total != n) return Invariant::zero();
  return sgw_point(static_cast<int>(classes.size()));
}

}  // namespace sgw
