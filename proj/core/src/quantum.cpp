#include "sgw/quantum.hpp"

#include <sstream>

#include "sgw/errors.hpp"
#include "sgw/localize.hpp"
#include "sgw/point_sgw.hpp"

namespace sgw {

namespace {

void accumulate(KappaSeries& s, int exp, const Rational& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = s.try_emplace(exp, v);
  if (inserted) return;
  it->second += v;
  if (it->second.is_zero()) s.erase(it);
}

std::string series_string(const KappaSeries& s) {
  std::string out;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c.sign() < 0;
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    const std::string mag = c.abs().to_string();
    if (e == 0) {
      out += mag;
    } else {
      if (!c.abs().is_one()) out += mag + "*";
      out += "kappa^" + std::to_string(e);
    }
  }
  return out;
}

// Lambda^a * Lambda^b as a q-truncated element, via the degree-0 and
// degree-1 three-point invariants.
QElement star_basis(int n, int a, int b, Localizer& loc) {
  QElement out(n);
  const PairingMatrix pairing{n};
  for (int c = 0; c <= n; ++c) {
    const int dual = n - c;
    if (pairing.g_inv(c, dual) == 0) continue;
    // degree zero: kappa^{r_{3,0}} = kappa
    const Invariant i0 = mapping_to_point(n, {a, b, c});
    if (!i0.is_zero()) out.add(0, dual, i0.kappa_exp() + 1, i0.coefficient());
    const LocalizationJob job = LocalizationJob::make(n, 3, {a, b, c});
    const Invariant i1 = loc.invariant(job);
    if (!i1.is_zero()) out.add(1, dual, i1.kappa_exp() + job.rank(), i1.coefficient());
  }
  return out;
}

}  // namespace

QElement::QElement(int n) : n_(n) {
  if (n < 1) throw DomainError("n must be >= 1");
  for (auto& v : coeffs_) v.assign(static_cast<std::size_t>(n) + 1, KappaSeries{});
}

QElement QElement::basis(int n, int power) {
  QElement e(n);
  e.add(0, power, 0, Rational(1));
  return e;
}

const KappaSeries& QElement::coeff(int q, int power) const {
  if (q < 0 || q > 1 || power < 0 || power > n_) throw DomainError("QElement slot out of range");
  return coeffs_[static_cast<std::size_t>(q)][static_cast<std::size_t>(power)];
}

void QElement::add(int q, int power, int kappa_exp, const Rational& value) {
  if (q < 0 || q > 1 || power < 0 || power > n_) throw DomainError("QElement slot out of range");
  accumulate(coeffs_[static_cast<std::size_t>(q)][static_cast<std::size_t>(power)], kappa_exp, value);
}

bool QElement::is_zero() const {
  for (const auto& v : coeffs_) {
    for (const auto& s : v) {
      if (!s.empty()) return false;
    }
  }
  return true;
}

std::string QElement::to_string() const {
  std::vector<std::string> parts;
  for (int q = 0; q <= 1; ++q) {
    for (int p = n_; p >= 0; --p) {
      const KappaSeries& s = coeff(q, p);
      if (s.empty()) continue;
      std::string basis;
      if (p == 1) basis = "L";
      if (p > 1) basis = "L^" + std::to_string(p);
      if (q == 1) basis += basis.empty() ? "q" : "*q";
      const bool unit = s.size() == 1 && s.begin()->first == 0 && s.begin()->second.is_one();
      if (unit) {
        parts.push_back(basis.empty() ? "1" : basis);
      } else {
        parts.push_back("(" + series_string(s) + ")" + (basis.empty() ? "" : "*" + basis));
      }
    }
  }
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

std::vector<StructureRow> structure_table(int n) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (n > 5) throw UnsupportedError("structure tables are computed for n <= 5");
  Localizer loc;
  std::vector<StructureRow> rows;
  for (int a = 0; a <= n; ++a) {
    for (int b = a; b <= n; ++b) {
      StructureRow row{a, b, {}};
      for (int c = 0; c <= n; ++c) row.entries.emplace_back(c, loc.invariant(LocalizationJob::make(n, 3, {a, b, c})));
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

QElement star(int n, const QElement& x, const QElement& y) {
  if (x.n() != n || y.n() != n) throw DomainError("star product operands live on different P^n");
  Localizer loc;
  std::map<std::pair<int, int>, QElement> products;
  QElement out(n);
  for (int qx = 0; qx <= 1; ++qx) {
    for (int px = 0; px <= n; ++px) {
      const KappaSeries& sx = x.coeff(qx, px);
      if (sx.empty()) continue;
      for (int qy = 0; qx + qy <= 1; ++qy) {
        for (int py = 0; py <= n; ++py) {
          const KappaSeries& sy = y.coeff(qy, py);
          if (sy.empty()) continue;
          auto it = products.find({px, py});
          if (it == products.end()) it = products.emplace(std::pair{px, py}, star_basis(n, px, py, loc)).first;
          const QElement& basis_product = it->second;
          for (int q = 0; qx + qy + q <= 1; ++q) {
            for (int p = 0; p <= n; ++p) {
              for (const auto& [ez, cz] : basis_product.coeff(q, p)) {
                for (const auto& [ex, cx] : sx) {
                  for (const auto& [ey, cy] : sy) out.add(qx + qy + q, p, ex + ey + ez, cx * cy * cz);
                }
              }
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace sgw
