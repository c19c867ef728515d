#include "sgw/taut0.hpp"

#include <sstream>

#include "sgw/errors.hpp"

namespace sgw {

namespace {

Rational binomial(unsigned n, unsigned k) {
  Rational out(1);
  for (unsigned i = 1; i <= k; ++i) out = out * Rational(n + 1 - i, i);
  return out;
}

std::string kappa_psi_string(unsigned l, const std::map<unsigned, unsigned>& psi,
                             const std::map<unsigned, unsigned>& kappa) {
  std::vector<std::string> parts;
  for (auto it = psi.rbegin(); it != psi.rend(); ++it) {
    const auto [depth, power] = *it;
    std::string f = "psi" + std::to_string(l - depth);
    if (depth == 1) f = "f*" + f;
    if (depth > 1) f = "f*^" + std::to_string(depth) + " " + f;
    if (depth != 0) f = "(" + f + ")";
    if (power > 1) f += "^" + std::to_string(power);
    parts.push_back(std::move(f));
  }
  for (const auto& [index, power] : kappa) {
    std::string f = "kappa" + std::to_string(index);
    if (power > 1) f += "^" + std::to_string(power);
    parts.push_back(std::move(f));
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " " : "") + parts[i];
  return out;
}

// Expands prod_a (f^*kappa_a + psi_l^a)^{q_a}; calls emit(upstairs kappa
// powers that stay pulled back, extra psi_l power, binomial weight).
template <typename Emit>
void expand_kappa(std::map<unsigned, unsigned>::const_iterator it,
                  std::map<unsigned, unsigned>::const_iterator end,
                  std::map<unsigned, unsigned>& kept, unsigned psi_power, const Rational& weight,
                  Emit& emit) {
  if (it == end) {
    emit(kept, psi_power, weight);
    return;
  }
  const auto [index, power] = *it;
  auto next = std::next(it);
  for (unsigned j = 0; j <= power; ++j) {
    // j copies of psi_l^index, power - j copies of f^*kappa_index
    if (power - j > 0) kept[index] = power - j; else kept.erase(index);
    expand_kappa(next, end, kept, psi_power + j * index, weight * binomial(power, j), emit);
  }
  kept.erase(index);
}

}  // namespace

TautMonomial TautMonomial::chain(unsigned k, const std::vector<unsigned>& exps) {
  if (k < 3) throw DomainError("M̄_{0,k} needs k >= 3");
  if (exps.size() != k - 3) {
    throw DomainError("expected " + std::to_string(k - 3) + " exponents for k = " + std::to_string(k));
  }
  TautMonomial m;
  m.l = k;
  for (unsigned j = 4; j <= k; ++j) {
    const unsigned p = exps[j - 4];
    if (p != 0) m.psi[k - j] = p;
  }
  return m;
}

unsigned TautMonomial::degree() const {
  unsigned d = 0;
  for (const auto& [depth, p] : psi) d += p;
  for (const auto& [a, p] : kappa) d += a * p;
  return d;
}

std::string TautMonomial::to_string() const {
  const std::string body = kappa_psi_string(l, psi, kappa);
  if (body.empty()) return coefficient.to_string();
  if (coefficient.is_one()) return body;
  return coefficient.to_string() + " " + body;
}

TautExpr::TautExpr(unsigned l) : l_(l) {
  if (l < 3) throw DomainError("M̄_{0,l} needs l >= 3");
}

TautExpr::TautExpr(const TautMonomial& m) : TautExpr(m.l) { add(m); }

void TautExpr::add(const TautMonomial& m) {
  if (m.l != l_) throw DomainError("monomial on M̄_{0," + std::to_string(m.l) + "} added to M̄_{0," +
                                   std::to_string(l_) + "}");
  Key key;
  for (const auto& [depth, p] : m.psi) {
    if (depth + 3 > l_) throw DomainError("pull depth " + std::to_string(depth) + " too large on M̄_{0," + std::to_string(l_) + "}");
    if (p != 0) key.first[depth] = p;
  }
  Rational coeff = m.coefficient;
  for (const auto& [a, p] : m.kappa) {
    if (p == 0) continue;
    if (a == 0) {
      coeff *= Rational(static_cast<std::int64_t>(l_) - 2).pow(static_cast<int>(p));
    } else {
      key.second[a] = p;
    }
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

std::vector<TautMonomial> TautExpr::monomials() const {
  std::vector<TautMonomial> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.push_back({l_, key.first, key.second, c});
  return out;
}

Rational TautExpr::scalar_part() const {
  const auto it = terms_.find(Key{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string TautExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& m : monomials()) {
    const std::string body = kappa_psi_string(l_, m.psi, m.kappa);
    const bool negative = m.coefficient.sign() < 0;
    const Rational mag = m.coefficient.abs();
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    if (body.empty()) {
      os << mag;
    } else {
      if (!mag.is_one()) os << mag << ' ';
      os << body;
    }
  }
  return os.str();
}

TautExpr& TautExpr::operator+=(const TautExpr& rhs) {
  for (const auto& m : rhs.monomials()) add(m);
  return *this;
}

TautExpr& TautExpr::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

TautExpr pushforward_step(const TautExpr& e) {
  const unsigned l = e.l();
  if (l <= 3) throw DomainError("already on M̄_{0,3}");
  TautExpr out(l - 1);
  for (const TautMonomial& m : e.monomials()) {
    unsigned base_power = 0;
    std::map<unsigned, unsigned> lowered;
    for (const auto& [depth, p] : m.psi) {
      if (depth == 0) base_power = p; else lowered[depth - 1] = p;
    }
    std::map<unsigned, unsigned> kept;
    auto emit = [&](const std::map<unsigned, unsigned>& pulled, unsigned s, const Rational& w) {
      // f_*(f^*X * psi_l^s) = X * kappa_{s-1}
      if (s == 0) return;
      TautMonomial down{l - 1, lowered, pulled, m.coefficient * w};
      down.kappa[s - 1] += 1;
      out.add(down);
    };
    expand_kappa(m.kappa.begin(), m.kappa.end(), kept, base_power, Rational(1), emit);
  }
  return out;
}

Rational integrate(const TautExpr& e) {
  TautExpr cur = e;
  while (cur.l() > 3 && !cur.is_zero()) cur = pushforward_step(cur);
  return cur.scalar_part();
}

}  // namespace sgw
