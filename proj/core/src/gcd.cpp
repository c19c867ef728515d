#include "sgw/exact/gcd.hpp"

#include "sgw/errors.hpp"

namespace sgw {

namespace {

bool divides_monomial(const Exponents& divisor, const Exponents& e) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (divisor[i] > e[i]) return false;
  }
  return true;
}

int main_variable(const Poly& p) {
  for (std::size_t v = p.num_tau(); v-- > 0;) {
    if (p.degree_in(v) > 0) return static_cast<int>(v);
  }
  return -1;
}

Poly var_power(std::size_t num_tau, std::size_t var, std::uint32_t e) {
  Exponents exps(num_tau + 1, 0);
  exps[var] = e;
  return Poly::monomial(num_tau, std::move(exps), Rational(1));
}

Poly leading_in(const Poly& p, std::size_t var) {
  return p.coefficient_in(var, static_cast<std::uint32_t>(p.degree_in(var)));
}

Poly gcd_rec(const Poly& a, const Poly& b);

// gcd of the coefficients of p viewed as a polynomial in var
Poly content_in(const Poly& p, std::size_t var) {
  Poly g(p.num_tau());
  for (int e = p.degree_in(var); e >= 0; --e) {
    const Poly c = p.coefficient_in(var, static_cast<std::uint32_t>(e));
    if (c.is_zero()) continue;
    g = gcd_rec(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Poly pseudo_remainder(Poly a, const Poly& b, std::size_t var) {
  const int db = b.degree_in(var);
  const Poly lb = leading_in(b, var);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const int da = a.degree_in(var);
    const Poly la = leading_in(a, var);
    a = lb * a - la * var_power(a.num_tau(), var, static_cast<std::uint32_t>(da - db)) * b;
  }
  return a;
}

Poly gcd_rec(const Poly& a, const Poly& b) {
  if (a.is_zero()) return primitive_normalized(b);
  if (b.is_zero()) return primitive_normalized(a);
  const int va = main_variable(a);
  const int vb = main_variable(b);
  const int v = std::max(va, vb);
  if (v < 0) return Poly::constant(a.num_tau(), Rational(1));
  const auto var = static_cast<std::size_t>(v);

  const Poly ca = va == v ? content_in(a, var) : a;
  const Poly cb = vb == v ? content_in(b, var) : b;
  const Poly c = gcd_rec(ca, cb);
  if (va != v || vb != v) return c;

  Poly p = divide_exact(a, ca);
  Poly q = divide_exact(b, cb);
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
  while (!q.is_zero() && q.degree_in(var) > 0) {
    Poly r = pseudo_remainder(p, q, var);
    p = std::move(q);
    q = r.is_zero() ? r : divide_exact(r, content_in(r, var));
  }
  // q == 0: p is the primitive gcd. Otherwise q is free of var: coprime.
  if (!q.is_zero()) return c;
  return primitive_normalized(c * divide_exact(p, content_in(p, var)));
}

}  // namespace

Poly primitive_normalized(const Poly& p) {
  if (p.is_zero()) return p;
  Rational scale = p.content();
  if (p.leading_coefficient().sign() < 0) scale = -scale;
  return p * scale.inverse();
}

Poly divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ArithmeticError("division by zero polynomial");
  Poly rem = a;
  Poly quot(a.num_tau());
  const Exponents& lb = b.leading_exponents();
  const Rational& cb = b.leading_coefficient();
  Exponents e(lb.size());
  while (!rem.is_zero()) {
    const Exponents& lr = rem.leading_exponents();
    if (!divides_monomial(lb, lr)) throw ArithmeticError("inexact polynomial division");
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = lr[i] - lb[i];
    const Poly step = Poly::monomial(a.num_tau(), e, rem.leading_coefficient() / cb);
    quot += step;
    rem -= step * b;
  }
  return quot;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.num_tau() != b.num_tau()) throw DimensionError("gcd across different rings");
  if (a.has_lambda() || b.has_lambda()) throw DomainError("gcd of lambda-bearing polynomials");
  return gcd_rec(a, b);
}

}  // namespace sgw
