#include "funksphere/funk.hpp"

#include <stdexcept>

namespace funksphere {

namespace {

Rational two_pow(unsigned e) { return Rational(mpz_class(1) << e); }

std::vector<Polynomial> laplacian_powers(const Polynomial& p, unsigned up_to) {
  std::vector<Polynomial> laps;
  laps.reserve(up_to + 1);
  laps.push_back(p);
  for (unsigned i = 1; i <= up_to; ++i) laps.push_back(laplacian(laps.back()));
  return laps;
}

void require_even(const SpherePolynomial& f, const char* who) {
  if (!f.is_zero() && f.parity != Parity::Even)
    throw std::domain_error(std::string(who) + ": input must be even");
}

}  // namespace

Parity polynomial_parity(const Polynomial& p) {
  bool even = false, odd = false;
  for (const auto& [mono, c] : p.terms())
    (total_degree(mono) % 2 == 0 ? even : odd) = true;
  if (odd && even) return Parity::Mixed;
  return odd ? Parity::Odd : Parity::Even;
}

SpherePolynomial SpherePolynomial::make(const Polynomial& p) {
  return make_scaled(ExactScalar::one(), p);
}

SpherePolynomial SpherePolynomial::make_scaled(const ExactScalar& s, const Polynomial& p) {
  SpherePolynomial out(p.dim());
  if (s.is_zero()) return out;
  out.poly = reduce_on_sphere(p);
  if (out.poly.is_zero()) return out;
  Rational lead = out.poly.terms().begin()->second;
  out.poly = out.poly.scale(Rational(1) / lead);
  out.scale = s.scale(lead);
  out.parity = polynomial_parity(out.poly);
  return out;
}

std::string SpherePolynomial::str() const {
  if (is_zero()) return "0";
  return scale.str() + " * (" + poly.str() + ")";
}

SpherePolynomial funk_transform(const SpherePolynomial& f) {
  int m = f.dim();
  if (m < 2) throw std::domain_error("funk_transform: dimension must be at least 2");
  Polynomial acc(m);
  for (auto& [d, part] : homogeneous_parts(f.poly)) {
    if (d % 2 != 0) continue;  // odd harmonics are in the kernel
    unsigned t = d / 2;
    auto laps = laplacian_powers(part, t);
    Polynomial inner(m);
    for (unsigned j = 0; j <= t; ++j) {
      Rational c = Rational(binomial(t, j) * factorial(2 * j));
      if (j % 2 == 1) c = -c;
      inner += laps[t - j].scale(c);
    }
    Rational r = Rational(1) / (two_pow(2 * t) * Rational(factorial(t)) * pochhammer(m - 1, t));
    acc += inner.scale(r);
  }
  return SpherePolynomial::make_scaled(f.scale * sphere_surface_area(m - 1), acc);
}

ExactScalar funk_eigenvalue(int m, unsigned k) {
  if (m < 2) throw std::domain_error("funk_eigenvalue: dimension must be at least 2");
  ExactScalar v = ExactScalar(Rational(2), m - 2) * gamma_half(2 * k + 1) /
                  gamma_half(m - 1 + 2 * static_cast<long>(k));
  return (k % 2 == 0) ? v : -v;
}

SpherePolynomial dual_transform(const SpherePolynomial& phi) {
  SpherePolynomial hat = funk_transform(phi);
  return SpherePolynomial::make_scaled(hat.scale / sphere_surface_area(phi.dim() - 1), hat.poly);
}

SpherePolynomial dual_at_distance(const SpherePolynomial& phi, const Rational& p) {
  int m = phi.dim();
  if (m < 2) throw std::domain_error("dual_at_distance: dimension must be at least 2");
  if (p.sign() < 0 || p >= Rational(1))
    throw std::domain_error("dual_at_distance: requires 0 <= p < 1");
  Rational q2 = Rational(1) - p * p;
  Polynomial acc(m);
  for (auto& [d, part] : homogeneous_parts(phi.poly)) {
    auto laps = laplacian_powers(part, d / 2);
    for (unsigned k = 0; 2 * k <= d; ++k) {
      Rational outer = q2.pow(k) * p.pow(d - 2 * k) /
                       (two_pow(2 * k) * Rational(factorial(k)) * pochhammer(m - 1, k));
      if (outer.is_zero()) continue;
      Polynomial inner(m);
      for (unsigned i = 0; i <= k; ++i) {
        Rational c(binomial(k, i) * factorial(d - 2 * k + 2 * i), factorial(d - 2 * k));
        if (i % 2 == 1) c = -c;
        inner += laps[k - i].scale(c);
      }
      acc += inner.scale(outer);
    }
  }
  return SpherePolynomial::make_scaled(phi.scale, acc);
}

std::vector<long> p_polynomial_roots(int m) {
  if (m < 2 || m % 2 != 0)
    throw std::domain_error("p_polynomial_roots: dimension must be even and at least 2");
  std::vector<long> roots;
  for (long j = 1; j <= (m - 2) / 2; ++j) roots.push_back((m - 2 * j - 1) * (2 * j - 1));
  return roots;
}

Rational p_polynomial_at(int m, long z) {
  Rational prod(1);
  for (long c : p_polynomial_roots(m)) prod *= Rational(z - c);
  return prod;
}

ExactScalar helgason_constant(int m) {
  if (m < 2 || m % 2 != 0)
    throw std::domain_error("helgason_constant: dimension must be even and at least 2");
  Rational c = Rational(2) * Rational(-4).pow((m - 2) / 2);
  return ExactScalar(c, m - 2) * gamma_half(m - 1) / gamma_half(1);
}

Rational helgason_ckm(int m, unsigned k) {
  if (m < 2 || m % 2 != 0)
    throw std::domain_error("helgason_ckm: dimension must be even and at least 2");
  unsigned long n = static_cast<unsigned long>((m - 2) / 2);
  return Rational(4).pow(m / 2 - 1) * pochhammer(3 - m - 2 * static_cast<long>(k), n) *
         pochhammer(1 + 2 * static_cast<long>(k), n);
}

SpherePolynomial invert_even_m(const SpherePolynomial& fhat) {
  int m = fhat.dim();
  if (m < 2 || m % 2 != 0)
    throw std::domain_error("invert_even_m: dimension must be even and at least 2");
  require_even(fhat, "invert_even_m");
  SpherePolynomial g = dual_transform(fhat);
  Polynomial acc(m);
  for (auto& [d, part] : homogeneous_parts(g.poly))
    acc += part.scale(p_polynomial_at(m, lb_eigenvalue(d, m)));
  return SpherePolynomial::make_scaled(g.scale / helgason_constant(m), acc);
}

ExactScalar ikj_term(int m, unsigned k, unsigned j) {
  if (m < 3) throw std::domain_error("ikj_term: dimension must be at least 3");
  if (j > k) throw std::domain_error("ikj_term: requires j <= k");
  ExactScalar v = gamma_half(m - 2) * gamma_half(2 * j + m - 1) /
                  (ExactScalar(Rational(2)) * gamma_half(2 * k + 1));
  return v.scale(pochhammer(2 - m, k - j));
}

ExactScalar ikj_term_sum(int m, unsigned k, unsigned j) {
  if (m < 3) throw std::domain_error("ikj_term_sum: dimension must be at least 3");
  if (j > k) throw std::domain_error("ikj_term_sum: requires j <= k");
  ExactSum sum;
  for (unsigned l = 0; l <= k - j; ++l) {
    ExactScalar t = gamma_half(2 * (j + l) + m - 1) / gamma_half(2 * (j + l) + 1);
    Rational c = Rational(binomial(k - j, l));
    if (l % 2 == 1) c = -c;
    sum.add(t.scale(c));
  }
  auto s = sum.single();
  if (!s) throw std::logic_error("ikj_term_sum: summands left their common class");
  return gamma_half(m - 2).scale(Rational(1, 2)) * *s;
}

GeneralInversion invert_general_full(const SpherePolynomial& fhat) {
  int m = fhat.dim();
  if (m < 3) throw std::domain_error("invert_general: dimension must be at least 3");
  require_even(fhat, "invert_general");
  Polynomial acc(m);
  for (auto& [d, part] : homogeneous_parts(fhat.poly)) {
    if (d % 2 != 0)
      throw std::domain_error("invert_general: input must be even");
    unsigned k = d / 2;
    ExactSum sum;
    for (unsigned j = 0; j <= k; ++j) {
      Rational c = Rational(mpz_class(1),
                            two_pow(2 * j).num() * factorial(j) * factorial(2 * (k - j)));
      if (j % 2 == 1) c = -c;
      sum.add((ikj_term(m, k, j) / gamma_half(m - 1 + 2 * static_cast<long>(j))).scale(c));
    }
    auto s = sum.single();
    if (!s) throw std::logic_error("invert_general: summands left their common class");
    ExactScalar factor = ExactScalar(Rational(2 * factorial(2 * k)), m - 1) /
                         sphere_surface_area(m - 1) * *s;
    acc += part.scale(factor.as_rational());
  }
  SpherePolynomial F = SpherePolynomial::make_scaled(fhat.scale, acc);
  ExactScalar back = ExactScalar(two_pow(m - 2) / Rational(factorial(m - 3))) /
                     sphere_surface_area(m - 1);
  SpherePolynomial f = SpherePolynomial::make_scaled(F.scale * back, F.poly);
  return GeneralInversion(std::move(f), std::move(F));
}

SpherePolynomial invert_general(const SpherePolynomial& fhat) {
  return invert_general_full(fhat).f;
}

}  // namespace funksphere
