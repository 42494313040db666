#include "funksphere/pizzetti.hpp"

#include <stdexcept>

namespace funksphere {

namespace {

Rational constant_term(const Polynomial& p) {
  Monomial zero(p.dim(), 0);
  auto it = p.terms().find(zero);
  return it == p.terms().end() ? Rational(0) : it->second;
}

std::vector<Rational> scaled_point(const RationalPoint& omega, const Rational& p) {
  std::vector<Rational> pt;
  pt.reserve(omega.coords.size());
  for (const auto& c : omega.coords) pt.push_back(c * p);
  return pt;
}

Rational two_pow(unsigned e) { return Rational(mpz_class(1) << e); }

}  // namespace

RegionSpec RegionSpec::unit_sphere(int dim) {
  RegionSpec s;
  s.kind = Kind::UnitSphere;
  s.dim = dim;
  return s;
}

RegionSpec RegionSpec::r_sphere(int dim, Rational r) {
  RegionSpec s;
  s.kind = Kind::RSphere;
  s.dim = dim;
  s.r = std::move(r);
  return s;
}

RegionSpec RegionSpec::ball(int dim, Rational r) {
  RegionSpec s;
  s.kind = Kind::Ball;
  s.dim = dim;
  s.r = std::move(r);
  return s;
}

RegionSpec RegionSpec::subsphere(RationalPoint omega, Rational p) {
  RegionSpec s;
  s.kind = Kind::Subsphere;
  s.dim = omega.dim();
  s.omega = std::move(omega);
  s.p = std::move(p);
  return s;
}

RegionSpec RegionSpec::subball(RationalPoint omega, Rational p) {
  RegionSpec s = subsphere(std::move(omega), std::move(p));
  s.kind = Kind::Subball;
  return s;
}

RegionSpec RegionSpec::cap(RationalPoint omega, Rational p, CapSide side) {
  RegionSpec s = subsphere(std::move(omega), std::move(p));
  s.kind = side == CapSide::Upper ? Kind::CapUpper : Kind::CapLower;
  return s;
}

std::string RegionSpec::kind_name() const {
  switch (kind) {
    case Kind::UnitSphere: return "sphere";
    case Kind::RSphere: return "r-sphere";
    case Kind::Ball: return "ball";
    case Kind::Subsphere: return "subsphere";
    case Kind::Subball: return "subball";
    case Kind::CapUpper: return "cap-upper";
    case Kind::CapLower: return "cap-lower";
  }
  return "?";
}

void RegionSpec::validate() const {
  if (dim < 1) throw std::domain_error("RegionSpec: invalid dimension");
  switch (kind) {
    case Kind::RSphere:
    case Kind::Ball:
      if (r.sign() <= 0) throw std::domain_error("RegionSpec: radius must be positive");
      break;
    case Kind::Subsphere:
    case Kind::Subball:
    case Kind::CapUpper:
    case Kind::CapLower: {
      if (omega.dim() != dim) throw std::domain_error("RegionSpec: omega dimension mismatch");
      Rational s(0);
      for (const auto& c : omega.coords) s += c * c;
      if (s != Rational(1)) throw std::domain_error("RegionSpec: omega must be exactly unit");
      if (p.abs() >= Rational(1)) throw std::domain_error("RegionSpec: requires -1 < p < 1");
      break;
    }
    default:
      break;
  }
}

IntegralResult IntegralResult::from_exact(const ExactScalar& e) {
  IntegralResult r;
  r.exact = e;
  r.numeric = e.numeric();
  return r;
}

IntegralResult IntegralResult::from_numeric(Numeric v) {
  IntegralResult r;
  r.numeric = std::move(v);
  return r;
}

IntegralResult IntegralResult::operator+(const IntegralResult& o) const {
  if (exact && o.exact && exact->same_class(*o.exact)) return from_exact(*exact + *o.exact);
  return from_numeric(numeric + o.numeric);
}

IntegralResult IntegralResult::scaled(const ExactScalar& s) const {
  if (exact) return from_exact(*exact * s);
  return from_numeric(numeric * s.numeric());
}

Polynomial delta_minus_dirsq_power(const Polynomial& p, const RationalPoint& omega, unsigned k) {
  Polynomial r = p;
  for (unsigned i = 0; i < k && !r.is_zero(); ++i)
    r = laplacian(r) - dir_deriv_power(r, omega, 2);
  return r;
}

IntegralResult sphere_integral(const Polynomial& p, const Rational& r) {
  if (r.sign() <= 0) throw std::domain_error("sphere_integral: radius must be positive");
  int m = p.dim();
  ExactScalar sum = ExactScalar::zero();
  Polynomial q = p;
  for (unsigned k = 0; static_cast<int>(2 * k) <= std::max(p.degree(), 0); ++k) {
    if (k > 0) q = laplacian(q);
    Rational v = constant_term(q);
    if (!v.is_zero()) {
      ExactScalar c = ExactScalar(Rational(2), m) /
                      (gamma_half(m + 2 * static_cast<long>(k)) * ExactScalar(two_pow(2 * k) * Rational(factorial(k))));
      sum = sum + c.scale(v * r.pow(2 * k + m - 1));
    }
  }
  return IntegralResult::from_exact(sum);
}

IntegralResult ball_integral(const Polynomial& p, const Rational& r) {
  if (r.sign() <= 0) throw std::domain_error("ball_integral: radius must be positive");
  int m = p.dim();
  ExactScalar sum = ExactScalar::zero();
  Polynomial q = p;
  for (unsigned k = 0; static_cast<int>(2 * k) <= std::max(p.degree(), 0); ++k) {
    if (k > 0) q = laplacian(q);
    Rational v = constant_term(q);
    if (!v.is_zero()) {
      ExactScalar c = ExactScalar(Rational(1), m) /
                      (gamma_half(m + 2 + 2 * static_cast<long>(k)) * ExactScalar(two_pow(2 * k) * Rational(factorial(k))));
      sum = sum + c.scale(v * r.pow(2 * k + m));
    }
  }
  return IntegralResult::from_exact(sum);
}

namespace {

// Shared shape of the subsphere / sub-ball formulas: Pizzetti constants in
// dimension m-1 with the operator (Delta - <omega,d>^2) evaluated at p*omega,
// weighted by powers of 1 - p^2.
IntegralResult hyperplane_slice_integral(const Polynomial& poly, const RationalPoint& omega,
                                         const Rational& p, bool ball) {
  int m = poly.dim();
  if (omega.dim() != m) throw std::domain_error("hyperplane slice: dimension mismatch");
  Rational osq(0);
  for (const auto& c : omega.coords) osq += c * c;
  if (osq != Rational(1)) throw std::domain_error("hyperplane slice: omega must be exactly unit");
  if (p.abs() >= Rational(1)) throw std::domain_error("hyperplane slice: requires -1 < p < 1");

  Rational one_minus_p2 = Rational(1) - p * p;
  std::vector<Rational> at = scaled_point(omega, p);
  ExactScalar sum = ExactScalar::zero();
  Polynomial q = poly;
  for (unsigned k = 0; static_cast<int>(2 * k) <= std::max(poly.degree(), 0); ++k) {
    if (k > 0) q = laplacian(q) - dir_deriv_power(q, omega, 2);
    Rational v = evaluate(q, at);
    if (v.is_zero()) continue;
    ExactScalar c;
    // Weight exponent: k + m/2 - 1 (subsphere) or k + (m-1)/2 (sub-ball);
    // half powers of 1-p^2 go into the sqrt slot.
    long twice_exp;
    if (!ball) {
      c = ExactScalar(Rational(2), m - 1) /
          (gamma_half(m - 1 + 2 * static_cast<long>(k)) * ExactScalar(two_pow(2 * k) * Rational(factorial(k))));
      twice_exp = 2 * static_cast<long>(k) + m - 2;
    } else {
      c = ExactScalar(Rational(1), m - 1) /
          (gamma_half(m + 1 + 2 * static_cast<long>(k)) * ExactScalar(two_pow(2 * k) * Rational(factorial(k))));
      twice_exp = 2 * static_cast<long>(k) + m - 1;
    }
    ExactScalar w(one_minus_p2.pow(twice_exp / 2), 0,
                  (twice_exp % 2) ? one_minus_p2 : Rational(1));
    sum = sum + c * w.scale(v);
  }
  return IntegralResult::from_exact(sum);
}

// J(n) = int_p^1 y^n / sqrt(1 - y^2) dy as a CapValue in the variable p.
CapValue chebyshev_tail(unsigned n, const Rational& p) {
  Rational one_minus_p2 = Rational(1) - p * p;
  ExactScalar root(Rational(1), 0, one_minus_p2);
  if (n == 0) {
    CapValue v;
    v.base.add(ExactScalar(Rational(1, 2), 2));  // pi/2
    v.asin_mult.add(ExactScalar(Rational(-1)));
    return v;
  }
  if (n == 1) {
    CapValue v;
    v.base.add(root);
    return v;
  }
  CapValue v = chebyshev_tail(n - 2, p).scale(Rational(n - 1, n));
  v.base.add(root.scale(p.pow(n - 1) / Rational(n)));
  return v;
}

}  // namespace

IntegralResult subsphere_integral(const Polynomial& p, const RationalPoint& omega, const Rational& pp) {
  return hyperplane_slice_integral(p, omega, pp, false);
}

IntegralResult subball_integral(const Polynomial& p, const RationalPoint& omega, const Rational& pp) {
  return hyperplane_slice_integral(p, omega, pp, true);
}

CapValue& CapValue::operator+=(const CapValue& o) {
  base += o.base;
  asin_mult += o.asin_mult;
  return *this;
}

CapValue CapValue::scale(const ExactScalar& s) const {
  CapValue r;
  r.base = base.scale(s);
  r.asin_mult = asin_mult.scale(s);
  return r;
}

bool CapValue::operator==(const CapValue& o) const {
  return asin_mult == o.asin_mult && base == o.base;
}

Numeric CapValue::numeric(const Rational& p) const {
  Numeric v = base.numeric();
  if (!asin_mult.is_zero())
    v += asin_mult.numeric() * boost::multiprecision::asin(to_numeric(p));
  return v;
}

IntegralResult CapValue::to_result(const Rational& p) const {
  if (asin_mult.is_zero()) {
    if (auto s = base.single()) return IntegralResult::from_exact(*s);
  }
  return IntegralResult::from_numeric(numeric(p));
}

CapValue cap_coefficient_value(unsigned k, unsigned l, const Rational& p, int m, CapSide side) {
  if (2 * k > l) throw std::domain_error("cap_coefficient: requires 2k <= l");
  if (m < 2) throw std::domain_error("cap_coefficient: dimension must be at least 2");
  if (p.abs() >= Rational(1)) throw std::domain_error("cap_coefficient: requires -1 < p < 1");

  if (side == CapSide::Lower) {
    // int_{-1}^p y^a (1-y^2)^b dy = (-1)^l int_{-p}^1 y^a (1-y^2)^b dy.
    CapValue up = cap_coefficient_value(k, l, -p, m, CapSide::Upper);
    CapValue r = (l % 2 == 0) ? up : up.scale(Rational(-1));
    r.asin_mult = r.asin_mult.scale(Rational(-1));  // asin(-p) = -asin(p)
    return r;
  }

  unsigned a = l - 2 * k;
  long twice_b = 2 * static_cast<long>(k) + m - 3;
  CapValue out;
  if (twice_b % 2 == 0) {
    // m odd: integer exponent b, plain binomial expansion, exact rational.
    unsigned b = static_cast<unsigned>(twice_b / 2);
    Rational sum(0);
    for (unsigned i = 0; i <= b; ++i) {
      Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
      unsigned e = a + 2 * i + 1;
      sum += sign * Rational(binomial(b, i)) * (Rational(1) - p.pow(e)) / Rational(e);
    }
    out.base.add(ExactScalar(sum));
    return out;
  }
  if (p.is_zero()) {
    // Gamma-ratio closed form at p = 0.
    ExactScalar v = gamma_half(a + 1) * gamma_half(twice_b + 2) /
                    (ExactScalar(Rational(2)) * gamma_half(a + 3 + twice_b));
    out.base.add(v);
    return out;
  }
  // m even: (1-y^2)^b = (1-y^2)^c / sqrt(1-y^2) with c = b + 1/2 integer;
  // reduces to the Chebyshev-weight tails J(n).
  unsigned c = static_cast<unsigned>((twice_b + 1) / 2);
  for (unsigned i = 0; i <= c; ++i) {
    Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
    out += chebyshev_tail(a + 2 * i, p).scale(sign * Rational(binomial(c, i)));
  }
  return out;
}

IntegralResult cap_coefficient(unsigned k, unsigned l, const Rational& p, int m, CapSide side) {
  return cap_coefficient_value(k, l, p, m, side).to_result(p);
}

CapValue cap_integral_value(const Polynomial& poly, const RationalPoint& omega, const Rational& pp,
                            CapSide side) {
  int m = poly.dim();
  RegionSpec check = RegionSpec::cap(omega, pp, side);
  check.validate();
  CapValue total;
  for (auto& [l, part] : homogeneous_parts(poly)) {
    Polynomial q = part;
    for (unsigned k = 0; 2 * k <= l; ++k) {
      if (k > 0) q = laplacian(q) - dir_deriv_power(q, omega, 2);
      Rational v = evaluate(q, omega.coords);
      if (v.is_zero()) continue;
      ExactScalar c = ExactScalar(Rational(2), m - 1) /
                      (gamma_half(m - 1 + 2 * static_cast<long>(k)) * ExactScalar(two_pow(2 * k) * Rational(factorial(k))));
      total += cap_coefficient_value(k, l, pp, m, side).scale(c.scale(v));
    }
  }
  return total;
}

IntegralResult cap_integral(const Polynomial& p, const RationalPoint& omega, const Rational& pp,
                            CapSide side) {
  return cap_integral_value(p, omega, pp, side).to_result(pp);
}

IntegralResult modified_sphere_integral(const Polynomial& p2s, const RationalPoint& omega) {
  if (p2s.is_zero()) return IntegralResult::from_exact(ExactScalar::zero());
  if (!p2s.is_homogeneous() || p2s.degree() % 2 != 0)
    throw std::domain_error("modified_sphere_integral: input must be homogeneous of even degree");
  int m = p2s.dim();
  unsigned s = static_cast<unsigned>(p2s.degree() / 2);
  ExactScalar front = ExactScalar(Rational(2), m - 1) / gamma_half(2 * static_cast<long>(s) + m);
  ExactScalar sum = ExactScalar::zero();
  Polynomial q = p2s;
  for (unsigned k = 0; k <= s; ++k) {
    if (k > 0) q = laplacian(q) - dir_deriv_power(q, omega, 2);
    Rational v = evaluate(q, omega.coords);
    if (v.is_zero()) continue;
    ExactScalar c = gamma_half(2 * static_cast<long>(s - k) + 1).scale(
        Rational(1) / (two_pow(2 * k) * Rational(factorial(k))));
    sum = sum + c.scale(v);
  }
  return IntegralResult::from_exact(front * sum);
}

IntegralResult region_integral(const Polynomial& p, const RegionSpec& region) {
  region.validate();
  if (p.dim() != region.dim) throw std::domain_error("region_integral: dimension mismatch");
  switch (region.kind) {
    case RegionSpec::Kind::UnitSphere: return sphere_integral(p, Rational(1));
    case RegionSpec::Kind::RSphere: return sphere_integral(p, region.r);
    case RegionSpec::Kind::Ball: return ball_integral(p, region.r);
    case RegionSpec::Kind::Subsphere: return subsphere_integral(p, region.omega, region.p);
    case RegionSpec::Kind::Subball: return subball_integral(p, region.omega, region.p);
    case RegionSpec::Kind::CapUpper: return cap_integral(p, region.omega, region.p, CapSide::Upper);
    case RegionSpec::Kind::CapLower: return cap_integral(p, region.omega, region.p, CapSide::Lower);
  }
  throw std::logic_error("region_integral: unknown region kind");
}

}  // namespace funksphere
