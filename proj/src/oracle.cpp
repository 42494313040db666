#include "funksphere/oracle.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace funksphere {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::asin;
using boost::multiprecision::cos;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

Numeric oracle_eps() {
  // Target: comfortably below 10^-(precision-6).
  return pow(Numeric(10), -(PrecisionConfig::digits() + 4));
}

/// Numeric-coefficient sparse polynomial used only inside the oracle.
using NumTerms = std::map<Monomial, Numeric, GradedLexLess>;

/// Expand P(M^T y): substitute x_i = sum_j rows[j][i] y_j numerically.
NumTerms rotate_poly(const Polynomial& p, const Frame& fr) {
  int m = p.dim();
  // Powers of each linear form x_i as numeric polynomials in y.
  auto mul_linear = [m](const NumTerms& a, const std::vector<Numeric>& coef) {
    NumTerms out;
    for (const auto& [mono, c] : a)
      for (int j = 0; j < m; ++j) {
        if (coef[j] == 0) continue;
        Monomial mm = mono;
        ++mm[j];
        out[mm] += c * coef[j];
      }
    return out;
  };
  std::vector<std::vector<Numeric>> cols(m, std::vector<Numeric>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) cols[i][j] = fr.rows[j][i];

  NumTerms out;
  for (const auto& [mono, c] : p.terms()) {
    NumTerms prod;
    prod[Monomial(m, 0)] = to_numeric(c);
    for (int i = 0; i < m; ++i)
      for (std::uint32_t e = 0; e < mono[i]; ++e) prod = mul_linear(prod, cols[i]);
    for (const auto& [mm, cc] : prod) out[mm] += cc;
  }
  return out;
}

Monomial tail(const Monomial& mono) { return Monomial(mono.begin() + 1, mono.end()); }

}  // namespace

Frame Frame::from_direction(const std::vector<Numeric>& omega) {
  int m = static_cast<int>(omega.size());
  if (m < 1) throw std::domain_error("Frame: empty direction");
  Frame fr;
  fr.rows.push_back(omega);
  // Pivot on the largest |omega_i|; the remaining standard basis vectors
  // complete a linearly independent set for Gram-Schmidt.
  int pivot = 0;
  for (int i = 1; i < m; ++i)
    if (abs(omega[i]) > abs(omega[pivot])) pivot = i;
  for (int i = 0; i < m && static_cast<int>(fr.rows.size()) < m; ++i) {
    if (i == pivot) continue;
    std::vector<Numeric> v(m, Numeric(0));
    v[i] = 1;
    for (const auto& row : fr.rows) {
      Numeric dot(0);
      for (int j = 0; j < m; ++j) dot += v[j] * row[j];
      for (int j = 0; j < m; ++j) v[j] -= dot * row[j];
    }
    Numeric norm(0);
    for (int j = 0; j < m; ++j) norm += v[j] * v[j];
    norm = sqrt(norm);
    for (int j = 0; j < m; ++j) v[j] /= norm;
    fr.rows.push_back(std::move(v));
  }
  return fr;
}

Frame Frame::from_direction(const RationalPoint& omega) {
  std::vector<Numeric> w;
  w.reserve(omega.coords.size());
  for (const auto& c : omega.coords) w.push_back(to_numeric(c));
  return from_direction(w);
}

ExactScalar sphere_monomial_moment(const Monomial& alpha, int n) {
  if (n < 1) throw std::domain_error("sphere_monomial_moment: dimension must be positive");
  if (static_cast<int>(alpha.size()) != n)
    throw std::domain_error("sphere_monomial_moment: multi-index length mismatch");
  ExactScalar prod = ExactScalar(Rational(2));
  for (auto e : alpha) {
    if (e % 2 != 0) return ExactScalar::zero();
    prod = prod * gamma_half(static_cast<long>(e) + 1);
  }
  return prod / gamma_half(static_cast<long>(total_degree(alpha)) + n);
}

namespace {

/// Standard nodes/weights on [-1, 1], cached per (n, working precision).
const std::pair<std::vector<Numeric>, std::vector<Numeric>>& standard_gauss_legendre(unsigned n) {
  static std::map<std::pair<unsigned, int>, std::pair<std::vector<Numeric>, std::vector<Numeric>>>
      cache;
  auto key = std::make_pair(n, PrecisionConfig::working_digits());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<Numeric> nodes(n, Numeric(0)), weights(n, Numeric(0));
  Numeric pi = numeric_pi();
  Numeric eps = pow(Numeric(10), -(PrecisionConfig::working_digits() + 5));
  for (unsigned i = 0; i < (n + 1) / 2; ++i) {
    Numeric x = cos(pi * (Numeric(i) + Numeric(3) / 4) / (Numeric(n) + Numeric(1) / 2));
    Numeric pn(0), dpn(0);
    for (int iter = 0; iter < 200; ++iter) {
      Numeric p0(1), p1(0);
      for (unsigned k = 0; k < n; ++k) {
        Numeric p2 = p1;
        p1 = p0;
        p0 = ((2 * Numeric(k) + 1) * x * p1 - Numeric(k) * p2) / Numeric(k + 1);
      }
      pn = p0;
      dpn = Numeric(n) * (x * p0 - p1) / (x * x - 1);
      Numeric dx = pn / dpn;
      x -= dx;
      if (abs(dx) < eps) break;
    }
    Numeric w = 2 / ((1 - x * x) * dpn * dpn);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  return cache.emplace(key, std::make_pair(std::move(nodes), std::move(weights))).first->second;
}

}  // namespace

void gauss_legendre(unsigned n, const Numeric& a, const Numeric& b,
                    std::vector<Numeric>& nodes, std::vector<Numeric>& weights) {
  const auto& [sn, sw] = standard_gauss_legendre(n);
  nodes.assign(n, Numeric(0));
  weights.assign(n, Numeric(0));
  Numeric half_len = (b - a) / 2, mid = (a + b) / 2;
  for (unsigned i = 0; i < n; ++i) {
    nodes[i] = mid + half_len * sn[i];
    weights[i] = sw[i] * half_len;
  }
}

namespace {

Numeric sphere_like_moment_sum(const Polynomial& p, const Rational& r, bool ball) {
  int m = p.dim();
  Numeric rn = to_numeric(r), total(0);
  for (const auto& [alpha, c] : p.terms()) {
    ExactScalar mom = sphere_monomial_moment(alpha, m);
    if (mom.is_zero()) continue;
    unsigned d = total_degree(alpha);
    Numeric v = to_numeric(c) * mom.numeric() * pow(rn, static_cast<int>(d) + m - 1);
    if (ball) v *= rn / (static_cast<int>(d) + m);
    total += v;
  }
  return total;
}

/// Common slice setup: rotate so omega maps to e1, then report, per rotated
/// term, the y1 exponent and the exact moment of the remaining variables over
/// the unit (m-2)-sphere.
struct SliceTerm {
  Numeric coeff;    // term coefficient times tail moment
  unsigned e1 = 0;  // y1 exponent
  unsigned dt = 0;  // tail degree
};

std::vector<SliceTerm> slice_terms(const Polynomial& p, const Frame& fr) {
  std::vector<SliceTerm> out;
  int m = p.dim();
  for (const auto& [mono, c] : rotate_poly(p, fr)) {
    Monomial beta = tail(mono);
    ExactScalar mom = sphere_monomial_moment(beta, m - 1);
    if (mom.is_zero()) continue;
    SliceTerm t;
    t.coeff = c * mom.numeric();
    t.e1 = mono[0];
    t.dt = total_degree(beta);
    out.push_back(std::move(t));
  }
  return out;
}

Numeric flat_slice_sum(const std::vector<SliceTerm>& terms, const Rational& p, int m, bool ball) {
  Numeric pn = to_numeric(p), rho = sqrt(1 - pn * pn), total(0);
  for (const auto& t : terms) {
    Numeric v = t.coeff * pow(pn, static_cast<int>(t.e1)) *
                pow(rho, static_cast<int>(t.dt) + m - 2);
    if (ball) v *= rho / (static_cast<int>(t.dt) + m - 1);
    total += v;
  }
  return total;
}

/// One-dimensional cap moment int sin^a cos^b over the theta interval,
/// by adaptive-order Gauss-Legendre after the y = sin(theta) substitution.
Numeric cap_trig_moment(unsigned a, unsigned b, const Rational& p, bool upper) {
  Numeric half_pi = numeric_pi() / 2;
  Numeric lo = upper ? asin(to_numeric(p)) : -half_pi;
  Numeric hi = upper ? half_pi : asin(to_numeric(p));
  Numeric eps = oracle_eps();
  Numeric prev(0);
  bool have_prev = false;
  std::vector<Numeric> nodes, weights;
  for (unsigned n = 64; n <= 4096; n *= 2) {
    gauss_legendre(n, lo, hi, nodes, weights);
    Numeric total(0);
    for (unsigned i = 0; i < n; ++i) {
      Numeric s = boost::multiprecision::sin(nodes[i]);
      Numeric co = cos(nodes[i]);
      total += weights[i] * pow(s, static_cast<int>(a)) * pow(co, static_cast<int>(b));
    }
    if (have_prev && abs(total - prev) <= eps * (1 + abs(total))) return total;
    prev = total;
    have_prev = true;
  }
  return prev;
}

/// Memoized cap moments: the verification sweeps reuse a small set of
/// (exponent, p, side) keys across thousands of monomials.
const Numeric& cached_cap_trig_moment(unsigned a, unsigned b, const Rational& p, bool upper) {
  static std::map<std::tuple<unsigned, unsigned, std::string, bool, int>, Numeric> cache;
  auto key = std::make_tuple(a, b, p.str(), upper, PrecisionConfig::working_digits());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, cap_trig_moment(a, b, p, upper)).first->second;
}

Numeric cap_quadrature(const std::vector<SliceTerm>& terms, const Rational& p, int m,
                       bool upper) {
  // Substituting y = sin(theta) makes every slice integrand a smooth
  // trigonometric monomial sin^e1 * cos^(dt+m-2), so Gauss-Legendre converges
  // spectrally; each distinct exponent pair is integrated once and cached.
  Numeric total(0);
  for (const auto& t : terms)
    total += t.coeff * cached_cap_trig_moment(t.e1, t.dt + static_cast<unsigned>(m) - 2, p, upper);
  return total;
}

}  // namespace

namespace {

Numeric oracle_dispatch(const Polynomial& p, RegionSpec::Kind kind, const Frame* fr,
                        const Rational& p_off, const Rational& r) {
  switch (kind) {
    case RegionSpec::Kind::UnitSphere:
      return sphere_like_moment_sum(p, Rational(1), false);
    case RegionSpec::Kind::RSphere:
      return sphere_like_moment_sum(p, r, false);
    case RegionSpec::Kind::Ball:
      return sphere_like_moment_sum(p, r, true);
    case RegionSpec::Kind::Subsphere:
      return flat_slice_sum(slice_terms(p, *fr), p_off, p.dim(), false);
    case RegionSpec::Kind::Subball:
      return flat_slice_sum(slice_terms(p, *fr), p_off, p.dim(), true);
    case RegionSpec::Kind::CapUpper:
      return cap_quadrature(slice_terms(p, *fr), p_off, p.dim(), true);
    case RegionSpec::Kind::CapLower:
      return cap_quadrature(slice_terms(p, *fr), p_off, p.dim(), false);
  }
  throw std::logic_error("oracle_region_integral: unknown region kind");
}

bool needs_direction(RegionSpec::Kind kind) {
  return kind == RegionSpec::Kind::Subsphere || kind == RegionSpec::Kind::Subball ||
         kind == RegionSpec::Kind::CapUpper || kind == RegionSpec::Kind::CapLower;
}

}  // namespace

Numeric oracle_region_integral(const Polynomial& p, const RegionSpec& region) {
  region.validate();
  if (p.dim() != region.dim)
    throw std::domain_error("oracle_region_integral: dimension mismatch");
  if (needs_direction(region.kind)) {
    Frame fr = Frame::from_direction(region.omega);
    return oracle_dispatch(p, region.kind, &fr, region.p, region.r);
  }
  return oracle_dispatch(p, region.kind, nullptr, region.p, region.r);
}

Numeric oracle_region_integral(const Polynomial& p, RegionSpec::Kind kind,
                               std::vector<Numeric> omega, const Rational& p_off,
                               const Rational& r) {
  if (!needs_direction(kind)) return oracle_dispatch(p, kind, nullptr, p_off, r);
  if (static_cast<int>(omega.size()) != p.dim())
    throw std::domain_error("oracle_region_integral: omega dimension mismatch");
  if (p_off.abs() >= Rational(1))
    throw std::domain_error("oracle_region_integral: requires -1 < p < 1");
  Numeric norm(0);
  for (const auto& c : omega) norm += c * c;
  norm = sqrt(norm);
  if (norm == 0) throw std::domain_error("oracle_region_integral: omega must be nonzero");
  for (auto& c : omega) c /= norm;
  Frame fr = Frame::from_direction(omega);
  return oracle_dispatch(p, kind, &fr, p_off, r);
}

SpherePolynomial spectral_reference_inverter(const SpherePolynomial& fhat) {
  int m = fhat.dim();
  if (m < 2) throw std::domain_error("spectral_reference_inverter: dimension must be at least 2");
  if (!fhat.is_zero() && fhat.parity != Parity::Even)
    throw std::domain_error("spectral_reference_inverter: input must be even");
  auto eigen = [m](unsigned k) {
    ExactScalar v = ExactScalar(Rational(2), m - 2) * gamma_half(2 * k + 1) /
                    gamma_half(m - 1 + 2 * static_cast<long>(k));
    return (k % 2 == 0) ? v : -v;
  };
  ExactScalar d0 = eigen(0);
  Polynomial acc(m);
  for (auto& [d, part] : homogeneous_parts(fhat.poly))
    acc += part.scale((d0 / eigen(d / 2)).as_rational());
  return SpherePolynomial::make_scaled(fhat.scale / d0, acc);
}

}  // namespace funksphere
