#ifndef FUNKSPHERE_ORACLE_HPP
#define FUNKSPHERE_ORACLE_HPP

#include <vector>

#include "funksphere/funk.hpp"
#include "funksphere/pizzetti.hpp"

namespace funksphere {

/// Brute-force reference integrators.  Deliberately share no differential
/// operator code with the formula modules: everything here is monomial
/// moments, numeric linear algebra, and Gauss-Legendre quadrature, so
/// agreement with the closed formulas is evidence rather than tautology.

/// Numeric orthogonal matrix whose first row is a prescribed unit vector.
struct Frame {
  std::vector<std::vector<Numeric>> rows;  // m rows of length m

  static Frame from_direction(const std::vector<Numeric>& omega);
  static Frame from_direction(const RationalPoint& omega);
  int dim() const { return static_cast<int>(rows.size()); }
};

/// Exact moment of x^alpha over the unit sphere in R^n:
/// 2 prod Gamma((alpha_i+1)/2) / Gamma((|alpha|+n)/2) when every alpha_i is
/// even, zero otherwise.
ExactScalar sphere_monomial_moment(const Monomial& alpha, int n);

/// Numeric reference value of the integral of P over any supported region,
/// accurate to roughly 10^-(precision-6).
Numeric oracle_region_integral(const Polynomial& p, const RegionSpec& region);

/// Numeric-direction variant for approximate omega: the direction is
/// normalized internally and never has to be exactly rational-unit.
/// Sphere/ball kinds ignore omega.  Always numeric-path.
Numeric oracle_region_integral(const Polynomial& p, RegionSpec::Kind kind,
                               std::vector<Numeric> omega, const Rational& p_off,
                               const Rational& r);

/// Gauss-Legendre nodes/weights on [a, b] at working precision.
void gauss_legendre(unsigned n, const Numeric& a, const Numeric& b,
                    std::vector<Numeric>& nodes, std::vector<Numeric>& weights);

/// Reference inverter: divide each harmonic component of fhat by its
/// eigenvalue (computed locally from the Gamma form).
SpherePolynomial spectral_reference_inverter(const SpherePolynomial& fhat);

}  // namespace funksphere

#endif
