#ifndef FUNKSPHERE_FUNK_HPP
#define FUNKSPHERE_FUNK_HPP

#include <string>
#include <vector>

#include "funksphere/exact_scalar.hpp"
#include "funksphere/harmonics.hpp"
#include "funksphere/polynomial.hpp"

namespace funksphere {

enum class Parity { Even, Odd, Mixed };

/// Polynomial function on the unit sphere, stored as an ExactScalar scale
/// times a reduced rational polynomial.  Canonical form: the polynomial is
/// reduced (no Fischer factor of ||x||^2) and monic in its graded-lex leading
/// coefficient, which is folded into the scale; zero is (1, 0).  Every
/// transform in this module multiplies all coefficients by constants from a
/// single ExactScalar class, so one shared scale loses nothing.
struct SpherePolynomial {
  ExactScalar scale = ExactScalar::one();
  Polynomial poly;
  Parity parity = Parity::Even;

  explicit SpherePolynomial(int dim) : poly(dim) {}

  /// Reduce on the sphere and canonicalize.
  static SpherePolynomial make(const Polynomial& p);
  static SpherePolynomial make_scaled(const ExactScalar& s, const Polynomial& p);

  int dim() const { return poly.dim(); }
  bool is_zero() const { return poly.is_zero(); }
  SpherePolynomial scaled(const ExactScalar& s) const { return make_scaled(scale * s, poly); }

  /// Canonical representations are compared field-wise.
  bool operator==(const SpherePolynomial& o) const {
    return scale == o.scale && poly == o.poly;
  }
  bool operator!=(const SpherePolynomial& o) const { return !(*this == o); }

  std::string str() const;
};

Parity polynomial_parity(const Polynomial& p);

/// Funk transform: integral over the great subsphere orthogonal to the
/// evaluation direction.  Annihilates odd parts; on a harmonic of degree 2k
/// it multiplies by funk_eigenvalue(m, k).
SpherePolynomial funk_transform(const SpherePolynomial& f);

/// d_{m,k} = 2 pi^(m/2-1) (-1)^k Gamma(k+1/2) / Gamma((m-1)/2 + k).
ExactScalar funk_eigenvalue(int m, unsigned k);

/// Dual transform: funk_transform normalized by the great-subsphere area
/// sigma_{m-1}; a purely rational map on the reduced polynomial.
SpherePolynomial dual_transform(const SpherePolynomial& phi);

/// Dual transform at distance r with p = sin r: average over the subspheres
/// whose normals lie on S_{p,x}.  Rational map for rational p in [0, 1);
/// p = 0 recovers dual_transform exactly.
SpherePolynomial dual_at_distance(const SpherePolynomial& phi, const Rational& p);

/// Roots c_j = (m-2j-1)(2j-1), j = 1..(m-2)/2, of the factors (z - c_j)
/// making up the even-dimension inversion polynomial; empty for m = 2.
std::vector<long> p_polynomial_roots(int m);

/// That polynomial evaluated at an integer Laplace-Beltrami eigenvalue.
Rational p_polynomial_at(int m, long z);

/// 2 (-4 pi)^((m-2)/2) Gamma((m-1)/2) / Gamma(1/2), the constant multiplying
/// f in the even-dimension inversion identity.
ExactScalar helgason_constant(int m);

/// Eigenvalue of the composite inversion operator on degree-2k harmonics,
/// through the pole-free Pochhammer factorization
/// 4^(m/2-1) (3/2 - m/2 - k)_{(m-2)/2} (1/2 + k)_{(m-2)/2}; equals the direct
/// product of (eigenvalue - root) factors.
Rational helgason_ckm(int m, unsigned k);

/// Even-dimension inversion: apply the root polynomial in the
/// Laplace-Beltrami eigenvalues to the dual of fhat and divide by
/// helgason_constant.  Exact; throws on odd m or inputs with an odd part.
SpherePolynomial invert_even_m(const SpherePolynomial& fhat);

/// Closed form of the t^2-derivative chain constant for the general
/// inversion: Gamma((m-2)/2)/2 * Gamma(j+(m-1)/2)/Gamma(k+1/2) *
/// ((2-m)/2)_{k-j}, evaluated pole-free via Pochhammer.
ExactScalar ikj_term(int m, unsigned k, unsigned j);

/// The same quantity as an explicit alternating binomial Gamma-ratio sum
/// (pre-Gauss-summation form); used as an independent cross-check.
ExactScalar ikj_term_sum(int m, unsigned k, unsigned j);

/// General-dimension inversion (m >= 3) with its intermediate F, which the
/// derivation pins to sigma_{m-1} (m-3)!/2^(m-2) times the preimage.
struct GeneralInversion {
  SpherePolynomial f;
  SpherePolynomial intermediate;  // F
  GeneralInversion(SpherePolynomial f_, SpherePolynomial F_)
      : f(std::move(f_)), intermediate(std::move(F_)) {}
};

GeneralInversion invert_general_full(const SpherePolynomial& fhat);
SpherePolynomial invert_general(const SpherePolynomial& fhat);

}  // namespace funksphere

#endif
