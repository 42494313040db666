#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/mpfr.hpp>

#include "funksphere/oracle.hpp"
#include "test_util.hpp"

using namespace funksphere;
using namespace funksphere::testutil;
using boost::multiprecision::abs;

namespace {

struct Init {
  Init() { init_numeric_precision(); }
} init_once;

Polynomial var(int m, int i) { return Polynomial::variable(m, i); }

Numeric tol() { return boost::multiprecision::pow(Numeric(10), -(PrecisionConfig::digits() - 6)); }

bool close(const Numeric& a, const Numeric& b) {
  Numeric scale(abs(b));
  if (scale < 1) scale = 1;
  return Numeric(abs(a - b)) / scale < tol();
}

}  // namespace

TEST_CASE("sphere monomial moments") {
  // int_{S^2} 1 = 4 pi, int_{S^2} x1^2 = 4 pi / 3, odd exponents vanish.
  CHECK(sphere_monomial_moment({0, 0, 0}, 3) == ExactScalar(Rational(4), 2));
  CHECK(sphere_monomial_moment({2, 0, 0}, 3) == ExactScalar(Rational(4, 3), 2));
  CHECK(sphere_monomial_moment({1, 0, 0}, 3).is_zero());
  CHECK(sphere_monomial_moment({1, 2, 1}, 3).is_zero());
  // x1^2 x2^2 x3^2 over S^2: 4 pi / 105.
  CHECK(sphere_monomial_moment({2, 2, 2}, 3) == ExactScalar(Rational(4, 105), 2));
  // Circle: int x1^4 = 3 pi / 4.
  CHECK(sphere_monomial_moment({4, 0}, 2) == ExactScalar(Rational(3, 4), 2));
}

TEST_CASE("frames are orthonormal with the requested first row") {
  Rng rng(2020);
  for (int m = 2; m <= 6; ++m) {
    RationalPoint w = random_unit_point(rng, m);
    Frame fr = Frame::from_direction(w);
    REQUIRE(fr.dim() == m);
    for (int i = 0; i < m; ++i) CHECK(close(fr.rows[0][i], to_numeric(w.coords[i])));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Numeric dot(0);
        for (int k = 0; k < m; ++k) dot += fr.rows[i][k] * fr.rows[j][k];
        CHECK(close(dot, Numeric(i == j ? 1 : 0)));
      }
  }
}

TEST_CASE("gauss-legendre integrates polynomials exactly") {
  std::vector<Numeric> nodes, weights;
  gauss_legendre(8, Numeric(0), Numeric(1), nodes, weights);
  REQUIRE(nodes.size() == 8);
  // int_0^1 x^k = 1/(k+1) for k up to 2n-1 = 15.
  for (int k = 0; k <= 15; ++k) {
    Numeric sum(0);
    for (size_t i = 0; i < nodes.size(); ++i)
      sum += weights[i] * boost::multiprecision::pow(nodes[i], k);
    CHECK(close(sum, Numeric(1) / (k + 1)));
  }
}

TEST_CASE("oracle on whole spheres and balls") {
  Polynomial one = Polynomial::constant(3, Rational(1));
  Numeric four_pi = 4 * numeric_pi();
  CHECK(close(oracle_region_integral(one, RegionSpec::unit_sphere(3)), four_pi));
  CHECK(close(oracle_region_integral(one, RegionSpec::ball(3, Rational(1))), four_pi / 3));
  CHECK(close(oracle_region_integral(var(3, 0), RegionSpec::unit_sphere(3)), Numeric(0)));
  // Radius scaling on the 2-sphere of radius 2: area 16 pi.
  CHECK(close(oracle_region_integral(one, RegionSpec::r_sphere(3, Rational(2))), 4 * four_pi));
}

TEST_CASE("oracle on slices and caps") {
  RationalPoint e3 = RationalPoint::axis(3, 2);
  Polynomial one = Polynomial::constant(3, Rational(1));
  // Circle at height 1/2: length pi sqrt(3).
  Numeric expect = numeric_pi() * boost::multiprecision::sqrt(Numeric(3));
  CHECK(close(oracle_region_integral(one, RegionSpec::subsphere(e3, Rational(1, 2))), expect));
  // Disc at height 1/2: area 3 pi / 4.
  CHECK(close(oracle_region_integral(one, RegionSpec::subball(e3, Rational(1, 2))),
              3 * numeric_pi() / 4));
  // Upper half sphere with weight x3: pi.
  CHECK(close(oracle_region_integral(var(3, 2),
                                     RegionSpec::cap(e3, Rational(0), CapSide::Upper)),
              numeric_pi()));
  // Cap of height 1/2: area 2 pi (1 - 1/2) = pi.
  CHECK(close(oracle_region_integral(one, RegionSpec::cap(e3, Rational(1, 2), CapSide::Upper)),
              numeric_pi()));
}

TEST_CASE("oracle agrees with closed formulas on random inputs") {
  Rng rng(2121);
  for (int rep = 0; rep < 8; ++rep) {
    int m = 2 + static_cast<int>(rng.below(4));
    Polynomial p = random_poly(rng, m, 6);
    RationalPoint w = random_unit_point(rng, m);
    Rational pp(static_cast<long>(rng.below(9)) - 4, 6);
    std::vector<RegionSpec> regions = {
        RegionSpec::unit_sphere(m),
        RegionSpec::ball(m, Rational(1)),
        RegionSpec::subsphere(w, pp),
        RegionSpec::subball(w, pp),
        RegionSpec::cap(w, pp, CapSide::Upper),
        RegionSpec::cap(w, pp, CapSide::Lower),
    };
    for (const auto& region : regions) {
      IntegralResult formula = region_integral(p, region);
      Numeric reference = oracle_region_integral(p, region);
      Numeric scale(abs(reference));
      if (scale < 1) scale = 1;
      CHECK(Numeric(abs(formula.numeric - reference)) / scale < Numeric(1e-20));
    }
  }
}

TEST_CASE("spectral reference inverter") {
  // funk(1) = 2 pi on S^2 inverts back to 1.
  SpherePolynomial one = SpherePolynomial::make(Polynomial::constant(3, Rational(1)));
  SpherePolynomial two_pi =
      SpherePolynomial::make_scaled(ExactScalar(Rational(2), 2), Polynomial::constant(3, Rational(1)));
  CHECK(spectral_reference_inverter(two_pi) == one);
  // Degree-2 harmonic in dimension 3: eigenvalue -pi.
  Polynomial h2 = var(3, 0) * var(3, 1);
  SpherePolynomial img = SpherePolynomial::make_scaled(ExactScalar(Rational(-1), 2), h2);
  CHECK(spectral_reference_inverter(img) == SpherePolynomial::make(h2));
}

TEST_CASE("three-way inverter agreement") {
  Rng rng(2222);
  for (int m : {3, 4, 5, 6}) {
    for (int rep = 0; rep < 3; ++rep) {
      Polynomial p(m);
      p += random_homogeneous(rng, m, 2);
      p += random_homogeneous(rng, m, 4);
      p += Polynomial::constant(m, rng.rational());
      SpherePolynomial f = SpherePolynomial::make(p);
      SpherePolynomial hat = funk_transform(f);
      SpherePolynomial spectral = spectral_reference_inverter(hat);
      CHECK(spectral == f);
      CHECK(invert_general(hat) == spectral);
      if (m % 2 == 0) CHECK(invert_even_m(hat) == spectral);
    }
  }
}
