#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/mpfr.hpp>

#include "funksphere/exact_scalar.hpp"
#include "test_util.hpp"

using namespace funksphere;
using namespace funksphere::testutil;

namespace {

struct Init {
  Init() { init_numeric_precision(); }
} init_once;

ExactScalar random_scalar(Rng& rng) {
  return ExactScalar(rng.rational(), static_cast<long>(rng.below(5)) - 2,
                     Rational(static_cast<long>(rng.below(10)) + 1));
}

}  // namespace

TEST_CASE("canonical form extracts square factors") {
  // sqrt(8) = 2 sqrt(2)
  ExactScalar s(Rational(1), 0, Rational(8));
  CHECK(s.coeff() == Rational(2));
  CHECK(s.sqrt_arg() == Rational(2));
  // sqrt(9/4) = 3/2
  ExactScalar t(Rational(1), 0, Rational(9, 4));
  CHECK(t.coeff() == Rational(3, 2));
  CHECK(t.is_rational());
  // sqrt(1/2) = sqrt(2)/2
  ExactScalar u(Rational(1), 0, Rational(1, 2));
  CHECK(u.coeff() == Rational(1, 2));
  CHECK(u.sqrt_arg() == Rational(2));
  // zero normalizes to (0, 0, 1)
  ExactScalar z(Rational(0), 3, Rational(5));
  CHECK(z.is_zero());
  CHECK(z.pi_half() == 0);
  CHECK(z.sqrt_arg() == Rational(1));
  CHECK_THROWS_AS(ExactScalar(Rational(1), 0, Rational(-1)), std::domain_error);
}

TEST_CASE("gamma at half-integers") {
  CHECK(gamma_half(1) == ExactScalar(Rational(1), 1));         // sqrt(pi)
  CHECK(gamma_half(5) == ExactScalar(Rational(3, 4), 1));      // (3/4) sqrt(pi)
  CHECK(gamma_half(8) == ExactScalar(Rational(6)));            // 3! = 6
  CHECK(gamma_half(2) == ExactScalar::one());
  CHECK_THROWS_AS(gamma_half(0), std::domain_error);
  CHECK_THROWS_AS(gamma_half(-3), std::domain_error);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(-2, 0) == Rational(1));
  CHECK(pochhammer(1, 3) == Rational(15, 8));    // (1/2)(3/2)(5/2)
  CHECK(pochhammer(-1, 2) == Rational(-1, 4));   // (-1/2)(1/2)
  CHECK(pochhammer(4, 4) == Rational(120));      // 2*3*4*5
}

TEST_CASE("terminating 2F1") {
  CHECK(hyp2f1_terminating(1, 2, 4, Rational(1)) == Rational(1, 2));  // 1 - z/2 at z=1
  CHECK(hyp2f1_terminating(0, 7, 3, Rational(2, 3)) == Rational(1));
  CHECK(hyp2f1_terminating(1, 1, 3, Rational(1)) == Rational(2, 3));  // 1 - (1/2)/(3/2)
}

TEST_CASE("Gauss summation at 1") {
  // a=-1, b=1/2, c=3/2 -> 2/3, matching the terminating sum.
  CHECK(gauss_2f1_at_one(-2, 1, 3) == ExactScalar(Rational(2, 3)));
  CHECK(gauss_2f1_at_one(0, 0, 5) == ExactScalar::one());
  // a=-2, b=3/2, c=1/2: frozen to the terminating-sum value
  // 1 - 6 + 5 = 0; the Pochhammer route gives (c-b)_2/(c)_2 = 0 as well.
  CHECK(hyp2f1_terminating(2, 3, 1, Rational(1)) == Rational(0));
  CHECK(gauss_2f1_at_one(-4, 3, 1) == ExactScalar::zero());
  // Convergence condition enforced.
  CHECK_THROWS_AS(gauss_2f1_at_one(2, 2, 3), std::domain_error);
}

TEST_CASE("Gauss summation agrees with terminating series for integer -a") {
  for (long n = 0; n <= 5; ++n)
    for (long b2 = 1; b2 <= 7; b2 += 2)
      for (long c2 = b2 + 1; c2 <= 13; c2 += 2) {
        if (c2 <= -2 * n + b2) continue;  // convergence condition c > a + b
        Rational series = hyp2f1_terminating(n, b2, c2, Rational(1));
        ExactScalar closed = gauss_2f1_at_one(-2 * n, b2, c2);
        REQUIRE(closed.is_rational());
        CHECK(closed.as_rational() == series);
      }
}

TEST_CASE("exact_add") {
  ExactScalar two_pi(Rational(2), 2), three_pi(Rational(3), 2);
  ScalarSum s = exact_add(two_pi, three_pi);
  REQUIRE(s.is_exact());
  CHECK(*s.exact == ExactScalar(Rational(5), 2));

  ScalarSum t = exact_add(ExactScalar(Rational(1), 2), ExactScalar::zero());
  REQUIRE(t.is_exact());
  CHECK(*t.exact == ExactScalar(Rational(1), 2));

  // sqrt(pi) + pi leaves the closure class.
  ScalarSum u = exact_add(ExactScalar(Rational(1), 1), ExactScalar(Rational(1), 2));
  CHECK(!u.is_exact());
  Numeric ref = boost::multiprecision::sqrt(numeric_pi()) + numeric_pi();
  CHECK(boost::multiprecision::abs(u.numeric - ref) < Numeric(1e-25));
}

TEST_CASE("Legendre duplication") {
  // Gamma((m-2)/2) Gamma((m-1)/2) = sqrt(pi) (m-3)! / 2^(m-3)
  for (int m = 3; m <= 12; ++m) {
    ExactScalar lhs = gamma_half(m - 2) * gamma_half(m - 1);
    ExactScalar rhs =
        ExactScalar(Rational(factorial(m - 3), mpz_class(1) << (m - 3)), 1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("reflection products via Pochhammer") {
  // Gamma(k+1/2) Gamma(1/2-k) = (-1)^k pi, with Gamma(1/2-k) expressed as
  // Gamma(1/2) / (1/2-k)_k to avoid the poles.
  for (unsigned k = 0; k <= 8; ++k) {
    Rational shift = pochhammer(1 - 2 * static_cast<long>(k), k);
    ExactScalar prod = gamma_half(2 * k + 1) * gamma_half(1).scale(Rational(1) / shift);
    ExactScalar expected(k % 2 == 0 ? Rational(1) : Rational(-1), 2);
    CHECK(prod == expected);
  }
}

TEST_CASE("central factorial identity") {
  // (2k)!/(2^(2k) k!) = Gamma(k+1/2)/sqrt(pi)
  for (unsigned k = 0; k <= 10; ++k) {
    Rational lhs(factorial(2 * k), (mpz_class(1) << (2 * k)) * factorial(k));
    ExactScalar rhs = gamma_half(2 * k + 1) / gamma_half(1);
    REQUIRE(rhs.is_rational());
    CHECK(rhs.as_rational() == lhs);
  }
}

TEST_CASE("multiplication properties and numeric agreement") {
  Rng rng(42);
  for (int rep = 0; rep < 20; ++rep) {
    ExactScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a * b) == (b * a));
    CHECK(((a * b) * c) == (a * (b * c)));
    Numeric direct = a.numeric() * b.numeric();
    Numeric folded = (a * b).numeric();
    Numeric scale(boost::multiprecision::abs(folded));
    if (scale < 1) scale = 1;
    CHECK(Numeric(boost::multiprecision::abs(direct - folded)) / scale < Numeric(1e-28));
  }
}

TEST_CASE("ExactSum tracks classes independently") {
  ExactSum s;
  s.add(ExactScalar(Rational(1), 1));   // sqrt(pi)
  s.add(ExactScalar(Rational(2), 2));   // 2 pi
  s.add(ExactScalar(Rational(-1), 1));  // cancels the sqrt(pi) term
  auto single = s.single();
  REQUIRE(single.has_value());
  CHECK(*single == ExactScalar(Rational(2), 2));

  ExactSum t(ExactScalar(Rational(1), 1));
  t.add(ExactScalar(Rational(1), 2));
  CHECK(!t.single().has_value());
  CHECK(t == t);
  CHECK(t.scale(Rational(0)).is_zero());
}

TEST_CASE("surface areas") {
  CHECK(sphere_surface_area(2) == ExactScalar(Rational(2), 2));  // 2 pi
  CHECK(sphere_surface_area(3) == ExactScalar(Rational(4), 2));  // 4 pi
  CHECK(sphere_surface_area(4) == ExactScalar(Rational(2), 4));  // 2 pi^2
  CHECK(sphere_surface_area(1) == ExactScalar(Rational(2)));
}
