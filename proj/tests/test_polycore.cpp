#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "funksphere/harmonics.hpp"
#include "funksphere/polynomial.hpp"
#include "test_util.hpp"

using namespace funksphere;
using namespace funksphere::testutil;

namespace {

Polynomial var(int m, int i) { return Polynomial::variable(m, i); }

}  // namespace

TEST_CASE("laplacian basics") {
  // x1^2 + x2^2 in dimension 2 -> 4
  Polynomial p = var(2, 0) * var(2, 0) + var(2, 1) * var(2, 1);
  CHECK(laplacian(p) == Polynomial::constant(2, Rational(4)));
  // x1^3 in dimension 3 -> 6 x1
  Polynomial q = var(3, 0) * var(3, 0) * var(3, 0);
  CHECK(laplacian(q) == var(3, 0).scale(Rational(6)));
  // x1 x2 is harmonic
  CHECK(laplacian(var(3, 0) * var(3, 1)).is_zero());
}

TEST_CASE("directional derivative powers") {
  Polynomial x1sq = var(2, 0) * var(2, 0);
  CHECK(dir_deriv_power(x1sq, RationalPoint::axis(2, 0), 2) ==
        Polynomial::constant(2, Rational(2)));
  // Frozen reference: first derivative of x1^2 along (3/5, 4/5), evaluated at
  // the direction itself, is 18/25 = 2 * (9/25).
  RationalPoint w({Rational(3, 5), Rational(4, 5)}, true);
  Polynomial d1 = dir_deriv_power(x1sq, w, 1);
  CHECK(evaluate(d1, w) == Rational(18, 25));
  CHECK(dir_deriv_power(x1sq, w, 3).is_zero());
}

TEST_CASE("homogeneous parts") {
  Polynomial p = var(2, 0) * var(2, 0) + var(2, 1);
  auto parts = homogeneous_parts(p);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == 1);
  CHECK(parts[0].second == var(2, 1));
  CHECK(parts[1].first == 2);
  CHECK(parts[1].second == var(2, 0) * var(2, 0));

  CHECK(homogeneous_parts(Polynomial(2)).empty());

  Polynomial b = var(2, 0) + Polynomial::constant(2, Rational(1));
  auto sq = homogeneous_parts(b * b);
  REQUIRE(sq.size() == 3);
  CHECK(sq[0].second == Polynomial::constant(2, Rational(1)));
  CHECK(sq[1].second == var(2, 0).scale(Rational(2)));
  CHECK(sq[2].second == var(2, 0) * var(2, 0));
}

TEST_CASE("mul_norm_sq") {
  CHECK(mul_norm_sq(Polynomial::constant(2, Rational(1))) ==
        var(2, 0) * var(2, 0) + var(2, 1) * var(2, 1));
  CHECK(mul_norm_sq(var(2, 0)) ==
        var(2, 0) * var(2, 0) * var(2, 0) + var(2, 0) * var(2, 1) * var(2, 1));
  Polynomial one1 = Polynomial::constant(1, Rational(1));
  Polynomial x4 = mul_norm_sq(mul_norm_sq(one1));
  CHECK(x4 == var(1, 0) * var(1, 0) * var(1, 0) * var(1, 0));
}

TEST_CASE("substitute_orthogonal") {
  // Quarter-turn swap of the two axes.
  std::vector<std::vector<Rational>> rot = {{Rational(0), Rational(1)},
                                            {Rational(-1), Rational(0)}};
  Polynomial x1sq = var(2, 0) * var(2, 0);
  CHECK(substitute_orthogonal(x1sq, rot) == var(2, 1) * var(2, 1));
  Polynomial radial = var(2, 0) * var(2, 0) + var(2, 1) * var(2, 1);
  CHECK(substitute_orthogonal(radial, rot) == radial);
  // Frozen reference: with rows (3/5, 4/5) / (-4/5, 3/5), the substitution
  // x = M^T y sends x1 to (3/5)y1 - (4/5)y2 (first column of M^T).
  std::vector<std::vector<Rational>> tilt = {{Rational(3, 5), Rational(4, 5)},
                                             {Rational(-4, 5), Rational(3, 5)}};
  CHECK(substitute_orthogonal(var(2, 0), tilt) ==
        var(2, 0).scale(Rational(3, 5)) + var(2, 1).scale(Rational(-4, 5)));
  // Non-orthogonal matrices are rejected.
  std::vector<std::vector<Rational>> bad = {{Rational(1), Rational(1)},
                                            {Rational(0), Rational(1)}};
  CHECK_THROWS_AS(substitute_orthogonal(var(2, 0), bad), std::domain_error);
}

TEST_CASE("evaluate") {
  Polynomial p = var(2, 0) * var(2, 0) * var(2, 1);
  CHECK(evaluate(p, std::vector<Rational>{Rational(2), Rational(3)}) == Rational(12));
  Polynomial q = var(2, 0) + Polynomial::constant(2, Rational(7));
  CHECK(evaluate(q, std::vector<Rational>{Rational(0), Rational(0)}) == Rational(7));
  Polynomial r = var(2, 0) * var(2, 0) + var(2, 1) * var(2, 1);
  CHECK(evaluate(r, std::vector<Rational>{Rational(3, 5), Rational(4, 5)}) == Rational(1));
}

TEST_CASE("reduce_on_sphere examples") {
  int m = 3;
  Polynomial normsq = mul_norm_sq(Polynomial::constant(m, Rational(1)));
  CHECK(reduce_on_sphere(normsq) == Polynomial::constant(m, Rational(1)));

  Polynomial x1sq = var(m, 0) * var(m, 0);
  CHECK(reduce_on_sphere(mul_norm_sq(x1sq) - x1sq).is_zero());

  // x1^2 reduces to (x1^2 - ||x||^2/3) + 1/3.
  Polynomial expected = x1sq - normsq.scale(Rational(1, 3)) +
                        Polynomial::constant(m, Rational(1, 3));
  CHECK(reduce_on_sphere(x1sq) == expected);
  // Idempotence.
  CHECK(reduce_on_sphere(expected) == expected);
}

TEST_CASE("sl2 commutator relation") {
  // laplacian(||x||^2 P) - ||x||^2 laplacian(P) = 4 E P + 2 m P.
  Rng rng(101);
  for (int m = 2; m <= 5; ++m) {
    for (int rep = 0; rep < 5; ++rep) {
      Polynomial p = random_poly(rng, m, 6);
      Polynomial lhs = laplacian(mul_norm_sq(p)) - mul_norm_sq(laplacian(p));
      Polynomial rhs = euler_op(p).scale(Rational(4)) + p.scale(Rational(2 * m));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("laplacian commutes with rotations") {
  Rng rng(202);
  for (int m = 2; m <= 4; ++m) {
    for (int rep = 0; rep < 5; ++rep) {
      Polynomial p = random_poly(rng, m, 5);
      auto mat = random_orthogonal(rng, m);
      CHECK(laplacian(substitute_orthogonal(p, mat)) ==
            substitute_orthogonal(laplacian(p), mat));
    }
  }
}

TEST_CASE("directional derivative factor on homogeneous polynomials") {
  // For homogeneous P of degree l and j <= l, the j-fold derivative along a
  // unit omega evaluated at omega is l!/(l-j)! P(omega).
  Rng rng(303);
  for (int m = 2; m <= 4; ++m) {
    for (unsigned l = 1; l <= 8; ++l) {
      Polynomial p = random_homogeneous(rng, m, l, 4);
      RationalPoint w = random_unit_point(rng, m);
      for (unsigned j = 0; j <= l; ++j) {
        Rational expected =
            Rational(factorial(l), factorial(l - j)) * evaluate(p, w);
        CHECK(evaluate(dir_deriv_power(p, w, j), w) == expected);
      }
    }
  }
}

TEST_CASE("reduce_on_sphere agrees on unit-sphere points") {
  Rng rng(404);
  for (int rep = 0; rep < 50; ++rep) {
    int m = 2 + static_cast<int>(rng.below(4));
    Polynomial p = random_poly(rng, m, 6);
    Polynomial red = reduce_on_sphere(p);
    RationalPoint w = random_unit_point(rng, m);
    CHECK(evaluate(p, w) == evaluate(red, w));
  }
}

TEST_CASE("divide_norm_sq round trip") {
  Rng rng(505);
  for (int rep = 0; rep < 10; ++rep) {
    int m = 2 + static_cast<int>(rng.below(4));
    Polynomial p = random_poly(rng, m, 5);
    CHECK(divide_norm_sq(mul_norm_sq(p)) == p);
  }
  CHECK_THROWS_AS(divide_norm_sq(Polynomial::variable(2, 0)), std::domain_error);
}

TEST_CASE("canonical text form") {
  Polynomial p(3);
  p.add_term({2, 1, 0}, Rational(1));
  p.add_term({0, 0, 1}, Rational(-3, 2));
  CHECK(p.str() == "x1^2*x2 - 3/2*x3");
  CHECK(Polynomial(3).str() == "0");
}
