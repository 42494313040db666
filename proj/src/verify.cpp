#include "funksphere/verify.hpp"

#include <stdexcept>

namespace funksphere {

namespace {

using boost::multiprecision::abs;

std::string fmt(const Numeric& v) { return format_numeric(v); }

}  // namespace

std::vector<Monomial> monomials_of_degree(int m, unsigned d) {
  std::vector<Monomial> out;
  Monomial cur(m, 0);
  auto rec = [&](auto&& self, int pos, unsigned rem) -> void {
    if (pos == m - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (long e = rem; e >= 0; --e) {
      cur[pos] = static_cast<std::uint32_t>(e);
      self(self, pos + 1, rem - static_cast<unsigned>(e));
    }
  };
  rec(rec, 0, d);
  return out;
}

RationalPoint pythagorean_direction(int m) {
  std::vector<Rational> c(m, Rational(0));
  c[0] = Rational(3, 5);
  c[1] = Rational(4, 5);
  return RationalPoint(std::move(c), true);
}

VerifyCase compare_region(const std::string& formula, const std::string& inputs,
                          const IntegralResult& exact, const Numeric& oracle) {
  VerifyCase c;
  c.formula = formula;
  c.inputs = inputs;
  c.exact = exact.is_exact() ? exact.exact->str() : fmt(exact.numeric);
  c.oracle = fmt(oracle);
  Numeric ae(abs(exact.numeric - oracle));
  Numeric scale(abs(oracle));
  if (scale < 1) scale = 1;
  Numeric re = ae / scale;
  c.abs_err = fmt(ae);
  c.rel_err = fmt(re);
  double tol = exact.is_exact() ? kExactPathRelTol : kNumericPathRelTol;
  c.pass = re <= Numeric(tol);
  return c;
}

namespace {

void region_suite(VerifySummary& out, int dim_max, int deg_max) {
  for (int m = 2; m <= dim_max; ++m) {
    std::vector<RationalPoint> dirs = {RationalPoint::axis(m, 0), pythagorean_direction(m)};
    std::vector<Rational> ps = {Rational(0), Rational(1, 2)};
    for (unsigned d = 0; d <= static_cast<unsigned>(deg_max); ++d) {
      for (const auto& mono : monomials_of_degree(m, d)) {
        Polynomial p = Polynomial::from_term(m, mono, Rational(1));
        std::string ptxt = p.str() + ", m=" + std::to_string(m);

        RegionSpec sph = RegionSpec::unit_sphere(m);
        out.add(compare_region("sphere", ptxt, sphere_integral(p, Rational(1)),
                               oracle_region_integral(p, sph)));
        RegionSpec ball = RegionSpec::ball(m, Rational(1));
        out.add(compare_region("ball", ptxt, ball_integral(p, Rational(1)),
                               oracle_region_integral(p, ball)));

        for (std::size_t wi = 0; wi < dirs.size(); ++wi) {
          for (const auto& pp : ps) {
            std::string tag =
                ptxt + ", omega#" + std::to_string(wi) + ", p=" + pp.str();
            out.add(compare_region(
                "subsphere", tag, subsphere_integral(p, dirs[wi], pp),
                oracle_region_integral(p, RegionSpec::subsphere(dirs[wi], pp))));
            out.add(compare_region(
                "subball", tag, subball_integral(p, dirs[wi], pp),
                oracle_region_integral(p, RegionSpec::subball(dirs[wi], pp))));
            out.add(compare_region(
                "cap-upper", tag, cap_integral(p, dirs[wi], pp, CapSide::Upper),
                oracle_region_integral(p, RegionSpec::cap(dirs[wi], pp, CapSide::Upper))));
            out.add(compare_region(
                "cap-lower", tag, cap_integral(p, dirs[wi], pp, CapSide::Lower),
                oracle_region_integral(p, RegionSpec::cap(dirs[wi], pp, CapSide::Lower))));
          }
        }
      }
    }
  }
}

void transform_suite(VerifySummary& out, int dim_max, int deg_max) {
  for (int m = 2; m <= dim_max; ++m) {
    RationalPoint w = pythagorean_direction(m);
    for (unsigned k = 0; 2 * k <= static_cast<unsigned>(deg_max); ++k) {
      auto basis = sh_basis(m, 2 * k);
      if (basis.empty()) continue;
      const Polynomial& h = basis.front();
      SpherePolynomial f = SpherePolynomial::make(h);
      SpherePolynomial hat = funk_transform(f);
      // Eigen-relation checked exactly.
      SpherePolynomial expect = SpherePolynomial::make_scaled(funk_eigenvalue(m, k), h);
      VerifyCase eig;
      eig.formula = "funk-eigenvalue";
      eig.inputs = "m=" + std::to_string(m) + ", k=" + std::to_string(k);
      eig.exact = hat.str();
      eig.oracle = expect.str();
      eig.pass = hat == expect;
      eig.abs_err = eig.rel_err = "0";
      out.add(std::move(eig));
      // Transform value at a rational direction vs the subsphere oracle.
      Numeric at = hat.scale.numeric() * to_numeric(evaluate(hat.poly, w));
      Numeric ref =
          oracle_region_integral(h, RegionSpec::subsphere(w, Rational(0)));
      VerifyCase c;
      c.formula = "funk-vs-oracle";
      c.inputs = "m=" + std::to_string(m) + ", k=" + std::to_string(k) + ", omega=(3/5,4/5,...)";
      c.exact = fmt(at);
      c.oracle = fmt(ref);
      Numeric ae(abs(at - ref));
      Numeric scale(abs(ref));
      if (scale < 1) scale = 1;
      Numeric re = ae / scale;
      c.abs_err = fmt(ae);
      c.rel_err = fmt(re);
      c.pass = re <= Numeric(kExactPathRelTol);
      out.add(std::move(c));
    }
    // Kernel: odd monomials map to zero.
    for (unsigned d = 1; d <= static_cast<unsigned>(deg_max); d += 2) {
      for (const auto& mono : monomials_of_degree(m, d)) {
        Polynomial p = Polynomial::from_term(m, mono, Rational(1));
        SpherePolynomial hat = funk_transform(SpherePolynomial::make(p));
        VerifyCase c;
        c.formula = "funk-kernel";
        c.inputs = p.str() + ", m=" + std::to_string(m);
        c.exact = hat.str();
        c.oracle = "0";
        c.abs_err = c.rel_err = "0";
        c.pass = hat.is_zero();
        out.add(std::move(c));
      }
    }
  }
}

void inversion_suite(VerifySummary& out, int dim_max, int deg_max) {
  for (int m = 3; m <= dim_max; ++m) {
    for (unsigned k = 0; 2 * k <= static_cast<unsigned>(deg_max); ++k) {
      auto basis = sh_basis(m, 2 * k);
      if (basis.empty()) continue;
      // A mixed even polynomial: first basis element plus a constant.
      Polynomial p = basis.front() + Polynomial::constant(m, Rational(1, 3));
      SpherePolynomial f = SpherePolynomial::make(p);
      SpherePolynomial hat = funk_transform(f);
      SpherePolynomial spectral = spectral_reference_inverter(hat);
      SpherePolynomial general = invert_general(hat);
      VerifyCase c;
      c.formula = "invert-general";
      c.inputs = "m=" + std::to_string(m) + ", k=" + std::to_string(k);
      c.exact = general.str();
      c.oracle = spectral.str();
      c.abs_err = c.rel_err = "0";
      c.pass = general == f && spectral == f;
      out.add(std::move(c));
      if (m % 2 == 0) {
        SpherePolynomial even = invert_even_m(hat);
        VerifyCase e;
        e.formula = "invert-even-m";
        e.inputs = c.inputs;
        e.exact = even.str();
        e.oracle = f.str();
        e.abs_err = e.rel_err = "0";
        e.pass = even == f;
        out.add(std::move(e));
      }
    }
  }
}

}  // namespace

VerifySummary run_verify_suite(const std::string& suite, int dim_max, int deg_max) {
  VerifySummary out;
  bool all = suite == "all";
  bool known = all;
  if (all || suite == "regions") {
    region_suite(out, dim_max, deg_max);
    known = true;
  }
  if (all || suite == "transforms") {
    transform_suite(out, dim_max, deg_max);
    known = true;
  }
  if (all || suite == "inversion") {
    inversion_suite(out, dim_max, deg_max);
    known = true;
  }
  if (!known) throw std::domain_error("unknown verify suite: " + suite);
  return out;
}

}  // namespace funksphere
