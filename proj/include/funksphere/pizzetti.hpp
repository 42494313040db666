#ifndef FUNKSPHERE_PIZZETTI_HPP
#define FUNKSPHERE_PIZZETTI_HPP

#include <optional>
#include <string>

#include "funksphere/exact_scalar.hpp"
#include "funksphere/polynomial.hpp"

namespace funksphere {

enum class CapSide { Upper, Lower };

/// Integration region on or inside the unit sphere of R^m.
struct RegionSpec {
  enum class Kind { UnitSphere, RSphere, Ball, Subsphere, Subball, CapUpper, CapLower };

  Kind kind = Kind::UnitSphere;
  int dim = 0;
  Rational r = Rational(1);   // RSphere / Ball
  RationalPoint omega;        // Subsphere / Subball / caps: exactly unit
  Rational p = Rational(0);   // -1 < p < 1

  static RegionSpec unit_sphere(int dim);
  static RegionSpec r_sphere(int dim, Rational r);
  static RegionSpec ball(int dim, Rational r);
  static RegionSpec subsphere(RationalPoint omega, Rational p);
  static RegionSpec subball(RationalPoint omega, Rational p);
  static RegionSpec cap(RationalPoint omega, Rational p, CapSide side);

  std::string kind_name() const;
  void validate() const;
};

/// Exact value when the formula closed in ExactScalar, plus a numeric
/// rendering that is always present.
struct IntegralResult {
  std::optional<ExactScalar> exact;
  Numeric numeric;

  bool is_exact() const { return exact.has_value(); }
  static IntegralResult from_exact(const ExactScalar& e);
  static IntegralResult from_numeric(Numeric v);
  IntegralResult operator+(const IntegralResult& o) const;
  IntegralResult scaled(const ExactScalar& s) const;
};

/// (Delta - <omega, d>^2)^k applied with a concrete direction omega.
Polynomial delta_minus_dirsq_power(const Polynomial& p, const RationalPoint& omega, unsigned k);

/// Integral of P over the sphere of radius r: Pizzetti sum terminating at
/// floor(deg/2).
IntegralResult sphere_integral(const Polynomial& p, const Rational& r);

/// Integral of P over the ball of radius r.
IntegralResult ball_integral(const Polynomial& p, const Rational& r);

/// Integral over S_{p,omega}, the (m-2)-sphere cut by <x,omega> = p.
IntegralResult subsphere_integral(const Polynomial& p, const RationalPoint& omega, const Rational& pp);

/// Integral over B_{p,omega}, the (m-1)-ball cut by the same hyperplane.
IntegralResult subball_integral(const Polynomial& p, const RationalPoint& omega, const Rational& pp);

/// Cap weight or cap integral in structured form: an ExactSum plus a
/// rational multiple of asin(p).  The asin part is the only piece outside
/// the ExactScalar closure; it cancels between complementary caps, so
/// identities like Upper + Lower = whole sphere stay exactly checkable.
struct CapValue {
  ExactSum base;
  ExactSum asin_mult;  // coefficient of asin(p)

  CapValue& operator+=(const CapValue& o);
  friend CapValue operator+(CapValue a, const CapValue& b) { return a += b; }
  CapValue scale(const ExactScalar& s) const;
  CapValue scale(const Rational& r) const { return scale(ExactScalar(r)); }
  bool is_zero() const { return base.is_zero() && asin_mult.is_zero(); }
  bool operator==(const CapValue& o) const;
  Numeric numeric(const Rational& p) const;
  IntegralResult to_result(const Rational& p) const;
};

/// Structured cap weight; see cap_coefficient.
CapValue cap_coefficient_value(unsigned k, unsigned l, const Rational& p, int m, CapSide side);

/// Structured cap integral; see cap_integral.
CapValue cap_integral_value(const Polynomial& p, const RationalPoint& omega, const Rational& pp,
                            CapSide side);

/// Cap weight c_{k,l}(p) = int_p^1 y^{l-2k} (1-y^2)^{k+(m-3)/2} dy (Upper);
/// Lower integrates over [-1, p] with the same exponent.  Exact rational for
/// odd m; exact ExactScalar at p = 0; high-precision numeric otherwise.
IntegralResult cap_coefficient(unsigned k, unsigned l, const Rational& p, int m, CapSide side);

/// Integral of P over the spherical cap <x,omega> > p (Upper) or < p (Lower).
IntegralResult cap_integral(const Polynomial& p, const RationalPoint& omega, const Rational& pp,
                            CapSide side);

/// Whole-sphere integral of a homogeneous even-degree polynomial through the
/// cap-sum identity; independent of the auxiliary direction omega.
IntegralResult modified_sphere_integral(const Polynomial& p2s, const RationalPoint& omega);

/// Dispatch on a RegionSpec.
IntegralResult region_integral(const Polynomial& p, const RegionSpec& region);

}  // namespace funksphere

#endif
