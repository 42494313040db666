#ifndef FUNKSPHERE_EXACT_SCALAR_HPP
#define FUNKSPHERE_EXACT_SCALAR_HPP

#include <optional>
#include <string>
#include <vector>

#include "funksphere/numeric.hpp"
#include "funksphere/rational.hpp"

namespace funksphere {

/// Exact value of the form coeff * pi^(pi_half/2) * sqrt(sqrt_arg).
///
/// The closure class of every constant produced by the integration and
/// inversion formulas: surface areas, Funk eigenvalues, Gamma chains at
/// half-integers, and the (1-p^2)^(k+m/2-1) weights.  Canonical form keeps
/// sqrt_arg a square-free non-negative integer (square factors are pulled
/// into coeff); zero is represented as (0, 0, 1).
class ExactScalar {
 public:
  ExactScalar() : coeff_(0), pi_half_(0), sqrt_arg_(1) {}
  ExactScalar(Rational coeff, long pi_half = 0, Rational sqrt_arg = Rational(1));

  static ExactScalar zero() { return ExactScalar(); }
  static ExactScalar one() { return ExactScalar(Rational(1)); }
  /// pi^(h/2)
  static ExactScalar pi_power_half(long h) { return ExactScalar(Rational(1), h); }

  const Rational& coeff() const { return coeff_; }
  long pi_half() const { return pi_half_; }
  const Rational& sqrt_arg() const { return sqrt_arg_; }

  bool is_zero() const { return coeff_.is_zero(); }
  bool is_rational() const { return pi_half_ == 0 && sqrt_arg_ == Rational(1); }
  /// Rational value; throws unless is_rational().
  Rational as_rational() const;

  /// True when both operands live in the same (pi_half, sqrt_arg) class
  /// (or one is zero), i.e. their sum stays exact.
  bool same_class(const ExactScalar& o) const;

  ExactScalar operator-() const;
  ExactScalar operator*(const ExactScalar& o) const;
  ExactScalar operator/(const ExactScalar& o) const;
  ExactScalar scale(const Rational& r) const;

  /// Exact sum; throws std::domain_error when the classes differ.
  ExactScalar operator+(const ExactScalar& o) const;
  ExactScalar operator-(const ExactScalar& o) const;

  bool operator==(const ExactScalar& o) const;
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }

  Numeric numeric() const;
  std::string str() const;

 private:
  Rational coeff_;
  long pi_half_;
  Rational sqrt_arg_;  // square-free integer as a rational
  void canonicalize();
};

/// Formal sum of ExactScalars from distinct closure classes.  Closed under
/// addition and scaling, so identities whose individual summands straddle
/// classes can still be checked exactly.
class ExactSum {
 public:
  ExactSum() = default;
  explicit ExactSum(const ExactScalar& s) { add(s); }

  void add(const ExactScalar& s);
  ExactSum& operator+=(const ExactSum& o);
  friend ExactSum operator+(ExactSum a, const ExactSum& b) { return a += b; }
  ExactSum scale(const ExactScalar& s) const;
  ExactSum scale(const Rational& r) const { return scale(ExactScalar(r)); }

  bool is_zero() const { return terms_.empty(); }
  /// The single ExactScalar value when at most one class is present.
  std::optional<ExactScalar> single() const;
  const std::vector<ExactScalar>& terms() const { return terms_; }
  Numeric numeric() const;
  bool operator==(const ExactSum& o) const;

 private:
  std::vector<ExactScalar> terms_;  // nonzero, pairwise distinct classes
};

/// Result of an addition that may leave the exact closure class.
struct ScalarSum {
  std::optional<ExactScalar> exact;  // set when the sum stayed exact
  Numeric numeric;
  bool is_exact() const { return exact.has_value(); }
};

/// Exact when classes match (or a summand is zero), numeric fallback otherwise.
ScalarSum exact_add(const ExactScalar& a, const ExactScalar& b);

/// Gamma(two_n / 2) for two_n > 0: (n-1)! at integers, rational * sqrt(pi)
/// at half-integers.  Non-positive arguments (poles and negatives) throw.
ExactScalar gamma_half(long two_n);

/// Rising factorial (a)_n with a = a_twice / 2; (a)_0 = 1.
Rational pochhammer(long a_twice, unsigned long n);

/// Terminating 2F1(-n, b; c; z) as an exact finite sum.
/// Throws if (c)_l vanishes while the running numerator is still nonzero.
Rational hyp2f1_terminating(unsigned long n, long b_twice, long c_twice, const Rational& z);

/// 2F1(a, b; c; 1) by the Gauss summation theorem, requiring c > a + b.
/// When a is a non-positive integer the value is (c-b)_n / (c)_n via
/// Pochhammer symbols, which stays finite across Gamma poles; otherwise all
/// four Gamma arguments must be positive.
ExactScalar gauss_2f1_at_one(long a_twice, long b_twice, long c_twice);

/// sigma_n = 2 pi^(n/2) / Gamma(n/2), the surface area of S^(n-1).
ExactScalar sphere_surface_area(int n);

/// High-precision square root used for the sqrt_arg factor.
Numeric numeric_sqrt(const Rational& q);

}  // namespace funksphere

#endif
