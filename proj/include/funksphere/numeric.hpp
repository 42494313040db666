#ifndef FUNKSPHERE_NUMERIC_HPP
#define FUNKSPHERE_NUMERIC_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <iomanip>
#include <sstream>
#include <string>

#include "funksphere/rational.hpp"

namespace funksphere {

/// Radix-independent floating value used wherever exact closure fails.
using Numeric = boost::multiprecision::mpfr_float;

/// Configured output precision in decimal digits (>= 15, default 30).
/// Internals run with extra guard digits; the oracle adds 10 more.
class PrecisionConfig {
 public:
  static int digits() { return digits_; }
  static void set_digits(int d);
  static int working_digits() { return digits_ + 10; }

 private:
  inline static int digits_ = 30;
};

inline void PrecisionConfig::set_digits(int d) {
  if (d < 15) throw std::domain_error("precision must be at least 15 digits");
  digits_ = d;
  Numeric::default_precision(d + 20);
}

/// Call once at startup (and after any set_digits) so that default-constructed
/// Numerics carry enough guard digits.
inline void init_numeric_precision() { Numeric::default_precision(PrecisionConfig::digits() + 20); }

inline Numeric to_numeric(const Rational& r) { return Numeric(r.raw().get_mpq_t()); }

inline Numeric numeric_pi() {
  Numeric x;
  mpfr_const_pi(x.backend().data(), MPFR_RNDN);
  return x;
}

/// Fixed-width decimal rendering at the configured precision.
inline std::string format_numeric(const Numeric& v, int digits = PrecisionConfig::digits()) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace funksphere

#endif
