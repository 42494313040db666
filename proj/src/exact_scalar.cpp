#include "funksphere/exact_scalar.hpp"

#include <stdexcept>

namespace funksphere {

namespace {

// Splits n >= 0 as s^2 * d with d square-free; returns (s, d).
// Trial division up to a fixed bound, then a perfect-square check on the
// remainder.  The arguments arising here (products of small numerators and
// denominators) are well within range.
std::pair<mpz_class, mpz_class> extract_square(mpz_class n) {
  mpz_class s = 1;
  if (n == 0) return {1, 0};
  for (mpz_class p = 2; p * p * p * p <= n || p <= 1000; ++p) {
    if (p * p > n) break;
    while (mpz_divisible_p(n.get_mpz_t(), mpz_class(p * p).get_mpz_t())) {
      n /= p * p;
      s *= p;
    }
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    s *= r;
    n = 1;
  }
  return {s, n};
}

}  // namespace

ExactScalar::ExactScalar(Rational coeff, long pi_half, Rational sqrt_arg)
    : coeff_(std::move(coeff)), pi_half_(pi_half), sqrt_arg_(std::move(sqrt_arg)) {
  if (sqrt_arg_.sign() < 0) throw std::domain_error("ExactScalar: negative sqrt argument");
  canonicalize();
}

void ExactScalar::canonicalize() {
  if (coeff_.is_zero() || sqrt_arg_.is_zero()) {
    coeff_ = Rational(0);
    pi_half_ = 0;
    sqrt_arg_ = Rational(1);
    return;
  }
  // sqrt(a/b) = sqrt(a*b)/b; then pull the square part of a*b into coeff.
  mpz_class a = sqrt_arg_.num(), b = sqrt_arg_.den();
  auto [s, d] = extract_square(a * b);
  coeff_ *= Rational(s, b);
  sqrt_arg_ = Rational(d);
}

Rational ExactScalar::as_rational() const {
  if (!is_rational()) throw std::domain_error("ExactScalar: not a rational value");
  return coeff_;
}

bool ExactScalar::same_class(const ExactScalar& o) const {
  if (is_zero() || o.is_zero()) return true;
  return pi_half_ == o.pi_half_ && sqrt_arg_ == o.sqrt_arg_;
}

ExactScalar ExactScalar::operator-() const { return scale(Rational(-1)); }

ExactScalar ExactScalar::scale(const Rational& r) const {
  return ExactScalar(coeff_ * r, pi_half_, sqrt_arg_);
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
  return ExactScalar(coeff_ * o.coeff_, pi_half_ + o.pi_half_, sqrt_arg_ * o.sqrt_arg_);
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
  if (o.is_zero()) throw std::domain_error("ExactScalar: division by zero");
  // 1/sqrt(q) = sqrt(q)/q
  return ExactScalar(coeff_ / (o.coeff_ * o.sqrt_arg_), pi_half_ - o.pi_half_, sqrt_arg_ * o.sqrt_arg_);
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (!same_class(o)) throw std::domain_error("ExactScalar: sum across classes is not exact");
  return ExactScalar(coeff_ + o.coeff_, pi_half_, sqrt_arg_);
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const { return *this + (-o); }

bool ExactScalar::operator==(const ExactScalar& o) const {
  return coeff_ == o.coeff_ && pi_half_ == o.pi_half_ && sqrt_arg_ == o.sqrt_arg_;
}

Numeric numeric_sqrt(const Rational& q) {
  return boost::multiprecision::sqrt(to_numeric(q));
}

Numeric ExactScalar::numeric() const {
  if (is_zero()) return Numeric(0);
  Numeric v = to_numeric(coeff_);
  if (pi_half_ != 0)
    v *= boost::multiprecision::pow(numeric_pi(), Numeric(pi_half_) / 2);
  if (sqrt_arg_ != Rational(1)) v *= numeric_sqrt(sqrt_arg_);
  return v;
}

std::string ExactScalar::str() const {
  std::string s = coeff_.str();
  if (pi_half_ != 0) s += " * pi^(" + std::to_string(pi_half_) + "/2)";
  if (sqrt_arg_ != Rational(1)) s += " * sqrt(" + sqrt_arg_.str() + ")";
  return s;
}

void ExactSum::add(const ExactScalar& s) {
  if (s.is_zero()) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->same_class(s)) {
      ExactScalar merged = *it + s;
      if (merged.is_zero())
        terms_.erase(it);
      else
        *it = merged;
      return;
    }
  }
  terms_.push_back(s);
}

ExactSum& ExactSum::operator+=(const ExactSum& o) {
  for (const auto& t : o.terms_) add(t);
  return *this;
}

ExactSum ExactSum::scale(const ExactScalar& s) const {
  ExactSum r;
  if (s.is_zero()) return r;
  for (const auto& t : terms_) r.add(t * s);
  return r;
}

std::optional<ExactScalar> ExactSum::single() const {
  if (terms_.empty()) return ExactScalar::zero();
  if (terms_.size() == 1) return terms_.front();
  return std::nullopt;
}

Numeric ExactSum::numeric() const {
  Numeric v(0);
  for (const auto& t : terms_) v += t.numeric();
  return v;
}

bool ExactSum::operator==(const ExactSum& o) const {
  // Difference must vanish class by class.
  ExactSum d = *this;
  for (const auto& t : o.terms_) d.add(-t);
  return d.is_zero();
}

ScalarSum exact_add(const ExactScalar& a, const ExactScalar& b) {
  ScalarSum r;
  if (a.same_class(b)) {
    r.exact = a + b;
    r.numeric = r.exact->numeric();
  } else {
    r.numeric = a.numeric() + b.numeric();
  }
  return r;
}

ExactScalar gamma_half(long two_n) {
  if (two_n <= 0) throw std::domain_error("gamma_half: argument must be positive");
  if (two_n % 2 == 0) {
    return ExactScalar(Rational(factorial(static_cast<unsigned long>(two_n / 2 - 1))));
  }
  // Gamma(1/2 + j) = (2j)! / (4^j j!) * sqrt(pi)
  unsigned long j = static_cast<unsigned long>((two_n - 1) / 2);
  Rational c(factorial(2 * j), factorial(j) * (mpz_class(1) << (2 * j)));
  return ExactScalar(c, 1);
}

Rational pochhammer(long a_twice, unsigned long n) {
  Rational r(1);
  for (unsigned long i = 0; i < n; ++i) r *= Rational(a_twice + 2 * static_cast<long>(i), 2);
  return r;
}

Rational hyp2f1_terminating(unsigned long n, long b_twice, long c_twice, const Rational& z) {
  Rational sum(0), zp(1);
  for (unsigned long l = 0; l <= n; ++l) {
    Rational num = pochhammer(-2 * static_cast<long>(n), l) * pochhammer(b_twice, l);
    Rational den = pochhammer(c_twice, l) * Rational(factorial(l));
    if (den.is_zero()) {
      if (num.is_zero()) break;  // series already terminated
      throw std::domain_error("hyp2f1_terminating: pole in c within summation range");
    }
    sum += num / den * zp;
    zp *= z;
  }
  return sum;
}

ExactScalar gauss_2f1_at_one(long a_twice, long b_twice, long c_twice) {
  if (c_twice <= a_twice + b_twice)
    throw std::domain_error("gauss_2f1_at_one: requires c > a + b");
  if (a_twice <= 0 && a_twice % 2 == 0) {
    // 2F1(-n, b; c; 1) = (c-b)_n / (c)_n, finite across Gamma poles.
    unsigned long n = static_cast<unsigned long>(-a_twice / 2);
    Rational den = pochhammer(c_twice, n);
    if (den.is_zero()) throw std::domain_error("gauss_2f1_at_one: pole in (c)_n");
    return ExactScalar(pochhammer(c_twice - b_twice, n) / den);
  }
  long args[4] = {c_twice, c_twice - a_twice - b_twice, c_twice - a_twice, c_twice - b_twice};
  for (long t : args)
    if (t <= 0) throw std::domain_error("gauss_2f1_at_one: Gamma pole; no Pochhammer route applies");
  return gamma_half(args[0]) * gamma_half(args[1]) / (gamma_half(args[2]) * gamma_half(args[3]));
}

ExactScalar sphere_surface_area(int n) {
  if (n < 1) throw std::domain_error("sphere_surface_area: dimension must be positive");
  return ExactScalar(Rational(2), n) / gamma_half(n);
}

}  // namespace funksphere
