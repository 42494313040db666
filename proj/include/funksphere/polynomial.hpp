#ifndef FUNKSPHERE_POLYNOMIAL_HPP
#define FUNKSPHERE_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "funksphere/rational.hpp"

namespace funksphere {

/// Multi-index (alpha_1, ..., alpha_m); length equals the ambient dimension.
using Monomial = std::vector<std::uint32_t>;

inline unsigned total_degree(const Monomial& a) {
  unsigned d = 0;
  for (auto e : a) d += e;
  return d;
}

/// Graded lexicographic order, arranged so that map iteration yields the
/// canonical serialization order: degree descending, then lex descending
/// (x1-dominant monomials first).
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Point with exact rational coordinates; on_unit_sphere asserts an exact
/// unit norm at construction.
struct RationalPoint {
  std::vector<Rational> coords;
  bool on_unit_sphere = false;

  RationalPoint() = default;
  RationalPoint(std::vector<Rational> c, bool unit = false);
  int dim() const { return static_cast<int>(coords.size()); }
  static RationalPoint axis(int dim, int i);  // e_{i+1}
};

/// Sparse multivariate polynomial over Rational in a fixed dimension m.
/// No stored coefficient is zero; the empty term map is the zero polynomial.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  explicit Polynomial(int dim) : dim_(dim) {
    if (dim < 1) throw std::domain_error("Polynomial: dimension must be positive");
  }
  static Polynomial constant(int dim, const Rational& c);
  static Polynomial variable(int dim, int i);  // x_{i+1}, 0-based i
  static Polynomial from_term(int dim, const Monomial& mono, const Rational& c);

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;

  void add_term(const Monomial& mono, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scale(const Rational& r) const;
  bool operator==(const Polynomial& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial partial(int i) const;  // d/dx_{i+1}

  /// Canonical text form: graded-lex ordered sum of c*x<i>^<e> terms.
  std::string str() const;

 private:
  int dim_;
  TermMap terms_;
};

/// Laplacian sum of second partials.
Polynomial laplacian(const Polynomial& p);

/// <omega, d/dx> applied j times.  For homogeneous P of degree l >= j,
/// evaluating the result at x = omega gives l!/(l-j)! * P(omega).
Polynomial dir_deriv_power(const Polynomial& p, const RationalPoint& omega, unsigned j);

/// Euler operator sum x_i d/dx_i.
Polynomial euler_op(const Polynomial& p);

/// Decomposition into (degree, part) pairs, ascending degree, zero parts
/// omitted.
std::vector<std::pair<unsigned, Polynomial>> homogeneous_parts(const Polynomial& p);

/// The homogeneous part of a single degree (zero polynomial when absent).
Polynomial homogeneous_part(const Polynomial& p, unsigned degree);

/// (x_1^2 + ... + x_m^2) * P.
Polynomial mul_norm_sq(const Polynomial& p);

/// Exact division by ||x||^2; throws std::domain_error when P is not a
/// multiple.
Polynomial divide_norm_sq(const Polynomial& p);

/// P(M^T y) for an m x m rational matrix with rows M[i], i.e. the action of
/// the rotation y = M x on P.  Checks M M^T = I exactly.
Polynomial substitute_orthogonal(const Polynomial& p, const std::vector<std::vector<Rational>>& m);

/// General linear substitution x_i -> sum_j m[j][i] y_j (no orthogonality
/// check); building block for substitute_orthogonal.
Polynomial substitute_linear(const Polynomial& p, const std::vector<std::vector<Rational>>& cols);

Rational evaluate(const Polynomial& p, const RationalPoint& pt);
Rational evaluate(const Polynomial& p, const std::vector<Rational>& pt);

/// Scale the argument: P(c * x).
Polynomial scale_argument(const Polynomial& p, const Rational& c);

}  // namespace funksphere

#endif
