#include "funksphere/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace funksphere {

RationalPoint::RationalPoint(std::vector<Rational> c, bool unit)
    : coords(std::move(c)), on_unit_sphere(unit) {
  if (unit) {
    Rational s(0);
    for (const auto& x : coords) s += x * x;
    if (s != Rational(1))
      throw std::domain_error("RationalPoint: coordinates are not exactly on the unit sphere");
  }
}

RationalPoint RationalPoint::axis(int dim, int i) {
  std::vector<Rational> c(dim, Rational(0));
  c[i] = Rational(1);
  return RationalPoint(std::move(c), true);
}

Polynomial Polynomial::constant(int dim, const Rational& c) {
  Polynomial p(dim);
  p.add_term(Monomial(dim, 0), c);
  return p;
}

Polynomial Polynomial::variable(int dim, int i) {
  if (i < 0 || i >= dim) throw std::domain_error("Polynomial: variable index out of range");
  Monomial m(dim, 0);
  m[i] = 1;
  return from_term(dim, m, Rational(1));
}

Polynomial Polynomial::from_term(int dim, const Monomial& mono, const Rational& c) {
  Polynomial p(dim);
  p.add_term(mono, c);
  return p;
}

void Polynomial::add_term(const Monomial& mono, const Rational& c) {
  if (static_cast<int>(mono.size()) != dim_)
    throw std::domain_error("Polynomial: monomial length does not match dimension");
  if (c.is_zero()) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.begin()->first));
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = total_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) != d) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(dim_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (dim_ != o.dim_) throw std::domain_error("Polynomial: dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (dim_ != o.dim_) throw std::domain_error("Polynomial: dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (dim_ != o.dim_) throw std::domain_error("Polynomial: dimension mismatch");
  Polynomial r(dim_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(dim_);
      for (int i = 0; i < dim_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

Polynomial Polynomial::scale(const Rational& r) const {
  Polynomial out(dim_);
  if (r.is_zero()) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * r);
  return out;
}

Polynomial Polynomial::partial(int i) const {
  Polynomial r(dim_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial d = m;
    d[i] -= 1;
    r.add_term(d, c * Rational(m[i]));
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool has_vars = total_degree(m) > 0;
    bool coeff_shown = !(a == Rational(1) && has_vars);
    if (coeff_shown) os << a.str();
    bool need_star = coeff_shown;
    for (int i = 0; i < dim_; ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << "x" << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

Polynomial laplacian(const Polynomial& p) {
  Polynomial r(p.dim());
  for (const auto& [m, c] : p.terms()) {
    for (int i = 0; i < p.dim(); ++i) {
      if (m[i] < 2) continue;
      Monomial d = m;
      d[i] -= 2;
      r.add_term(d, c * Rational(static_cast<long>(m[i]) * (m[i] - 1)));
    }
  }
  return r;
}

Polynomial dir_deriv_power(const Polynomial& p, const RationalPoint& omega, unsigned j) {
  if (omega.dim() != p.dim()) throw std::domain_error("dir_deriv_power: dimension mismatch");
  Polynomial r = p;
  for (unsigned t = 0; t < j; ++t) {
    Polynomial next(p.dim());
    for (int i = 0; i < p.dim(); ++i) {
      if (omega.coords[i].is_zero()) continue;
      next += r.partial(i).scale(omega.coords[i]);
    }
    r = next;
    if (r.is_zero()) break;
  }
  return r;
}

Polynomial euler_op(const Polynomial& p) {
  Polynomial r(p.dim());
  for (const auto& [m, c] : p.terms()) r.add_term(m, c * Rational(total_degree(m)));
  return r;
}

std::vector<std::pair<unsigned, Polynomial>> homogeneous_parts(const Polynomial& p) {
  std::map<unsigned, Polynomial> parts;
  for (const auto& [m, c] : p.terms()) {
    unsigned d = total_degree(m);
    auto it = parts.find(d);
    if (it == parts.end()) it = parts.emplace(d, Polynomial(p.dim())).first;
    it->second.add_term(m, c);
  }
  std::vector<std::pair<unsigned, Polynomial>> out;
  out.reserve(parts.size());
  for (auto& [d, q] : parts) out.emplace_back(d, std::move(q));
  return out;
}

Polynomial homogeneous_part(const Polynomial& p, unsigned degree) {
  Polynomial r(p.dim());
  for (const auto& [m, c] : p.terms())
    if (total_degree(m) == degree) r.add_term(m, c);
  return r;
}

Polynomial mul_norm_sq(const Polynomial& p) {
  Polynomial r(p.dim());
  for (const auto& [m, c] : p.terms()) {
    for (int i = 0; i < p.dim(); ++i) {
      Monomial q = m;
      q[i] += 2;
      r.add_term(q, c);
    }
  }
  return r;
}

Polynomial divide_norm_sq(const Polynomial& p) {
  // Single-divisor division by ||x||^2; the leading monomial of the divisor
  // in graded-lex is x1^2, and an exact multiple leaves zero remainder.
  Polynomial rem = p;
  Polynomial quot(p.dim());
  while (!rem.is_zero()) {
    auto lead = rem.terms().begin();
    Monomial m = lead->first;
    Rational c = lead->second;
    if (m[0] < 2) throw std::domain_error("divide_norm_sq: polynomial is not a multiple of ||x||^2");
    Monomial q = m;
    q[0] -= 2;
    quot.add_term(q, c);
    rem -= mul_norm_sq(Polynomial::from_term(p.dim(), q, c));
  }
  return quot;
}

Polynomial substitute_linear(const Polynomial& p, const std::vector<std::vector<Rational>>& cols) {
  int n = p.dim();
  // Precompute the linear forms L_i(y) = sum_j cols[j][i] y_j and their powers
  // on demand.
  std::vector<Polynomial> forms;
  forms.reserve(n);
  for (int i = 0; i < n; ++i) {
    Polynomial f(n);
    for (int j = 0; j < n; ++j) {
      Monomial m(n, 0);
      m[j] = 1;
      f.add_term(m, cols[j][i]);
    }
    forms.push_back(std::move(f));
  }
  Polynomial out(n);
  std::vector<std::vector<Polynomial>> powers(n);  // powers[i][e] = L_i^e
  for (int i = 0; i < n; ++i) powers[i].push_back(Polynomial::constant(n, Rational(1)));
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = Polynomial::constant(n, c);
    for (int i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      while (powers[i].size() <= m[i]) powers[i].push_back(powers[i].back() * forms[i]);
      term = term * powers[i][m[i]];
    }
    out += term;
  }
  return out;
}

Polynomial substitute_orthogonal(const Polynomial& p, const std::vector<std::vector<Rational>>& m) {
  int n = p.dim();
  if (static_cast<int>(m.size()) != n)
    throw std::domain_error("substitute_orthogonal: matrix size mismatch");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n)
      throw std::domain_error("substitute_orthogonal: matrix size mismatch");
    for (int j = i; j < n; ++j) {
      Rational dot(0);
      for (int k = 0; k < n; ++k) dot += m[i][k] * m[j][k];
      if (dot != (i == j ? Rational(1) : Rational(0)))
        throw std::domain_error("substitute_orthogonal: matrix is not orthogonal");
    }
  }
  // P(M^T y): x_i = sum_j m[j][i] y_j.
  return substitute_linear(p, m);
}

Rational evaluate(const Polynomial& p, const std::vector<Rational>& pt) {
  if (static_cast<int>(pt.size()) != p.dim())
    throw std::domain_error("evaluate: dimension mismatch");
  Rational sum(0);
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (int i = 0; i < p.dim(); ++i)
      if (m[i] > 0) t *= pt[i].pow(m[i]);
    sum += t;
  }
  return sum;
}

Rational evaluate(const Polynomial& p, const RationalPoint& pt) { return evaluate(p, pt.coords); }

Polynomial scale_argument(const Polynomial& p, const Rational& c) {
  Polynomial r(p.dim());
  for (const auto& [m, coeff] : p.terms()) r.add_term(m, coeff * c.pow(total_degree(m)));
  return r;
}

}  // namespace funksphere
