#include "funksphere/harmonics.hpp"

#include <stdexcept>

namespace funksphere {

Polynomial HarmonicDecomposition::reconstruct(int dim) const {
  Polynomial sum(dim);
  for (const auto& [j, h] : components) {
    Polynomial t = h;
    for (unsigned i = 0; i < j; ++i) t = mul_norm_sq(t);
    sum += t;
  }
  return sum;
}

Polynomial harmonic_projection(const Polynomial& p) {
  if (!p.is_homogeneous()) throw std::domain_error("harmonic_projection: input must be homogeneous");
  if (p.is_zero()) return p;
  unsigned k = static_cast<unsigned>(p.degree());
  int m = p.dim();
  // H = sum_j a_j ||x||^{2j} Delta^j P with a_0 = 1 and the recurrence below
  // forces Delta H = 0 degree by degree.
  Polynomial h = p;
  Polynomial dp = p;
  Rational a(1);
  Polynomial rpow = Polynomial::constant(m, Rational(1));
  for (unsigned j = 0; 2 * (j + 1) <= k; ++j) {
    dp = laplacian(dp);
    if (dp.is_zero()) break;
    long denom = 2L * (j + 1) * (2L * k - 2L * j + m - 4);
    a = -a / Rational(denom);
    rpow = mul_norm_sq(rpow);
    h += (rpow * dp).scale(a);
  }
  return h;
}

std::vector<HarmonicDecomposition> fischer_decompose(const Polynomial& p) {
  std::vector<HarmonicDecomposition> out;
  for (auto& [deg, part] : homogeneous_parts(p)) {
    HarmonicDecomposition dec;
    dec.degree = deg;
    Polynomial rest = part;
    unsigned j = 0;
    while (!rest.is_zero()) {
      Polynomial h = harmonic_projection(rest);
      if (!h.is_zero()) dec.components.emplace_back(j, h);
      rest -= h;
      if (rest.is_zero()) break;
      rest = divide_norm_sq(rest);
      ++j;
    }
    out.push_back(std::move(dec));
  }
  return out;
}

Polynomial reduce_on_sphere(const Polynomial& p) {
  Polynomial out(p.dim());
  for (const auto& dec : fischer_decompose(p))
    for (const auto& [j, h] : dec.components) out += h;
  return out;
}

Polynomial laplace_beltrami(const Polynomial& p) {
  Polynomial e = euler_op(p);
  return mul_norm_sq(laplacian(p)) - (euler_op(e) + e.scale(Rational(p.dim() - 2)));
}

long lb_eigenvalue(unsigned k, int m) {
  if (m < 2) throw std::domain_error("lb_eigenvalue: dimension must be at least 2");
  return -static_cast<long>(k) * (m - 2 + static_cast<long>(k));
}

unsigned long harmonic_dimension(int m, unsigned k) {
  auto choose = [](long n, long r) -> unsigned long {
    if (n < 0 || r < 0 || r > n) return 0;
    return binomial(n, r).get_ui();
  };
  return choose(k + m - 1, m - 1) - choose(static_cast<long>(k) + m - 3, m - 1);
}

std::vector<Polynomial> sh_basis(int m, unsigned k) {
  if (m < 2) throw std::domain_error("sh_basis: dimension must be at least 2");
  // Project the degree-k monomials whose last-variable exponent is 0 or 1.
  // Their count equals harmonic_dimension(m, k), and the projections are
  // automatically independent: a dependency would force a polynomial of
  // x_m-degree <= 1 to be a multiple of ||x||^2, which has x_m-degree >= 2
  // in its top x_m part.
  std::vector<Monomial> monos;
  Monomial cur(m, 0);
  // Recursive enumeration in the map's canonical (graded-lex) order.
  auto enumerate = [&](auto&& self, int pos, unsigned rem) -> void {
    if (pos == m - 1) {
      if (rem > 1) return;
      cur[pos] = rem;
      monos.push_back(cur);
      return;
    }
    for (long e = rem; e >= 0; --e) {
      cur[pos] = static_cast<std::uint32_t>(e);
      self(self, pos + 1, rem - static_cast<unsigned>(e));
    }
  };
  enumerate(enumerate, 0, k);

  std::vector<Polynomial> basis;
  basis.reserve(monos.size());
  for (const auto& mono : monos)
    basis.push_back(harmonic_projection(Polynomial::from_term(m, mono, Rational(1))));
  if (basis.size() != harmonic_dimension(m, k))
    throw std::logic_error("sh_basis: dimension mismatch");
  return basis;
}

}  // namespace funksphere
