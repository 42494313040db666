#ifndef FUNKSPHERE_TEST_UTIL_HPP
#define FUNKSPHERE_TEST_UTIL_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "funksphere/polynomial.hpp"

namespace funksphere::testutil {

/// Deterministic 64-bit LCG so every run sees the same pseudo-random cases.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed * 2862933555777941757ULL + 3037000493ULL) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_ >> 11;
  }
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  /// Small signed rational with numerator in [-9, 9] \ {0} and denominator in [1, 4].
  Rational rational() {
    long num = static_cast<long>(below(9)) + 1;
    if (below(2)) num = -num;
    return Rational(num, static_cast<long>(below(4)) + 1);
  }

 private:
  std::uint64_t state_;
};

/// Dense-ish pseudo-random polynomial of total degree <= deg.
inline Polynomial random_poly(Rng& rng, int m, unsigned deg, unsigned terms = 6) {
  Polynomial p(m);
  for (unsigned t = 0; t < terms; ++t) {
    Monomial mono(m, 0);
    unsigned budget = rng.below(deg + 1);
    for (unsigned i = 0; i < budget; ++i) ++mono[rng.below(m)];
    p.add_term(mono, rng.rational());
  }
  return p;
}

/// Pseudo-random homogeneous polynomial of exact degree deg.
inline Polynomial random_homogeneous(Rng& rng, int m, unsigned deg, unsigned terms = 6) {
  Polynomial p(m);
  for (unsigned t = 0; t < terms; ++t) {
    Monomial mono(m, 0);
    for (unsigned i = 0; i < deg; ++i) ++mono[rng.below(m)];
    p.add_term(mono, rng.rational());
  }
  return p;
}

/// Rational (cos, sin) pairs on the unit circle.
inline const std::vector<std::pair<Rational, Rational>>& pythagorean_pairs() {
  static const std::vector<std::pair<Rational, Rational>> pairs = {
      {Rational(3, 5), Rational(4, 5)},
      {Rational(5, 13), Rational(12, 13)},
      {Rational(8, 17), Rational(15, 17)},
      {Rational(20, 29), Rational(21, 29)},
      {Rational(7, 25), Rational(24, 25)},
  };
  return pairs;
}

inline std::vector<std::vector<Rational>> identity_matrix(int m) {
  std::vector<std::vector<Rational>> id(m, std::vector<Rational>(m, Rational(0)));
  for (int i = 0; i < m; ++i) id[i][i] = Rational(1);
  return id;
}

/// Apply a Givens rotation with rational cosine/sine in coordinates (i, j).
inline void apply_givens(std::vector<std::vector<Rational>>& mat, int i, int j,
                         const Rational& c, const Rational& s) {
  for (auto& row : mat) {
    Rational a = row[i], b = row[j];
    row[i] = c * a - s * b;
    row[j] = s * a + c * b;
  }
}

/// Random exactly-orthogonal rational matrix: a product of Givens rotations.
inline std::vector<std::vector<Rational>> random_orthogonal(Rng& rng, int m, int steps = 4) {
  auto mat = identity_matrix(m);
  const auto& pairs = pythagorean_pairs();
  for (int t = 0; t < steps; ++t) {
    int i = static_cast<int>(rng.below(m));
    int j = static_cast<int>(rng.below(m));
    if (i == j) j = (i + 1) % m;
    const auto& [c, s] = pairs[rng.below(pairs.size())];
    apply_givens(mat, i, j, c, s);
  }
  return mat;
}

/// Random rational point exactly on the unit sphere: rotate e1 by Givens steps.
inline RationalPoint random_unit_point(Rng& rng, int m, int steps = 4) {
  std::vector<Rational> v(m, Rational(0));
  v[0] = Rational(1);
  const auto& pairs = pythagorean_pairs();
  for (int t = 0; t < steps; ++t) {
    int i = static_cast<int>(rng.below(m));
    int j = static_cast<int>(rng.below(m));
    if (i == j) j = (i + 1) % m;
    const auto& [c, s] = pairs[rng.below(pairs.size())];
    Rational a = v[i], b = v[j];
    v[i] = c * a - s * b;
    v[j] = s * a + c * b;
  }
  return RationalPoint(std::move(v), true);
}

}  // namespace funksphere::testutil

#endif
