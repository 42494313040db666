#ifndef FUNKSPHERE_HARMONICS_HPP
#define FUNKSPHERE_HARMONICS_HPP

#include <vector>

#include "funksphere/polynomial.hpp"

namespace funksphere {

/// Fischer components of one homogeneous part: degree k and the harmonic
/// pieces H_{k-2j}, so that sum_j ||x||^{2j} H_{k-2j} reconstructs the part.
struct HarmonicDecomposition {
  unsigned degree = 0;
  std::vector<std::pair<unsigned, Polynomial>> components;  // (j, H_{k-2j})

  Polynomial reconstruct(int dim) const;
};

/// Harmonic projection of a homogeneous polynomial: the H_k component of the
/// Fischer decomposition, computed by the rational coefficient recurrence
/// a_{j+1} = -a_j / (2(j+1)(2k - 2j + m - 4)).
Polynomial harmonic_projection(const Polynomial& p);

/// Full Fischer decomposition, one entry per homogeneous part of P.
std::vector<HarmonicDecomposition> fischer_decompose(const Polynomial& p);

/// Canonical representative of P modulo ||x||^2 - 1: every Fischer factor
/// ||x||^{2j} collapses to 1.  Idempotent; agrees with P on the unit sphere.
Polynomial reduce_on_sphere(const Polynomial& p);

/// ||x||^2 Delta - (m - 2 + E) E applied literally.
Polynomial laplace_beltrami(const Polynomial& p);

/// Eigenvalue -k(m - 2 + k) of the Laplace-Beltrami operator on H_k.
long lb_eigenvalue(unsigned k, int m);

/// dim H_k = binom(k+m-1, m-1) - binom(k+m-3, m-1).
unsigned long harmonic_dimension(int m, unsigned k);

/// A basis of harmonic homogeneous polynomials of degree k in dimension m,
/// obtained by harmonic projection of the degree-k monomials and exact rank
/// selection in graded-lex order.
std::vector<Polynomial> sh_basis(int m, unsigned k);

}  // namespace funksphere

#endif
