#pragma once

// Exact spectral invariants of integer matrices: characteristic polynomials
// by Hessenberg reduction modulo word-size primes with CRT reconstruction,
// fraction-free determinants over polynomial entries, and deterministic
// floating eigenvalue extraction for symmetric matrices.

#include <cstdint>
#include <vector>

#include "sympow/intpoly.hpp"
#include "sympow/types.hpp"

namespace sympow {

struct ModPoly {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> coeffs;  // constant first, monic of length n+1
};

// det(tI - m) over F_p. Any prime works: the reduction is a similarity
// transform over the field, so no primes are "unlucky".
ModPoly charpoly_mod(const IntMatrix& m, std::uint64_t p);

// det(m + alpha I) mod p by Gaussian elimination.
std::uint64_t det_shift_mod(const IntMatrix& m, std::uint64_t alpha,
                            std::uint64_t p);

// Exact characteristic polynomial det(tI - m). Reconstruction uses enough
// 62-bit primes to cover twice the coefficient bound
// binom(d, d/2) * (ceil(sqrt(d)) * max|entry|)^d, so the symmetric lift
// recovers signs. Workers parallelise the per-prime passes.
IntPolynomial charpoly_exact(const IntMatrix& m, int workers = 1);

// Determinant of a matrix of integer polynomials, Bareiss fraction-free
// elimination (all intermediate divisions are exact).
IntPolynomial polydet(const Mat<IntPolynomial>& m);

// Exact integer determinant, same elimination.
Int intdet(const IntMatrix& m);

struct EigenSpectrum {
  RealVector values;  // sorted descending
  double tol = 0;     // comparison scale used by multiplicity grouping
};

// Eigenvalues of a symmetric real matrix, sorted descending. Throws
// std::invalid_argument if m is asymmetric beyond 1e-12 (relative).
EigenSpectrum symmetric_eigenvalues(const RealMatrix& m);

// Group a descending eigenvalue list into (value, multiplicity) pairs,
// chaining: a value joins the current group if it is within tol of the
// group's last member.
std::vector<std::pair<double, int>> group_spectrum(const RealVector& values,
                                                   double tol);

// Multiset comparison of two descending spectra within tol.
bool spectra_close(const RealVector& a, const RealVector& b, double tol);

}  // namespace sympow
