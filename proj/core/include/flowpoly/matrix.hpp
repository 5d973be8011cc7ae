#pragma once

// Exact integer linear algebra: Hermite normal form with unimodular
// transform, integer kernels (saturated), ranks, determinants, and rational
// linear solves. Everything is dense; the matrices in this project are tiny
// (at most a few dozen rows/columns).

#include <optional>
#include <vector>

#include "flowpoly/rational.hpp"

namespace flowpoly {

using IntMat = std::vector<IntVec>;  // row-major; all rows the same length

struct HnfResult {
  IntMat H;  // row-style Hermite normal form
  IntMat U;  // unimodular, H = U * M
};

/// Row-style Hermite normal form. Pivots are positive, entries above a pivot
/// are reduced into [0, pivot), zero rows sink to the bottom, and H = U * M
/// with |det U| = 1.
HnfResult hnf(const IntMat& M);

/// Basis of the saturated integer kernel {x in Z^n : A x = 0}, returned as
/// rows. The returned lattice is exactly ker(A) over Z (not a finite-index
/// sublattice). `n` is the number of columns (needed when A has no rows).
IntMat int_kernel(const IntMat& A, int n);

/// Rank of an integer matrix (over Q).
int rank(const IntMat& A);

/// Dimension of the affine hull of a point set (rank of the differences).
/// An empty set has affine rank -1; a single point has affine rank 0.
int affine_rank(const std::vector<IntVec>& points);

/// Determinant of a square integer matrix (Bareiss fraction-free).
Int det(IntMat A);

/// Matrix-vector and matrix-matrix products.
IntVec mat_vec(const IntMat& A, const IntVec& x);
IntMat mat_mul(const IntMat& A, const IntMat& B);
IntMat transpose(const IntMat& A);
IntMat identity(int n);

/// Divides out the gcd of the entries and fixes the sign so the first
/// nonzero entry is positive. The zero vector is returned unchanged.
IntVec primitive(IntVec v);

/// Solves x * B = target for a rational row vector x, where B has full row
/// rank. Returns nullopt if the system is inconsistent.
std::optional<RatVec> solve_left(const IntMat& B, const RatVec& target);

/// Solves A x = b over Q (A need not be square). Returns nullopt if
/// inconsistent; if underdetermined, returns one solution.
std::optional<RatVec> solve_linear(const IntMat& A, const RatVec& b);

/// Inverse of a unimodular integer matrix (|det| = 1); throws otherwise.
IntMat inverse_unimodular(const IntMat& A);

}  // namespace flowpoly
