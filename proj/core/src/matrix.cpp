#include "flowpoly/matrix.hpp"

#include <algorithm>

namespace flowpoly {

namespace {

int rows(const IntMat& A) { return static_cast<int>(A.size()); }
int cols(const IntMat& A) { return A.empty() ? 0 : static_cast<int>(A[0].size()); }

}  // namespace

IntMat identity(int n) {
  IntMat I(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

IntMat transpose(const IntMat& A) {
  IntMat T(cols(A), IntVec(rows(A)));
  for (int i = 0; i < rows(A); ++i)
    for (int j = 0; j < cols(A); ++j) T[j][i] = A[i][j];
  return T;
}

IntVec mat_vec(const IntMat& A, const IntVec& x) {
  IntVec y(rows(A), 0);
  for (int i = 0; i < rows(A); ++i)
    for (int j = 0; j < cols(A); ++j) y[i] += A[i][j] * x[j];
  return y;
}

IntMat mat_mul(const IntMat& A, const IntMat& B) {
  IntMat C(rows(A), IntVec(cols(B), 0));
  for (int i = 0; i < rows(A); ++i)
    for (int k = 0; k < cols(A); ++k) {
      if (A[i][k] == 0) continue;
      for (int j = 0; j < cols(B); ++j) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

HnfResult hnf(const IntMat& M) {
  const int m = rows(M), n = cols(M);
  IntMat H = M, U = identity(m);
  int r = 0;  // next pivot row
  for (int c = 0; c < n && r < m; ++c) {
    // Reduce column c below row r to a single nonzero entry by repeatedly
    // subtracting multiples of the row with the smallest |entry|.
    for (;;) {
      int piv = -1;
      for (int i = r; i < m; ++i) {
        if (H[i][c] == 0) continue;
        if (piv < 0 || cmp(abs(H[i][c]), abs(H[piv][c])) < 0) piv = i;
      }
      if (piv < 0) break;  // column is zero below r
      std::swap(H[r], H[piv]);
      std::swap(U[r], U[piv]);
      bool others = false;
      for (int i = r + 1; i < m; ++i) {
        if (H[i][c] == 0) continue;
        others = true;
        Int q;
        // Round-to-nearest quotient shrinks entries fastest.
        mpz_fdiv_q(q.get_mpz_t(), Int(H[i][c] * 2 + H[r][c]).get_mpz_t(),
                   Int(H[r][c] * 2).get_mpz_t());
        if (q != 0) {
          for (int j = 0; j < n; ++j) H[i][j] -= q * H[r][j];
          for (int j = 0; j < m; ++j) U[i][j] -= q * U[r][j];
        }
      }
      if (!others) break;
    }
    if (H[r][c] == 0) continue;
    if (H[r][c] < 0) {
      for (int j = 0; j < n; ++j) H[r][j] = -H[r][j];
      for (int j = 0; j < m; ++j) U[r][j] = -U[r][j];
    }
    // Reduce entries above the pivot into [0, pivot).
    for (int i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), H[i][c].get_mpz_t(), H[r][c].get_mpz_t());
      if (q != 0) {
        for (int j = 0; j < n; ++j) H[i][j] -= q * H[r][j];
        for (int j = 0; j < m; ++j) U[i][j] -= q * U[r][j];
      }
    }
    ++r;
  }
  return {std::move(H), std::move(U)};
}

IntMat int_kernel(const IntMat& A, int n) {
  // HNF of A^T: zero rows of H correspond to rows of U with U_i A^T = 0,
  // i.e. A (U_i)^T = 0. Because U is unimodular these rows span the full
  // (saturated) integer kernel.
  if (n == 0) return {};
  if (A.empty()) return identity(n);
  if (cols(A) != n) throw domain_error("int_kernel: column count mismatch");
  auto [H, U] = hnf(transpose(A));
  IntMat basis;
  for (int i = 0; i < n; ++i) {
    bool zero = std::all_of(H[i].begin(), H[i].end(),
                            [](const Int& x) { return x == 0; });
    if (zero) basis.push_back(U[i]);
  }
  return basis;
}

int rank(const IntMat& A) {
  if (A.empty()) return 0;
  auto [H, U] = hnf(A);
  int r = 0;
  for (const auto& row : H)
    if (!std::all_of(row.begin(), row.end(), [](const Int& x) { return x == 0; }))
      ++r;
  return r;
}

int affine_rank(const std::vector<IntVec>& points) {
  if (points.empty()) return -1;
  IntMat diffs;
  for (size_t i = 1; i < points.size(); ++i) {
    IntVec d(points[i].size());
    for (size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  if (diffs.empty()) return 0;
  return rank(diffs);
}

Int det(IntMat A) {
  const int n = rows(A);
  if (n == 0) return 1;
  if (cols(A) != n) throw domain_error("det: matrix not square");
  // Bareiss fraction-free elimination.
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (A[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (A[i][k] != 0) { swap_row = i; break; }
      if (swap_row < 0) return 0;
      std::swap(A[k], A[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev;
    prev = A[k][k];
  }
  return sign > 0 ? A[n - 1][n - 1] : Int(-A[n - 1][n - 1]);
}

IntVec primitive(IntVec v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return v;
  int first_sign = 0;
  for (const auto& x : v)
    if (x != 0) { first_sign = sgn(x); break; }
  if (first_sign < 0) g = -g;
  for (auto& x : v) x /= g;
  return v;
}

std::optional<RatVec> solve_linear(const IntMat& A, const RatVec& b) {
  const int m = rows(A), n = cols(A);
  // Rational Gaussian elimination on [A | b].
  std::vector<RatVec> T(m, RatVec(n + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) T[i][j] = Rational(A[i][j]);
    T[i][n] = b[i];
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (T[i][c] != Rational(0)) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(T[r], T[piv]);
    Rational p = T[r][c];
    for (int j = c; j <= n; ++j) T[r][j] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == r || T[i][c] == Rational(0)) continue;
      Rational f = T[i][c];
      for (int j = c; j <= n; ++j) T[i][j] -= f * T[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < m; ++i)
    if (T[i][n] != Rational(0)) return std::nullopt;  // inconsistent
  RatVec x(n, Rational(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = T[i][n];
  return x;
}

std::optional<RatVec> solve_left(const IntMat& B, const RatVec& target) {
  return solve_linear(transpose(B), target);
}

IntMat inverse_unimodular(const IntMat& A) {
  const int n = rows(A);
  Int d = det(A);
  if (d != 1 && d != -1)
    throw domain_error("inverse_unimodular: matrix is not unimodular");
  IntMat inv(n, IntVec(n));
  // Solve A x = e_i column by column; solutions are integral because
  // |det A| = 1 (Cramer).
  for (int i = 0; i < n; ++i) {
    RatVec e(n, Rational(0));
    e[i] = Rational(1);
    auto x = solve_linear(A, e);
    for (int j = 0; j < n; ++j) {
      if (!(*x)[j].is_integer())
        throw domain_error("inverse_unimodular: non-integral inverse");
      inv[j][i] = (*x)[j].num();
    }
  }
  return inv;
}

}  // namespace flowpoly
