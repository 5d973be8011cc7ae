#include "flowpoly/lp.hpp"

#include <algorithm>

namespace flowpoly {

void LinearProgram::add_eq(RatVec lhs, Rational rhs) {
  eq_lhs.push_back(std::move(lhs));
  eq_rhs.push_back(std::move(rhs));
}

void LinearProgram::add_ge(RatVec lhs, Rational rhs) {
  ge_lhs.push_back(std::move(lhs));
  ge_rhs.push_back(std::move(rhs));
}

namespace {

const Rational kZero(0), kOne(1);

// Dense simplex tableau for min cost.y s.t. T y = rhs, y >= 0.
struct Tableau {
  std::vector<RatVec> rows;  // m x n
  RatVec rhs;                // m, kept nonnegative
  std::vector<int> basis;    // basic variable of each row
  int n = 0;

  void pivot(int r, int c) {
    Rational p = rows[r][c];
    for (auto& v : rows[r]) v /= p;
    rhs[r] /= p;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][c] == kZero) continue;
      Rational f = rows[i][c];
      for (int j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    basis[r] = c;
  }
};

// Runs simplex with Bland's rule on a tableau whose basis columns are
// already unit vectors. Returns false if unbounded below.
bool run_simplex(Tableau& t, const RatVec& cost, Rational& value) {
  const int m = static_cast<int>(t.rows.size());
  // Reduced-cost row: cost minus the basic-cost combination of the rows.
  RatVec crow = cost;
  Rational cval(0);
  for (int i = 0; i < m; ++i) {
    Rational cb = cost[t.basis[i]];
    if (cb == kZero) continue;
    for (int j = 0; j < t.n; ++j) crow[j] -= cb * t.rows[i][j];
    cval -= cb * t.rhs[i];
  }
  for (;;) {
    int enter = -1;  // Bland: smallest index with negative reduced cost
    for (int j = 0; j < t.n; ++j)
      if (crow[j] < kZero) { enter = j; break; }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (t.rows[i][enter] <= kZero) continue;
      Rational ratio = t.rhs[i] / t.rows[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && t.basis[i] < t.basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) return false;  // unbounded
    t.pivot(leave, enter);
    Rational f = crow[enter];
    for (int j = 0; j < t.n; ++j) crow[j] -= f * t.rows[leave][j];
    cval -= f * t.rhs[leave];
  }
  value = -cval;
  return true;
}

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  // Standard form: split each free variable into a difference of two
  // nonnegative ones, turn >= rows into equations with slacks, and make the
  // right-hand sides nonnegative.
  const int nfree = lp.n;
  const int nslack = static_cast<int>(lp.ge_lhs.size());
  const int nreal = 2 * nfree + nslack;
  const int m = static_cast<int>(lp.eq_lhs.size()) + nslack;

  Tableau t;
  t.n = nreal + m;  // artificials appended
  t.rows.assign(m, RatVec(t.n, kZero));
  t.rhs.assign(m, kZero);
  t.basis.resize(m);

  auto fill_row = [&](int r, const RatVec& lhs, const Rational& rhs, int slack) {
    for (int j = 0; j < nfree; ++j) {
      t.rows[r][2 * j] = lhs[j];
      t.rows[r][2 * j + 1] = -lhs[j];
    }
    if (slack >= 0) t.rows[r][2 * nfree + slack] = Rational(-1);
    t.rhs[r] = rhs;
    if (t.rhs[r] < kZero) {
      for (auto& v : t.rows[r]) v = -v;
      t.rhs[r] = -t.rhs[r];
    }
  };

  int r = 0;
  for (size_t i = 0; i < lp.eq_lhs.size(); ++i, ++r)
    fill_row(r, lp.eq_lhs[i], lp.eq_rhs[i], -1);
  for (int i = 0; i < nslack; ++i, ++r)
    fill_row(r, lp.ge_lhs[i], lp.ge_rhs[i], i);

  for (int i = 0; i < m; ++i) {
    t.rows[i][nreal + i] = kOne;
    t.basis[i] = nreal + i;
  }

  // Phase 1: minimize the sum of artificials.
  RatVec phase1(t.n, kZero);
  for (int i = 0; i < m; ++i) phase1[nreal + i] = kOne;
  Rational v1;
  run_simplex(t, phase1, v1);  // always bounded below by 0
  if (v1 != kZero) return {LpStatus::Infeasible, kZero, {}};

  // Drive leftover artificials out of the basis (redundant rows pivot on
  // any nonzero real column, or are structurally zero and can be ignored by
  // zeroing the artificial's column usage).
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < nreal) continue;
    int c = -1;
    for (int j = 0; j < nreal; ++j)
      if (t.rows[i][j] != kZero) { c = j; break; }
    if (c >= 0) t.pivot(i, c);
    // else: redundant all-zero row; harmless to leave with zero rhs.
  }
  // Forbid artificials from re-entering by pricing them at +infinity --
  // equivalently, truncate the tableau to the real columns.
  for (int i = 0; i < m; ++i) t.rows[i].resize(nreal);
  t.n = nreal;

  // Rows still basic in an artificial are all-zero; give them a harmless
  // placeholder basis entry outside the pricing range by removing them.
  {
    Tableau clean;
    clean.n = nreal;
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] >= nreal) continue;
      clean.rows.push_back(std::move(t.rows[i]));
      clean.rhs.push_back(std::move(t.rhs[i]));
      clean.basis.push_back(t.basis[i]);
    }
    t = std::move(clean);
  }

  // Phase 2.
  RatVec cost(nreal, kZero);
  for (int j = 0; j < nfree; ++j) {
    Rational c = lp.maximize ? -lp.objective[j] : lp.objective[j];
    cost[2 * j] = c;
    cost[2 * j + 1] = -c;
  }
  Rational v2;
  if (!run_simplex(t, cost, v2)) return {LpStatus::Unbounded, kZero, {}};

  RatVec y(nreal, kZero);
  for (size_t i = 0; i < t.basis.size(); ++i) y[t.basis[i]] = t.rhs[i];
  RatVec x(nfree, kZero);
  for (int j = 0; j < nfree; ++j) x[j] = y[2 * j] - y[2 * j + 1];
  return {LpStatus::Optimal, lp.maximize ? -v2 : v2, std::move(x)};
}

}  // namespace flowpoly
