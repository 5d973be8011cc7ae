#pragma once

// Exact rational linear programming: a dense two-phase simplex with Bland's
// rule (no cycling, no floating point). Problems in this project are tiny
// (tens of variables), so a dense tableau is the right tool.

#include <vector>

#include "flowpoly/rational.hpp"

namespace flowpoly {

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status;
  Rational value;  // optimal objective value (meaningful iff Optimal)
  RatVec x;        // an optimal point (meaningful iff Optimal)
};

/// A linear program over free (sign-unrestricted) variables:
///   optimize objective . x
///   subject to  eq_lhs[i] . x == eq_rhs[i]   for all i
///               ge_lhs[i] . x >= ge_rhs[i]   for all i
struct LinearProgram {
  int n = 0;  // number of variables
  bool maximize = false;
  RatVec objective;
  std::vector<RatVec> eq_lhs;
  RatVec eq_rhs;
  std::vector<RatVec> ge_lhs;
  RatVec ge_rhs;

  void add_eq(RatVec lhs, Rational rhs);
  void add_ge(RatVec lhs, Rational rhs);
};

/// Solves the LP exactly. `x` in the result is a vertex-optimal assignment
/// of the original free variables.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace flowpoly
