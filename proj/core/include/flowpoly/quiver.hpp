#pragma once

// Quivers (directed multigraphs without loops), integer weights, flow
// polytopes nabla(Q, theta, l, u), the translation weights omega_k, the
// tightness conditions (R)/(C), and the reduction operations (arrow removal,
// arrow contraction, source reversal, acyclification, tightening).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flowpoly/polytope.hpp"
#include "flowpoly/rational.hpp"

namespace flowpoly {

struct Arrow {
  std::string id;
  std::string tail;  // a^-
  std::string head;  // a^+
};

struct Quiver {
  std::vector<std::string> vertices;  // unique ids
  std::vector<Arrow> arrows;          // unique ids; tail != head (no loops)

  int vertex_index(const std::string& id) const;  // throws if absent
  int arrow_index(const std::string& id) const;   // throws if absent
  bool is_acyclic() const;
  int num_components() const;  // of the underlying graph
  int chi() const;             // |arrows| - |vertices| + #components

  /// Validates uniqueness, endpoint existence, and the no-loop invariant.
  static Quiver make(std::vector<std::string> vertices, std::vector<Arrow> arrows);
};

/// Integer weight on the vertices.
using Weight = std::map<std::string, Int>;

/// Arrow bounds: lower defaults to 0, upper defaults to +infinity
/// (represented by an absent entry / nullopt).
struct BoundsSpec {
  std::map<std::string, Int> lower;
  std::map<std::string, std::optional<Int>> upper;

  Int lower_of(const std::string& arrow) const;
  std::optional<Int> upper_of(const std::string& arrow) const;
};

/// Integer affine form over the free arrows of a parametrization.
struct AffineForm {
  std::map<std::string, Int> coeff;  // free arrow id -> coefficient
  Int constant = 0;
};

/// Solution of the flow equations of A(Q, theta) over a spanning forest:
/// every arrow coordinate is an integer affine form in the free arrows.
struct AffineParametrization {
  std::vector<std::string> free_arrows;        // size = chi(Q)
  std::map<std::string, AffineForm> expr;      // defined for every arrow
};

/// omega_k(v) = sum_{head(a)=v} k(a) - sum_{tail(a)=v} k(a).
Weight omega(const Quiver& q, const std::map<std::string, Int>& k);

/// Pointwise sum of weights over the same vertex set.
Weight add_weights(const Weight& a, const Weight& b);

/// Solves the flow equations by a spanning forest. Throws domain_error
/// ("empty affine space") if some component's weight sum is nonzero.
AffineParametrization parametrize(const Quiver& q, const Weight& theta);

/// All integer points of nabla(Q, theta, l, u), as vectors indexed by the
/// quiver's arrow order, sorted lexicographically. Throws domain_error
/// ("unbounded") if the search region is infinite.
std::vector<IntVec> lattice_points(const Quiver& q, const Weight& theta,
                                   const BoundsSpec& b = {});

/// Condition (R): nabla(Q, theta) lies in {x(a) = 0} (including the empty
/// polytope). Requires q acyclic.
bool is_removable(const Quiver& q, const Weight& theta, const std::string& a);

/// Condition (C): x(a) >= 0 holds on {x in A(Q,theta) : x(b) >= 0 for b != a}
/// (including the infeasible case). Requires q acyclic.
bool is_contractible(const Quiver& q, const Weight& theta, const std::string& a);

/// Structural contraction: removes arrow a and merges its endpoints. The
/// merged vertex id is the sorted concatenation of the endpoint ids. Throws
/// domain_error if another arrow joins the same endpoints (loop guard).
std::pair<Quiver, Weight> contract_arrow(const Quiver& q, const Weight& theta,
                                         const std::string& a);

/// Structural removal; weight unchanged.
std::pair<Quiver, Weight> remove_arrow(const Quiver& q, const Weight& theta,
                                       const std::string& a);

/// Successively fires (R) removals and (C) contractions (id order, (R)
/// first, restart after each change) until the pair is tight. Requires q
/// acyclic and nabla(Q,theta) nonempty (throws domain_error "empty").
std::pair<Quiver, Weight> tighten(const Quiver& q, const Weight& theta);

/// True iff no arrow satisfies (R) or (C).
bool is_tight(const Quiver& q, const Weight& theta);

/// Reverses the two arrows at a valency-2 source v with distinct heads:
/// theta'(v) = -theta(v) and both former heads gain theta(v).
std::pair<Quiver, Weight> reverse_valency2_source(const Quiver& q,
                                                  const Weight& theta,
                                                  const std::string& v);

/// Reflects a feedback arrow set (x(a) := u(a) - x'(a)) so the result is
/// acyclic with an equivalent polytope. Throws domain_error
/// ("cannot acyclify") if a cycle contains an arrow with unbounded upper
/// bound.
std::tuple<Quiver, Weight, BoundsSpec> acyclify(const Quiver& q,
                                                const Weight& theta,
                                                const BoundsSpec& b);

/// The lattice polytope nabla(Q, theta, l, u) in R^{Q_1}.
LatticePolytope flow_polytope(const Quiver& q, const Weight& theta,
                              const BoundsSpec& b = {});

}  // namespace flowpoly
