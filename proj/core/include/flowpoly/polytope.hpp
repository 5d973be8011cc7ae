#pragma once

// Lattice polytopes as immutable values: canonical point lists, exact facet
// enumeration, compressedness, full-dimensional normalization, products,
// fingerprints, and lattice-affine equivalence with explicit witness maps.

#include <optional>
#include <vector>

#include "flowpoly/matrix.hpp"
#include "flowpoly/rational.hpp"

namespace flowpoly {

struct Facet {
  IntVec normal;  // primitive
  Int offset;     // inequality: normal . x >= offset
};

struct LatticePolytope {
  int ambient = 0;
  std::vector<IntVec> points;  // lex-sorted; ALL lattice points of the hull
  std::vector<Facet> facets;   // irredundant, valid, tight on dim aff.indep. points
  int dim = -1;                // affine rank of points
};

/// Affine map x -> A x + t between ambient spaces; restricted to the source
/// affine lattice it is a bijection onto the target affine lattice.
struct AffineLatticeMap {
  IntMat A;
  IntVec t;

  IntVec apply(const IntVec& x) const;
};

/// Result of normalizing a polytope to full dimension: `to_full` maps
/// ambient points into Z^dim bijectively on the affine lattice, and
/// `from_full` is its inverse on the image.
struct Normalization {
  LatticePolytope polytope;  // full-dimensional (ambient == dim)
  AffineLatticeMap to_full;
  AffineLatticeMap from_full;
};

struct Fingerprint {
  int dim = -1;
  int n_points = 0;
  int n_facets = 0;
  Int normalized_volume;
  std::vector<int> facet_point_incidence;  // sorted per-facet point counts
  RatVec ehrhart_coeffs;                   // ascending degree

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// Builds a polytope from its full lattice point set: sorts canonically,
/// computes facets exhaustively, and verifies the set is saturated (throws
/// domain_error "point set not saturated" otherwise).
LatticePolytope from_points(int ambient, std::vector<IntVec> points);

/// Facet list of the convex hull of a point set relative to its affine
/// hull, as primitive inequalities in ambient coordinates.
std::vector<Facet> facets(int ambient, const std::vector<IntVec>& points);

/// Width-1 test against every facet, on the lattice-normalized polytope.
bool is_compressed(const LatticePolytope& p);

/// Identifies AffSpan(P) with Z^dim via an HNF basis of the saturated
/// difference lattice.
Normalization normalize_full_dim(const LatticePolytope& p);

/// Lattice-affine equivalence. Returns a witnessing ambient-to-ambient map
/// if and only if the polytopes are equivalent.
std::optional<AffineLatticeMap> equivalent(const LatticePolytope& p1,
                                           const LatticePolytope& p2);

Fingerprint fingerprint(const LatticePolytope& p);

/// Normalized volume (dim! times Euclidean volume in lattice-normalized
/// coordinates).
Int normalized_volume(const LatticePolytope& p);

/// Cartesian product; points are all concatenations.
LatticePolytope product(const LatticePolytope& p1, const LatticePolytope& p2);

/// Indices (into p.points) of the points lying on the given facet.
std::vector<int> facet_point_indices(const LatticePolytope& p, const Facet& f);

}  // namespace flowpoly
