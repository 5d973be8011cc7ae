#pragma once

// Undirected multigraphs (no loops) and the graph-theoretic side of the
// pipeline: Euler characteristic, primality, chassis, edge contraction,
// contracted descendants, isomorphism testing, and exhaustive enumeration of
// the families L_d (prime graphs with chi = d and minimal valency 3) and
// their 3-regular subfamilies.

#include <string>
#include <vector>

#include "flowpoly/quiver.hpp"

namespace flowpoly {

struct Graph {
  std::vector<std::string> vertices;        // unique names
  std::vector<std::pair<int, int>> edges;   // endpoint indices; no loops

  int n() const { return static_cast<int>(vertices.size()); }
  int m() const { return static_cast<int>(edges.size()); }
  int valency(int v) const;
  int vertex_index(const std::string& name) const;  // throws if absent

  /// Builds a graph from named vertices/edges; validates uniqueness and
  /// rejects loops.
  static Graph make(std::vector<std::string> vertices,
                    std::vector<std::pair<std::string, std::string>> edges);
};

/// Number of connected components (isolated vertices count).
int num_components(const Graph& g);

/// Euler characteristic chi = |E| - |V| + #components.
int chi(const Graph& g);

/// Prime: connected, at least one edge, and still connected after deleting
/// any single vertex together with its incident edges.
bool is_prime_graph(const Graph& g);

/// Chassis: contract every edge not contained in a cycle, then smooth all
/// valency-2 vertices (or collapse to the 2-cycle if everything is a cycle).
/// Throws domain_error unless the input is prime with chi > 0.
Graph chassis(const Graph& g);

/// Contracts edge `e`; throws domain_error if a parallel edge exists (the
/// contraction would create a loop). The merged vertex keeps the
/// lexicographically sorted concatenation of the two names.
Graph contract_edge(const Graph& g, int e);

/// True iff `child` is obtained from `parent` by successively contracting
/// edges (reflexively: isomorphic graphs qualify).
bool is_contracted_descendant(const Graph& child, const Graph& parent);

/// Multigraph isomorphism (backtracking with valency pruning).
bool graph_isomorphic(const Graph& a, const Graph& b);

/// All members of L_d with at most `max_vertices` vertices, up to
/// isomorphism. For d >= 2 every member has at most 2(d-1) vertices, so
/// max_vertices >= 2(d-1) yields the complete family.
std::vector<Graph> enumerate_Ld(int d, int max_vertices);

/// The 3-regular members of L_d (each has 2(d-1) vertices, 3(d-1) edges).
std::vector<Graph> enumerate_Ld_3reg(int d);

/// Star quiver: a sink s<i> in the middle of every edge i, with arrows
/// a<i> (from the first endpoint) and b<i> (from the second) into it.
Quiver star(const Graph& g);

/// Text interchange format: one "u -- v" line per edge.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

/// Primality of the flow polytope of a tight pair, decided via the
/// underlying graph. Throws domain_error unless (q, theta) is tight.
bool is_prime_flow(const Quiver& q, const Weight& theta);

}  // namespace flowpoly
