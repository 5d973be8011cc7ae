#include "flowpoly/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace flowpoly {

int Graph::valency(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges) d += (a == v) + (b == v);
  return d;
}

int Graph::vertex_index(const std::string& name) const {
  for (int i = 0; i < n(); ++i)
    if (vertices[i] == name) return i;
  throw domain_error("Graph: unknown vertex '" + name + "'");
}

Graph Graph::make(std::vector<std::string> vertices,
                  std::vector<std::pair<std::string, std::string>> edges) {
  Graph g;
  g.vertices = std::move(vertices);
  std::set<std::string> seen(g.vertices.begin(), g.vertices.end());
  if (seen.size() != g.vertices.size())
    throw domain_error("Graph: duplicate vertex names");
  for (const auto& [u, v] : edges) {
    if (u == v) throw domain_error("Graph: loop edge at '" + u + "'");
    g.edges.emplace_back(g.vertex_index(u), g.vertex_index(v));
  }
  return g;
}

namespace {

// Connected components ignoring the vertices in `skip` (bitmask).
int components_excluding(const Graph& g, unsigned skip) {
  const int n = g.n();
  std::vector<int> comp(n, -1);
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0 || (skip >> s & 1)) continue;
    comp[s] = c;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& [a, b] : g.edges) {
        int w = -1;
        if (a == v) w = b;
        else if (b == v) w = a;
        if (w >= 0 && comp[w] < 0 && !(skip >> w & 1)) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
    ++c;
  }
  return c;
}

// Adjacency multiplicity matrix.
std::vector<std::vector<int>> adjacency(const Graph& g) {
  std::vector<std::vector<int>> A(g.n(), std::vector<int>(g.n(), 0));
  for (const auto& [a, b] : g.edges) {
    ++A[a][b];
    ++A[b][a];
  }
  return A;
}

}  // namespace

int num_components(const Graph& g) { return components_excluding(g, 0); }

int chi(const Graph& g) { return g.m() - g.n() + num_components(g); }

bool is_prime_graph(const Graph& g) {
  if (g.m() == 0) return false;
  if (num_components(g) != 1) return false;
  for (int v = 0; v < g.n(); ++v)
    if (components_excluding(g, 1u << v) > 1) return false;
  return true;
}

Graph contract_edge(const Graph& g, int e) {
  if (e < 0 || e >= g.m()) throw domain_error("contract_edge: bad edge index");
  auto [u, v] = g.edges[e];
  for (int i = 0; i < g.m(); ++i) {
    if (i == e) continue;
    auto [a, b] = g.edges[i];
    if ((a == u && b == v) || (a == v && b == u))
      throw domain_error("contract_edge: parallel edge would become a loop");
  }
  std::string merged = std::min(g.vertices[u], g.vertices[v]) + "+" +
                       std::max(g.vertices[u], g.vertices[v]);
  Graph h;
  std::vector<int> remap(g.n());
  for (int i = 0; i < g.n(); ++i) {
    if (i == u || i == v) continue;
    remap[i] = static_cast<int>(h.vertices.size());
    h.vertices.push_back(g.vertices[i]);
  }
  remap[u] = remap[v] = static_cast<int>(h.vertices.size());
  h.vertices.push_back(merged);
  for (int i = 0; i < g.m(); ++i) {
    if (i == e) continue;
    auto [a, b] = g.edges[i];
    h.edges.emplace_back(remap[a], remap[b]);
  }
  return h;
}

bool graph_isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  const int n = a.n();
  std::vector<int> da(n), db(n);
  for (int i = 0; i < n; ++i) {
    da[i] = a.valency(i);
    db[i] = b.valency(i);
  }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  auto A = adjacency(a), B = adjacency(b);
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || da[v] != db[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (A[v][u] != B[w][map[u]]) ok = false;
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (rec(v + 1)) return true;
      used[w] = false;
      map[v] = -1;
    }
    return false;
  };
  return rec(0);
}

Graph chassis(const Graph& g) {
  if (!is_prime_graph(g)) throw domain_error("chassis: graph is not prime");
  if (chi(g) <= 0) throw domain_error("chassis: chi must be positive");

  // Step 1: contract every edge not contained in a cycle. An edge lies in a
  // cycle iff its endpoints stay connected after deleting (that copy of) it.
  Graph cur = g;
  for (bool changed = true; changed;) {
    changed = false;
    for (int e = 0; e < cur.m(); ++e) {
      Graph without = cur;
      without.edges.erase(without.edges.begin() + e);
      auto [u, v] = cur.edges[e];
      // connected query between u and v in `without`
      std::vector<bool> vis(without.n(), false);
      std::vector<int> stack{u};
      vis[u] = true;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& [p, q] : without.edges) {
          int w = p == x ? q : (q == x ? p : -1);
          if (w >= 0 && !vis[w]) {
            vis[w] = true;
            stack.push_back(w);
          }
        }
      }
      if (!vis[v]) {  // bridge: not in any cycle
        cur = contract_edge(cur, e);
        changed = true;
        break;
      }
    }
  }

  // Step 2: all valencies are now >= 2. If no vertex has valency >= 3 the
  // graph is a cycle and the chassis is the 2-cycle; otherwise smooth every
  // valency-2 vertex (replace its two edges by one edge between the
  // neighbors).
  bool has_branch = false;
  for (int v = 0; v < cur.n(); ++v)
    if (cur.valency(v) >= 3) has_branch = true;
  if (!has_branch)
    return Graph::make({"c0", "c1"}, {{"c0", "c1"}, {"c0", "c1"}});

  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < cur.n(); ++v) {
      if (cur.valency(v) != 2) continue;
      int e1 = -1, e2 = -1;
      for (int e = 0; e < cur.m(); ++e)
        if (cur.edges[e].first == v || cur.edges[e].second == v)
          (e1 < 0 ? e1 : e2) = e;
      auto other = [&](int e) {
        return cur.edges[e].first == v ? cur.edges[e].second : cur.edges[e].first;
      };
      int a = other(e1), b = other(e2);
      if (a == b)
        throw domain_error("chassis: unexpected doubled pendant (not prime?)");
      Graph h;
      std::vector<int> remap(cur.n());
      for (int i = 0; i < cur.n(); ++i) {
        if (i == v) continue;
        remap[i] = static_cast<int>(h.vertices.size());
        h.vertices.push_back(cur.vertices[i]);
      }
      for (int e = 0; e < cur.m(); ++e) {
        if (e == e1 || e == e2) continue;
        h.edges.emplace_back(remap[cur.edges[e].first], remap[cur.edges[e].second]);
      }
      h.edges.emplace_back(remap[a], remap[b]);
      cur = std::move(h);
      changed = true;
      break;
    }
  }
  return cur;
}

bool is_contracted_descendant(const Graph& child, const Graph& parent) {
  if (child.n() > parent.n()) return false;
  if (graph_isomorphic(child, parent)) return true;
  // BFS over single-edge contractions, deduplicating up to isomorphism.
  std::vector<Graph> frontier{parent};
  while (!frontier.empty()) {
    std::vector<Graph> next;
    for (const auto& g : frontier) {
      if (g.n() <= child.n()) continue;
      for (int e = 0; e < g.m(); ++e) {
        Graph h;
        try {
          h = contract_edge(g, e);
        } catch (const domain_error&) {
          continue;  // parallel edge: contraction undefined
        }
        if (h.n() == child.n() && graph_isomorphic(h, child)) return true;
        bool dup = false;
        for (const auto& k : next)
          if (graph_isomorphic(h, k)) { dup = true; break; }
        if (!dup) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  return false;
}

namespace {

// Recursively distributes `remaining` edges over the vertex pairs from index
// `idx` on, collecting graphs that satisfy the L_d conditions.
void enumerate_rec(int n, int d, const std::vector<std::pair<int, int>>& pairs,
                   size_t idx, int remaining, std::vector<int>& counts,
                   std::vector<int>& deg, std::vector<Graph>& out) {
  if (idx == pairs.size()) {
    if (remaining != 0) return;
    for (int v = 0; v < n; ++v)
      if (deg[v] < 3) return;
    Graph g;
    for (int v = 0; v < n; ++v) g.vertices.push_back("v" + std::to_string(v));
    for (size_t i = 0; i < pairs.size(); ++i)
      for (int c = 0; c < counts[i]; ++c) g.edges.push_back(pairs[i]);
    if (num_components(g) != 1 || !is_prime_graph(g)) return;
    for (const auto& h : out)
      if (graph_isomorphic(g, h)) return;
    out.push_back(std::move(g));
    return;
  }
  for (int c = 0; c <= remaining; ++c) {
    counts[idx] = c;
    deg[pairs[idx].first] += c;
    deg[pairs[idx].second] += c;
    enumerate_rec(n, d, pairs, idx + 1, remaining - c, counts, deg, out);
    deg[pairs[idx].first] -= c;
    deg[pairs[idx].second] -= c;
    counts[idx] = 0;
  }
}

}  // namespace

std::vector<Graph> enumerate_Ld(int d, int max_vertices) {
  if (d < 1) throw domain_error("enumerate_Ld: d must be >= 1");
  if (d == 1) {
    if (max_vertices < 2) return {};
    return {Graph::make({"v0", "v1"}, {{"v0", "v1"}, {"v0", "v1"}})};
  }
  // Minimal valency 3 forces 3n <= 2|E| = 2(n + d - 1), i.e. n <= 2(d-1).
  int cap = std::min(max_vertices, 2 * (d - 1));
  std::vector<Graph> out;
  for (int n = 2; n <= cap; ++n) {
    int m = n + d - 1;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<int> counts(pairs.size(), 0), deg(n, 0);
    enumerate_rec(n, d, pairs, 0, m, counts, deg, out);
  }
  return out;
}

std::vector<Graph> enumerate_Ld_3reg(int d) {
  if (d < 2) throw domain_error("enumerate_Ld_3reg: d must be >= 2");
  std::vector<Graph> out;
  for (auto& g : enumerate_Ld(d, 2 * (d - 1))) {
    bool reg = true;
    for (int v = 0; v < g.n(); ++v)
      if (g.valency(v) != 3) reg = false;
    if (reg) out.push_back(std::move(g));
  }
  return out;
}

Quiver star(const Graph& g) {
  std::vector<std::string> vertices = g.vertices;
  std::vector<Arrow> arrows;
  for (int e = 0; e < g.m(); ++e) {
    std::string sink = "s" + std::to_string(e);
    vertices.push_back(sink);
    arrows.push_back({"a" + std::to_string(e), g.vertices[g.edges[e].first], sink});
    arrows.push_back({"b" + std::to_string(e), g.vertices[g.edges[e].second], sink});
  }
  return Quiver::make(std::move(vertices), std::move(arrows));
}

Graph parse_graph(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> vertices;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string u, dash, v;
    if (!(ls >> u >> dash >> v) || dash != "--")
      throw domain_error("parse_graph: expected 'u -- v', got '" + line + "'");
    for (const auto& name : {u, v})
      if (seen.insert(name).second) vertices.push_back(name);
    edges.emplace_back(u, v);
  }
  return Graph::make(std::move(vertices), std::move(edges));
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  for (const auto& [u, v] : g.edges)
    out << g.vertices[u] << " -- " << g.vertices[v] << "\n";
  return out.str();
}

bool is_prime_flow(const Quiver& q, const Weight& theta) {
  if (!is_tight(q, theta)) throw domain_error("is_prime_flow: requires tight pair");
  Graph g;
  g.vertices = q.vertices;
  for (const auto& a : q.arrows)
    g.edges.emplace_back(g.vertex_index(a.tail), g.vertex_index(a.head));
  return is_prime_graph(g);
}

}  // namespace flowpoly
