#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace planext {

struct Edge {
  int u = 0;
  int v = 0;
  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}
  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class AbstractGraph {
 public:
  AbstractGraph() = default;
  explicit AbstractGraph(int n) : adj_(static_cast<std::size_t>(check_order(n))) {}

  static AbstractGraph from_edges(int n, std::span<const Edge> edges) {
    AbstractGraph g(n);
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v >= n) throw InputError("edge endpoint out of range");
      if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
      g.adj_[e.u].push_back(e.v);
      g.adj_[e.v].push_back(e.u);
    }
    g.normalize(true);
    return g;
  }

  static AbstractGraph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<Edge> es;
    for (auto [a, b] : edges) es.emplace_back(a, b);
    return from_edges(n, es);
  }

  // Validates loops, range and symmetry.
  static AbstractGraph from_adjacency(std::vector<std::vector<int>> adjacency) {
    AbstractGraph g;
    g.adj_ = std::move(adjacency);
    const int n = g.order();
    for (int v = 0; v < n; ++v) {
      for (int u : g.adj_[v]) {
        if (u < 0 || u >= n)
          throw InputError("vertex " + std::to_string(v) + ": neighbor " + std::to_string(u) +
                           " out of range");
        if (u == v) throw InputError("loop at vertex " + std::to_string(v));
      }
    }
    g.normalize(false);
    for (int v = 0; v < n; ++v)
      for (int u : g.adj_[v])
        if (!g.adjacent(u, v))
          throw InputError("adjacency not symmetric: " + std::to_string(v) + " lists " +
                           std::to_string(u) + " but not conversely");
    return g;
  }

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return m_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  bool adjacent(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int v = 0; v < order(); ++v)
      for (int u : adj_[v])
        if (v < u) out.emplace_back(v, u);
    return out;
  }

  AbstractGraph with_edge(int u, int v) const {
    auto es = edges();
    es.emplace_back(u, v);
    return from_edges(order(), es);
  }

  AbstractGraph without_edge(int u, int v) const {
    auto es = edges();
    std::erase(es, Edge(u, v));
    return from_edges(order(), es);
  }

  // perm[v] is the new id of v.
  AbstractGraph relabeled(std::span<const int> perm) const {
    std::vector<Edge> es;
    for (const Edge& e : edges()) es.emplace_back(perm[e.u], perm[e.v]);
    return from_edges(order(), es);
  }

  // Induced subgraph on `keep` (sorted ascending); new ids follow that order.
  AbstractGraph induced(std::span<const int> keep) const {
    std::vector<int> id(adj_.size(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) id[keep[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (const Edge& e : edges())
      if (id[e.u] >= 0 && id[e.v] >= 0) es.emplace_back(id[e.u], id[e.v]);
    return from_edges(static_cast<int>(keep.size()), es);
  }

  friend bool operator==(const AbstractGraph& a, const AbstractGraph& b) { return a.adj_ == b.adj_; }

 private:
  static int check_order(int n) {
    if (n < 0) throw InputError("negative vertex count");
    return n;
  }

  void normalize(bool dedupe) {
    m_ = 0;
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      auto& a = adj_[v];
      std::sort(a.begin(), a.end());
      auto dup = std::adjacent_find(a.begin(), a.end());
      if (dup != a.end()) {
        if (!dedupe)
          throw InputError("vertex " + std::to_string(v) + " lists neighbor " +
                           std::to_string(*dup) + " twice");
        a.erase(std::unique(a.begin(), a.end()), a.end());
      }
      m_ += a.size();
    }
    m_ /= 2;
  }

  std::vector<std::vector<int>> adj_;
  std::size_t m_ = 0;
};

struct DegreeProfile {
  std::map<int, int> counts;
  std::optional<int> min_degree;
  std::optional<int> max_degree;
};

inline DegreeProfile degree_profile(const AbstractGraph& g) {
  DegreeProfile p;
  for (int v = 0; v < g.order(); ++v) ++p.counts[g.degree(v)];
  if (!p.counts.empty()) {
    p.min_degree = p.counts.begin()->first;
    p.max_degree = p.counts.rbegin()->first;
  }
  return p;
}

struct GraphStats {
  std::size_t edge_count = 0;
  bool is_connected = false;
  bool vertex_connectivity_at_least_2 = false;
  int component_count = 0;
  std::vector<int> cut_vertices;
  std::vector<int> block_sizes;  // sorted ascending; an isolated vertex is a block of order 1
  std::vector<std::vector<int>> blocks;
};

inline std::vector<int> component_ids(const AbstractGraph& g, int* count = nullptr) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  int c = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(v))
        if (comp[u] < 0) {
          comp[u] = c;
          stack.push_back(u);
        }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

inline bool is_connected(const AbstractGraph& g) {
  int c = 0;
  component_ids(g, &c);
  return c <= 1;
}

// Cut vertices and blocks via iterative Hopcroft-Tarjan with an edge stack.
inline GraphStats graph_stats(const AbstractGraph& g) {
  const int n = g.order();
  GraphStats s;
  s.edge_count = g.edge_count();
  component_ids(g, &s.component_count);
  s.is_connected = s.component_count <= 1;

  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<char> is_cut(n, 0);
  std::vector<std::pair<int, int>> estack;
  int timer = 0;

  auto pop_block = [&](int u, int v) {
    std::vector<int> verts;
    while (true) {
      auto [a, b] = estack.back();
      estack.pop_back();
      verts.push_back(a);
      verts.push_back(b);
      if (a == u && b == v) break;
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    s.blocks.push_back(std::move(verts));
  };

  struct Frame {
    int v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    if (g.degree(root) == 0) {
      disc[root] = timer++;
      s.blocks.push_back({root});
      continue;
    }
    int root_children = 0;
    disc[root] = low[root] = timer++;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const int v = f.v;
      if (f.next < g.neighbors(v).size()) {
        const int u = g.neighbors(v)[f.next++];
        if (disc[u] < 0) {
          parent[u] = v;
          estack.emplace_back(v, u);
          disc[u] = low[u] = timer++;
          if (v == root) ++root_children;
          stack.push_back({u, 0});
        } else if (u != parent[v] && disc[u] < disc[v]) {
          estack.emplace_back(v, u);
          low[v] = std::min(low[v], disc[u]);
        }
      } else {
        stack.pop_back();
        if (stack.empty()) break;
        const int p = stack.back().v;
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= disc[p]) {
          if (p != root) is_cut[p] = 1;
          pop_block(p, v);
        }
      }
    }
    if (root_children >= 2) is_cut[root] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) s.cut_vertices.push_back(v);
  std::sort(s.blocks.begin(), s.blocks.end());
  for (const auto& b : s.blocks) s.block_sizes.push_back(static_cast<int>(b.size()));
  std::sort(s.block_sizes.begin(), s.block_sizes.end());
  s.vertex_connectivity_at_least_2 = s.is_connected && n >= 3 && s.cut_vertices.empty();
  return s;
}

}  // namespace planext
