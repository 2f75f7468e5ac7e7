#pragma once

#include <algorithm>
#include <iterator>
#include <map>
#include <span>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "bitgraph.hpp"
#include "graph.hpp"

namespace planext {

using Rotation = std::vector<std::vector<int>>;

struct PlanarityResult {
  bool planar = false;
  Rotation rotation;            // when planar: cyclic neighbor order per vertex
  std::vector<Edge> obstruction;  // when not planar: a K5 or K3,3 subdivision
};

namespace detail {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

inline BoostGraph to_boost(const AbstractGraph& g) {
  BoostGraph b(static_cast<std::size_t>(g.order()));
  int idx = 0;
  for (const Edge& e : g.edges()) {
    auto [ed, ok] = boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), b);
    (void)ok;
    boost::put(boost::edge_index, b, ed, idx++);
  }
  return b;
}

}  // namespace detail

// True iff `edges` (over vertex ids < n) form a subdivision of K5 or K3,3.
inline bool is_kuratowski_subdivision(int n, std::span<const Edge> edges) {
  if (edges.empty()) return false;
  const AbstractGraph h = AbstractGraph::from_edges(n, edges);
  if (h.edge_count() != edges.size()) return false;
  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    const int d = h.degree(v);
    if (d == 1 || d > 4) return false;
    if (d >= 3) branch.push_back(v);
  }
  const bool k5 = branch.size() == 5;
  const bool k33 = branch.size() == 6;
  if (!k5 && !k33) return false;
  for (int v : branch)
    if (h.degree(v) != (k5 ? 4 : 3)) return false;

  std::map<int, int> slot;
  for (std::size_t i = 0; i < branch.size(); ++i) slot[branch[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> link(branch.size(), std::vector<int>(branch.size(), 0));
  std::size_t covered = 0;
  for (int b : branch)
    for (int first : h.neighbors(b)) {
      int prev = b, cur = first;
      std::size_t len = 1;
      while (!slot.count(cur)) {
        const auto& nb = h.neighbors(cur);
        const int next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        ++len;
        if (len > edges.size()) return false;
      }
      if (cur == b) return false;
      ++link[slot[b]][slot[cur]];
      covered += len;
    }
  if (covered != 2 * edges.size()) return false;  // every edge lies on exactly one branch path
  const int k = static_cast<int>(branch.size());
  if (k5) {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (i != j && link[i][j] != 1) return false;
    return true;
  }
  std::vector<int> side(k, 1);
  side[0] = 0;
  for (int j = 0; j < k; ++j)
    if (link[0][j]) side[j] = 1;
  for (int j = 1; j < k; ++j)
    if (!link[0][j]) side[j] = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && link[i][j] != (side[i] != side[j] ? 1 : 0)) return false;
  return true;
}

namespace detail {

// The reported subgraph is not always edge-minimal; drop edges while it stays non-planar.
// An edge-minimal non-planar graph is a Kuratowski subdivision.
inline std::vector<Edge> shrink_obstruction(int n, std::vector<Edge> edges) {
  for (std::size_t i = 0; i < edges.size();) {
    std::vector<Edge> rest = edges;
    rest.erase(rest.begin() + static_cast<long>(i));
    if (!boost::boyer_myrvold_planarity_test(to_boost(AbstractGraph::from_edges(n, rest))))
      edges = std::move(rest);
    else
      ++i;
  }
  return edges;
}

}  // namespace detail

inline PlanarityResult is_planar(const AbstractGraph& g) {
  using namespace boost;
  PlanarityResult r;
  auto b = detail::to_boost(g);
  using EdgeDesc = graph_traits<detail::BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> emb(num_vertices(b));
  std::vector<EdgeDesc> kuratowski;
  r.planar = boyer_myrvold_planarity_test(
      boyer_myrvold_params::graph = b,
      boyer_myrvold_params::embedding = make_iterator_property_map(emb.begin(), get(vertex_index, b)),
      boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
  if (r.planar) {
    r.rotation.resize(emb.size());
    for (std::size_t v = 0; v < emb.size(); ++v)
      for (const EdgeDesc& e : emb[v]) {
        const auto s = source(e, b), t = target(e, b);
        r.rotation[v].push_back(static_cast<int>(s == v ? t : s));
      }
  } else {
    for (const EdgeDesc& e : kuratowski)
      r.obstruction.emplace_back(static_cast<int>(source(e, b)), static_cast<int>(target(e, b)));
    std::sort(r.obstruction.begin(), r.obstruction.end());
    r.obstruction.erase(std::unique(r.obstruction.begin(), r.obstruction.end()), r.obstruction.end());
    if (!is_kuratowski_subdivision(g.order(), r.obstruction)) r.obstruction = detail::shrink_obstruction(g.order(), r.obstruction);
  }
  return r;
}

// Yes/no test without extracting certificates; cheap counting filters first.
inline bool planar_quick(const BitGraph& g) {
  const int n = g.order();
  const auto m = static_cast<long long>(g.edge_count());
  if (n <= 4 || m <= 8) return true;
  if (m > 3LL * n - 6) return false;
  detail::BoostGraph b(static_cast<std::size_t>(n));
  int idx = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v)) {
        auto [ed, ok] = boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), b);
        (void)ok;
        boost::put(boost::edge_index, b, ed, idx++);
      }
  return boost::boyer_myrvold_planarity_test(b);
}

}  // namespace planext
