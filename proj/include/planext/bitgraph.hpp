#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace planext {

// Dense adjacency bit matrix; the mutable working form used by search and canonical labeling.
class BitGraph {
 public:
  BitGraph() = default;
  explicit BitGraph(int n)
      : n_(n), w_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * static_cast<std::size_t>((n + 63) / 64)) {}

  explicit BitGraph(const AbstractGraph& g) : BitGraph(g.order()) {
    for (const Edge& e : g.edges()) add_edge(e.u, e.v);
  }

  int order() const noexcept { return n_; }
  int words() const noexcept { return w_; }
  const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * w_; }

  bool adjacent(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1u; }

  void add_edge(int u, int v) {
    bits_[idx(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[idx(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++m_;
  }

  void remove_edge(int u, int v) {
    bits_[idx(u) + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    bits_[idx(v) + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
    --m_;
  }

  int degree(int v) const {
    int d = 0;
    for (int k = 0; k < w_; ++k) d += std::popcount(row(v)[k]);
    return d;
  }

  std::size_t edge_count() const noexcept { return m_; }

  AbstractGraph to_graph() const {
    std::vector<Edge> es;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) es.emplace_back(u, v);
    return AbstractGraph::from_edges(n_, es);
  }

  friend bool operator==(const BitGraph&, const BitGraph&) = default;

 private:
  std::size_t idx(int v) const { return static_cast<std::size_t>(v) * w_; }

  int n_ = 0;
  int w_ = 0;
  std::vector<std::uint64_t> bits_;
  std::size_t m_ = 0;
};

}  // namespace planext
