#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bitgraph.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace planext {

class ForbiddenPattern {
 public:
  enum class Kind { cycle, clique, custom };

  static ForbiddenPattern cycle(int k) {
    if (k < 3) throw InputError("cycle length must be at least 3");
    return ForbiddenPattern(Kind::cycle, k, {});
  }
  static ForbiddenPattern clique(int r) {
    if (r < 3) throw InputError("clique order must be at least 3");
    return ForbiddenPattern(Kind::clique, r, {});
  }
  static ForbiddenPattern custom(AbstractGraph h) {
    if (h.order() < 1 || h.order() > kMaxCustomOrder)
      throw InputError("custom pattern must have 1.." + std::to_string(kMaxCustomOrder) + " vertices");
    if (!is_connected(h)) throw InputError("custom pattern must be connected");
    const int n = h.order();
    return ForbiddenPattern(Kind::custom, n, std::move(h));
  }

  // "c<k>", "k<r>". Custom patterns are built by the caller from a graph file.
  static ForbiddenPattern parse(const std::string& s) {
    if (s.size() >= 2 && (s[0] == 'c' || s[0] == 'k' || s[0] == 'C' || s[0] == 'K') &&
        std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; }) && s.size() <= 4) {
      const int v = std::stoi(s.substr(1));
      return (s[0] == 'c' || s[0] == 'C') ? cycle(v) : clique(v);
    }
    throw InputError("unknown pattern '" + s + "' (expected c<k>, k<r> or custom:<file>)");
  }

  Kind kind() const noexcept { return kind_; }
  int size() const noexcept { return size_; }  // vertex count of the pattern

  std::string name() const {
    switch (kind_) {
      case Kind::cycle: return "c" + std::to_string(size_);
      case Kind::clique: return "k" + std::to_string(size_);
      default: return "custom";
    }
  }

  AbstractGraph graph() const {
    if (kind_ == Kind::custom) return custom_;
    std::vector<Edge> es;
    for (int i = 0; i < size_; ++i)
      if (kind_ == Kind::cycle)
        es.emplace_back(i, (i + 1) % size_);
      else
        for (int j = i + 1; j < size_; ++j) es.emplace_back(i, j);
    return AbstractGraph::from_edges(size_, es);
  }

  static constexpr int kMaxCustomOrder = 12;

 private:
  ForbiddenPattern(Kind k, int s, AbstractGraph h) : kind_(k), size_(s), custom_(std::move(h)) {}

  Kind kind_;
  int size_;
  AbstractGraph custom_;
};

// Witness: the cycle in order, the clique, or witness[i] = host image of pattern vertex i.
struct PatternMatch {
  bool found = false;
  std::vector<int> witness;
  explicit operator bool() const noexcept { return found; }
};

namespace detail {

class Bits {
 public:
  explicit Bits(int n) : w_(std::vector<std::uint64_t>(static_cast<std::size_t>((n + 63) / 64), 0)) {}
  void set(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }

 private:
  std::vector<std::uint64_t> w_;
};

// Simple path from path.back() reaching `target` after exactly `remaining` more edges,
// through vertices above `floor` that are not yet used.
inline bool extend_path(const BitGraph& g, std::vector<int>& path, Bits& used, int target, int remaining, int floor) {
  const int v = path.back();
  if (remaining == 1) {
    if (g.adjacent(v, target)) {
      path.push_back(target);
      return true;
    }
    return false;
  }
  const std::uint64_t* r = g.row(v);
  for (int k = 0; k < g.words(); ++k) {
    std::uint64_t bits = r[k];
    while (bits) {
      const int u = k * 64 + std::countr_zero(bits);
      bits &= bits - 1;
      if (u <= floor || used.test(u) || u == target) continue;
      used.set(u);
      path.push_back(u);
      if (extend_path(g, path, used, target, remaining - 1, floor)) return true;
      path.pop_back();
      used.reset(u);
    }
  }
  return false;
}

inline bool find_clique(const BitGraph& g, std::vector<std::uint64_t> cand, int need, std::vector<int>& out) {
  if (need == 0) return true;
  for (int k = 0; k < g.words(); ++k) {
    while (cand[k]) {
      const int u = k * 64 + std::countr_zero(cand[k]);
      cand[k] &= cand[k] - 1;
      std::vector<std::uint64_t> next(cand.size());
      int count = 0;
      for (int j = 0; j < g.words(); ++j) {
        next[j] = cand[j] & g.row(u)[j];
        count += std::popcount(next[j]);
      }
      if (count < need - 1) continue;
      out.push_back(u);
      if (find_clique(g, std::move(next), need - 1, out)) return true;
      out.pop_back();
    }
  }
  return false;
}

// Backtracking subgraph monomorphism; `map` may arrive with some pattern vertices preassigned.
class Matcher {
 public:
  Matcher(const BitGraph& host, const AbstractGraph& pat) : g_(host), h_(pat), used_(host.order()) {}

  bool run(std::vector<int>& map) {
    const int k = h_.order();
    order_.clear();
    std::vector<char> placed(k, 0);
    for (int i = 0; i < k; ++i)
      if (map[i] >= 0) {
        placed[i] = 1;
        used_.set(map[i]);
      }
    // BFS from the preassigned vertices, else from a maximum-degree vertex.
    std::vector<int> frontier;
    for (int i = 0; i < k; ++i)
      if (placed[i]) frontier.push_back(i);
    while (true) {
      if (frontier.empty()) {
        int best = -1;
        for (int i = 0; i < k; ++i)
          if (!placed[i] && (best < 0 || h_.degree(i) > h_.degree(best))) best = i;
        if (best < 0) break;
        placed[best] = 1;
        order_.push_back(best);
        frontier.push_back(best);
      }
      std::vector<int> next;
      for (int a : frontier)
        for (int b : h_.neighbors(a))
          if (!placed[b]) {
            placed[b] = 1;
            order_.push_back(b);
            next.push_back(b);
          }
      frontier = std::move(next);
    }
    return place(map, 0);
  }

 private:
  bool place(std::vector<int>& map, std::size_t i) {
    if (i == order_.size()) return true;
    const int a = order_[i];
    for (int x = 0; x < g_.order(); ++x) {
      if (used_.test(x) || g_.degree(x) < h_.degree(a)) continue;
      bool ok = true;
      for (int b : h_.neighbors(a))
        if (map[b] >= 0 && !g_.adjacent(x, map[b])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      map[a] = x;
      used_.set(x);
      if (place(map, i + 1)) return true;
      used_.reset(x);
      map[a] = -1;
    }
    return false;
  }

  const BitGraph& g_;
  const AbstractGraph& h_;
  Bits used_;
  std::vector<int> order_;
};

}  // namespace detail

inline PatternMatch contains_pattern(const BitGraph& g, const ForbiddenPattern& p) {
  PatternMatch m;
  const int n = g.order();
  if (p.size() > n) return m;
  switch (p.kind()) {
    case ForbiddenPattern::Kind::cycle: {
      const int k = p.size();
      detail::Bits used(n);
      for (int s = 0; s < n; ++s) {
        std::vector<int> path{s};
        used.set(s);
        // The closing vertex is some neighbor of s above s; the rest of the path also stays above s.
        const std::uint64_t* r = g.row(s);
        for (int w = 0; w < g.words() && !m.found; ++w) {
          std::uint64_t bits = r[w];
          while (bits && !m.found) {
            const int t = w * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            if (t <= s) continue;
            if (detail::extend_path(g, path, used, t, k - 1, s)) {
              m.found = true;
              m.witness = path;
            }
          }
        }
        used.reset(s);
        if (m.found) return m;
      }
      return m;
    }
    case ForbiddenPattern::Kind::clique: {
      std::vector<std::uint64_t> all(static_cast<std::size_t>(g.words()), 0);
      for (int v = 0; v < n; ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
      if (detail::find_clique(g, all, p.size(), m.witness)) m.found = true;
      else m.witness.clear();
      return m;
    }
    case ForbiddenPattern::Kind::custom: {
      const AbstractGraph h = p.graph();
      std::vector<int> map(h.order(), -1);
      detail::Matcher mt(g, h);
      if (mt.run(map)) {
        m.found = true;
        m.witness = map;
      }
      return m;
    }
  }
  return m;
}

inline PatternMatch contains_pattern(const AbstractGraph& g, const ForbiddenPattern& p) {
  return contains_pattern(BitGraph(g), p);
}

// Copy of the pattern in g that uses the edge uv (g must contain uv).
inline bool contains_pattern_through(const BitGraph& g, int u, int v, const ForbiddenPattern& p) {
  const int n = g.order();
  if (p.size() > n) return false;
  switch (p.kind()) {
    case ForbiddenPattern::Kind::cycle: {
      detail::Bits used(n);
      used.set(u);
      std::vector<int> path{u};
      return detail::extend_path(g, path, used, v, p.size() - 1, -1);
    }
    case ForbiddenPattern::Kind::clique: {
      std::vector<std::uint64_t> cand(static_cast<std::size_t>(g.words()));
      for (int k = 0; k < g.words(); ++k) cand[k] = g.row(u)[k] & g.row(v)[k];
      std::vector<int> out;
      return detail::find_clique(g, std::move(cand), p.size() - 2, out);
    }
    case ForbiddenPattern::Kind::custom: {
      const AbstractGraph h = p.graph();
      for (const Edge& e : h.edges())
        for (int flip = 0; flip < 2; ++flip) {
          std::vector<int> map(h.order(), -1);
          map[e.u] = flip ? v : u;
          map[e.v] = flip ? u : v;
          detail::Matcher mt(g, h);
          if (mt.run(map)) return true;
        }
      return false;
    }
  }
  return false;
}

}  // namespace planext
