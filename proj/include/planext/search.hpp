#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "bitgraph.hpp"
#include "bounds.hpp"
#include "canonical.hpp"
#include "embedding.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "patterns.hpp"
#include "planarity.hpp"
#include "rational.hpp"

namespace planext {

class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchConfig {
  int n = 1;
  ForbiddenPattern pattern = ForbiddenPattern::cycle(3);
  bool connected_only = true;
  // Count only 2-connected graphs of minimum degree >= 3 (off by default; reported in the result).
  bool restrict_2conn_mindeg3 = false;
  std::optional<double> max_seconds;
  int workers = 1;
  std::size_t witness_cap = 100;
  // Called, serialized, for every enumerated graph that passes the result filters.
  std::function<void(const BitGraph&)> visit;
  std::function<void(const std::string&)> progress;
};

struct SearchResult {
  int n = 0;
  std::string pattern;
  bool connected_only = true;
  bool restricted = false;
  std::optional<int> max_edges;  // empty when no graph passes the filters
  std::uint64_t witness_count = 0;
  std::vector<std::string> witnesses;  // canonical graph6, sorted
  std::size_t witness_cap = 0;
  bool witnesses_truncated = false;
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0;
  bool complete = true;
};

namespace detail {

struct SearchNode {
  BitGraph g;
  std::string cert;
};

struct SearchTally {
  std::optional<int> best;
  std::uint64_t count = 0;
  std::set<std::string> witnesses;
  std::uint64_t nodes = 0;

  void merge(const SearchTally& o, std::size_t cap) {
    nodes += o.nodes;
    if (!o.best) return;
    if (!best || *o.best > *best) {
      best = o.best;
      count = 0;
      witnesses.clear();
    }
    if (*o.best < *best) return;
    count += o.count;
    witnesses.insert(o.witnesses.begin(), o.witnesses.end());
    while (witnesses.size() > cap) witnesses.erase(std::prev(witnesses.end()));
  }
};

// Edge-by-edge canonical augmentation from the empty graph on n vertices. A child G+e is kept
// iff deleting its canonical edge (the edge whose canonical end labels are largest) gives a graph
// isomorphic to G; siblings are deduplicated by certificate. Every isomorphism class of planar
// pattern-free graphs on n vertices with at most `ceiling` edges is then visited exactly once.
class Augmenter {
 public:
  Augmenter(const SearchConfig& cfg, long long ceiling) : cfg_(cfg), ceiling_(ceiling) {}

  std::vector<SearchNode> children(const SearchNode& parent) const {
    std::vector<SearchNode> out;
    const BitGraph& g = parent.g;
    if (static_cast<long long>(g.edge_count()) >= ceiling_) return out;
    const int n = g.order();
    std::unordered_set<std::string> seen;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v)) continue;
        BitGraph c = g;
        c.add_edge(u, v);
        if (contains_pattern_through(c, u, v, cfg_.pattern)) continue;
        if (!planar_quick(c)) continue;
        CanonicalForm cf = canonical_form(c);
        if (!seen.insert(cf.certificate).second) continue;
        if (!accepts(c, cf, u, v, parent.cert)) continue;
        out.push_back({std::move(c), std::move(cf.certificate)});
      }
    return out;
  }

 private:
  static bool accepts(const BitGraph& c, const CanonicalForm& cf, int u, int v, const std::string& parent_cert) {
    const int n = c.order();
    std::pair<int, int> top{-1, -1};
    int tu = -1, tv = -1;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (!c.adjacent(a, b)) continue;
        const std::pair<int, int> key{std::max(cf.labeling[a], cf.labeling[b]), std::min(cf.labeling[a], cf.labeling[b])};
        if (key > top) {
          top = key;
          tu = a;
          tv = b;
        }
      }
    if (tu == u && tv == v) return true;
    BitGraph d = c;
    d.remove_edge(tu, tv);
    return canonical_form(d).certificate == parent_cert;
  }

  const SearchConfig& cfg_;
  long long ceiling_;
};

inline bool passes_filters(const SearchConfig& cfg, const BitGraph& g) {
  if (!cfg.connected_only && !cfg.restrict_2conn_mindeg3) return true;
  const AbstractGraph a = g.to_graph();
  if (cfg.restrict_2conn_mindeg3) {
    for (int v = 0; v < a.order(); ++v)
      if (a.degree(v) < 3) return false;
    return graph_stats(a).vertex_connectivity_at_least_2;
  }
  return is_connected(a);
}

}  // namespace detail

inline SearchResult extremal_search(const SearchConfig& cfg) {
  if (cfg.n < 1) throw InputError("search needs n >= 1");
  if (cfg.n > 64) throw InputError("search supports n <= 64");
  if (cfg.workers < 1) throw InputError("search needs workers >= 1");
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  const std::string key = cfg.pattern.kind() == ForbiddenPattern::Kind::custom ? "" : cfg.pattern.name();
  const long long ceiling = edge_ceiling(key, cfg.n).value_or(3LL * cfg.n);
  const detail::Augmenter aug(cfg, ceiling);

  std::mutex visit_mu;
  std::atomic<bool> stop{false};
  auto out_of_time = [&] {
    return cfg.max_seconds && std::chrono::duration<double>(Clock::now() - t0).count() > *cfg.max_seconds;
  };
  auto record = [&](const detail::SearchNode& node, detail::SearchTally& t) {
    ++t.nodes;
    if (!detail::passes_filters(cfg, node.g)) return;
    if (cfg.visit) {
      std::lock_guard lk(visit_mu);
      cfg.visit(node.g);
    }
    const int m = static_cast<int>(node.g.edge_count());
    if (t.best && m < *t.best) return;
    if (!t.best || m > *t.best) {
      t.best = m;
      t.count = 0;
      t.witnesses.clear();
    }
    ++t.count;
    t.witnesses.insert(node.cert);
    if (t.witnesses.size() > cfg.witness_cap) t.witnesses.erase(std::prev(t.witnesses.end()));
  };

  // Breadth-first down to a fixed-size frontier; the split does not depend on the worker count.
  constexpr std::size_t kFrontier = 256;
  detail::SearchTally head;
  std::vector<detail::SearchNode> frontier;
  {
    BitGraph root(cfg.n);
    frontier.push_back({root, canonical_form(root).certificate});
  }
  while (!frontier.empty() && frontier.size() < kFrontier) {
    std::vector<detail::SearchNode> next;
    for (const auto& node : frontier) {
      record(node, head);
      for (auto& c : aug.children(node)) next.push_back(std::move(c));
    }
    frontier = std::move(next);
    if (out_of_time()) {
      stop = true;
      break;
    }
  }
  if (cfg.progress && !frontier.empty()) cfg.progress("frontier " + std::to_string(frontier.size()) + " subtrees");

  std::vector<detail::SearchTally> slot(frontier.size());
  std::atomic<std::size_t> next_item{0}, done{0};
  std::mutex progress_mu;
  auto worker = [&] {
    std::uint64_t tick = 0;
    while (!stop) {
      const std::size_t i = next_item++;
      if (i >= frontier.size()) break;
      detail::SearchTally& t = slot[i];
      std::vector<detail::SearchNode> todo;
      todo.push_back(frontier[i]);
      while (!todo.empty() && !stop) {
        detail::SearchNode node = std::move(todo.back());
        todo.pop_back();
        record(node, t);
        for (auto& c : aug.children(node)) todo.push_back(std::move(c));
        if ((++tick & 1023) == 0 && out_of_time()) stop = true;
      }
      const std::size_t d = ++done;
      if (cfg.progress && (d * 10 / frontier.size()) != ((d - 1) * 10 / frontier.size())) {
        std::lock_guard lk(progress_mu);
        cfg.progress("subtrees done " + std::to_string(d) + "/" + std::to_string(frontier.size()));
      }
    }
  };
  if (!stop) {
    const int w = std::min<int>(cfg.workers, std::max<int>(1, static_cast<int>(frontier.size())));
    if (w == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int k = 0; k < w; ++k) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
  }

  detail::SearchTally total = head;
  for (const auto& t : slot) total.merge(t, cfg.witness_cap);

  SearchResult r;
  r.n = cfg.n;
  r.pattern = cfg.pattern.name();
  r.connected_only = cfg.connected_only;
  r.restricted = cfg.restrict_2conn_mindeg3;
  r.max_edges = total.best;
  r.witness_count = total.count;
  r.witnesses.assign(total.witnesses.begin(), total.witnesses.end());
  r.witness_cap = cfg.witness_cap;
  r.witnesses_truncated = r.witness_count > r.witnesses.size();
  r.nodes_explored = total.nodes;
  r.complete = !stop;
  r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

struct BoundCheck {
  int n = 0;
  int ex = 0;
  Rational bound;
  bool holds = false;   // ex <= bound
  bool strict = false;  // ex < bound
  bool tight = false;   // ex == floor(bound)
};

// Runs a complete search per n and compares against the closed form.
inline std::vector<BoundCheck> verify_bound(int n_lo, int n_hi, const ForbiddenPattern& pattern,
                                            const std::function<Rational(int)>& bound, SearchConfig base = {}) {
  std::vector<BoundCheck> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    SearchConfig cfg = base;
    cfg.n = n;
    cfg.pattern = pattern;
    const SearchResult r = extremal_search(cfg);
    if (!r.complete) throw BudgetExhausted("search budget exhausted at n = " + std::to_string(n));
    if (!r.max_edges) throw InputError("no admissible graph at n = " + std::to_string(n));
    BoundCheck c;
    c.n = n;
    c.ex = *r.max_edges;
    c.bound = bound(n);
    c.holds = Rational(c.ex) <= c.bound;
    c.strict = Rational(c.ex) < c.bound;
    c.tight = c.ex == c.bound.floor();
    out.push_back(c);
  }
  return out;
}

namespace detail {

// Every copy of the pattern in K_n as a mask over the edge slots (i<j in row-major order).
inline std::vector<std::uint32_t> pattern_masks(int n, const ForbiddenPattern& p) {
  std::vector<std::vector<int>> slot(n, std::vector<int>(n, -1));
  int s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slot[i][j] = slot[j][i] = s++;
  const AbstractGraph h = p.graph();
  const int k = h.order();
  std::set<std::uint32_t> masks;
  if (k > n) return {};
  // Injective maps of the pattern's vertices into {0..n-1}.
  std::vector<int> img(k, -1);
  std::vector<char> used(n, 0);
  std::function<void(int)> place = [&](int i) {
    if (i == k) {
      std::uint32_t m = 0;
      for (const Edge& e : h.edges()) m |= std::uint32_t{1} << slot[img[e.u]][img[e.v]];
      masks.insert(m);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      img[i] = v;
      place(i + 1);
      used[v] = 0;
    }
  };
  place(0);
  return {masks.begin(), masks.end()};
}

}  // namespace detail

// Exhaustive maximum over all labeled graphs on n <= 7 vertices. Planarity answers from the
// Boyer-Myrvold test are accepted only with a verified certificate (Euler-valid rotation or a
// Kuratowski subdivision).
inline int brute_force_oracle(int n, const ForbiddenPattern& p, bool connected_only = true) {
  if (n < 1 || n > 7) throw InputError("brute_force_oracle needs 1 <= n <= 7");
  const int slots = n * (n - 1) / 2;
  std::vector<Edge> slot_edge;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slot_edge.emplace_back(i, j);
  const auto forbidden = detail::pattern_masks(n, p);
  auto connected = [&](std::uint32_t mask) {
    std::uint32_t reach = 1, grew = 1;
    while (grew) {
      grew = 0;
      for (int s = 0; s < slots; ++s)
        if ((mask >> s) & 1u) {
          const std::uint32_t a = 1u << slot_edge[s].u, b = 1u << slot_edge[s].v;
          if (((reach & a) != 0) != ((reach & b) != 0)) {
            reach |= a | b;
            grew = 1;
          }
        }
    }
    return reach == (1u << n) - 1;
  };
  auto planar = [&](std::uint32_t mask) {
    std::vector<Edge> es;
    for (int s = 0; s < slots; ++s)
      if ((mask >> s) & 1u) es.push_back(slot_edge[s]);
    const AbstractGraph g = AbstractGraph::from_edges(n, es);
    const PlanarityResult r = is_planar(g);
    if (r.planar) {
      if (!euler_check(PlaneGraph::make(g, r.rotation, false)))
        throw std::logic_error("planarity test returned an invalid embedding");
      return true;
    }
    if (!is_kuratowski_subdivision(n, r.obstruction)) throw std::logic_error("planarity test returned an invalid obstruction");
    return false;
  };
  int best = -1;
  const std::uint32_t total = slots == 0 ? 1u : (std::uint32_t{1} << slots);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (std::popcount(mask) <= best) continue;
    if (std::any_of(forbidden.begin(), forbidden.end(), [&](std::uint32_t f) { return (mask & f) == f; })) continue;
    if (connected_only && !connected(mask)) continue;
    if (!planar(mask)) continue;
    best = std::popcount(mask);
  }
  return best;
}

}  // namespace planext
