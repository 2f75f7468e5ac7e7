#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "bitgraph.hpp"
#include "graph.hpp"
#include "graph6.hpp"

namespace planext {

struct CanonicalForm {
  std::vector<int> labeling;  // labeling[v] = canonical position of vertex v
  std::string certificate;    // graph6 of the canonically relabeled graph
};

namespace detail {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 29);
}

// Individualization-refinement search for the lexicographically largest
// (refinement trace, permuted adjacency) leaf, pruned with discovered automorphisms.
class Canonizer {
 public:
  explicit Canonizer(const BitGraph& g) : g_(g), n_(g.order()), w_(g.words()) {}

  CanonicalForm run() {
    CanonicalForm out;
    if (n_ == 0) {
      out.certificate = write_graph6(AbstractGraph(0));
      return out;
    }
    find_twins();
    Partition p;
    p.lab.resize(n_);
    std::iota(p.lab.begin(), p.lab.end(), 0);
    p.start.assign(n_, 0);
    std::vector<int> queue{0};
    std::vector<std::uint64_t> path{refine(p, queue)};
    search(p, path);

    out.labeling.assign(n_, 0);
    for (int i = 0; i < n_; ++i) out.labeling[best_lab_[i]] = i;
    BitGraph c(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (g_.adjacent(best_lab_[i], best_lab_[j])) c.add_edge(i, j);
    out.certificate = write_graph6(c.to_graph());
    return out;
  }

 private:
  struct Partition {
    std::vector<int> lab;    // vertex at each position
    std::vector<int> start;  // start position of the cell containing each position
  };

  int cell_end(const Partition& p, int s) const {
    int e = s + 1;
    while (e < n_ && p.start[e] == s) ++e;
    return e;
  }

  std::uint64_t refine(Partition& p, std::vector<int>& queue) {
    std::uint64_t trace = 0x51ed27ULL;
    std::vector<char> queued(n_, 0);
    for (int s : queue) queued[s] = 1;
    std::vector<std::uint64_t> wb(w_);
    std::vector<int> cnt(n_);
    std::vector<int> order;
    std::size_t qi = 0;
    while (qi < queue.size()) {
      const int ws = queue[qi++];
      queued[ws] = 0;
      const int we = cell_end(p, ws);
      std::fill(wb.begin(), wb.end(), 0);
      for (int q = ws; q < we; ++q) wb[p.lab[q] >> 6] |= std::uint64_t{1} << (p.lab[q] & 63);
      for (int xs = 0; xs < n_;) {
        const int xe = cell_end(p, xs);
        if (xe - xs > 1) {
          bool split = false;
          for (int q = xs; q < xe; ++q) {
            const std::uint64_t* r = g_.row(p.lab[q]);
            int c = 0;
            for (int k = 0; k < w_; ++k) c += std::popcount(r[k] & wb[k]);
            cnt[p.lab[q]] = c;
            if (c != cnt[p.lab[xs]]) split = true;
          }
          if (split) {
            order.assign(p.lab.begin() + xs, p.lab.begin() + xe);
            std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return cnt[a] < cnt[b]; });
            std::copy(order.begin(), order.end(), p.lab.begin() + xs);
            const bool was_queued = queued[xs];
            int largest = -1, largest_size = 0;
            std::vector<int> frags;
            for (int q = xs; q < xe;) {
              int r = q;
              while (r < xe && cnt[p.lab[r]] == cnt[p.lab[q]]) ++r;
              for (int t = q; t < r; ++t) p.start[t] = q;
              trace = mix(trace, (static_cast<std::uint64_t>(ws) << 40) ^ (static_cast<std::uint64_t>(q) << 20) ^
                                     (static_cast<std::uint64_t>(cnt[p.lab[q]]) << 8) ^ static_cast<std::uint64_t>(r - q));
              frags.push_back(q);
              if (r - q > largest_size) {
                largest_size = r - q;
                largest = q;
              }
              q = r;
            }
            for (int f : frags) {
              if (queued[f]) continue;
              if (!was_queued && f == largest) continue;
              queued[f] = 1;
              queue.push_back(f);
            }
          }
        }
        xs = xe;
      }
    }
    int cells = 0;
    for (int q = 0; q < n_; ++q) cells += p.start[q] == q;
    return mix(trace, static_cast<std::uint64_t>(cells));
  }

  // Open twins share N(v); closed twins share N[v]. Swapping twins is an automorphism.
  void find_twins() {
    twin_.assign(n_, -1);
    for (int u = 0; u < n_; ++u) {
      if (twin_[u] >= 0) continue;
      twin_[u] = u;
      for (int v = u + 1; v < n_; ++v) {
        if (twin_[v] >= 0) continue;
        bool open = true, closed = true;
        for (int k = 0; k < w_; ++k) {
          std::uint64_t ru = g_.row(u)[k], rv = g_.row(v)[k];
          if (ru != rv) open = false;
          if (k == (u >> 6)) ru |= std::uint64_t{1} << (u & 63);
          if (k == (v >> 6)) ru |= std::uint64_t{1} << (v & 63);
          if (k == (u >> 6)) rv |= std::uint64_t{1} << (u & 63);
          if (k == (v >> 6)) rv |= std::uint64_t{1} << (v & 63);
          if (ru != rv) closed = false;
        }
        if (open || (closed && g_.adjacent(u, v))) twin_[v] = u;
      }
    }
  }

  static int find(std::vector<int>& uf, int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  }

  // Orbits of the known automorphisms fixing every individualized vertex.
  std::vector<int> orbits(const std::vector<char>& fixed) const {
    std::vector<int> uf(n_);
    std::iota(uf.begin(), uf.end(), 0);
    for (const auto& gamma : gens_) {
      bool ok = true;
      for (int v = 0; v < n_ && ok; ++v)
        if (fixed[v] && gamma[v] != v) ok = false;
      if (!ok) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(uf, v), b = find(uf, gamma[v]);
        if (a != b) uf[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<int> rep(n_, -1);
    for (int v = 0; v < n_; ++v) {
      if (fixed[v]) continue;
      int t = twin_[v];
      if (rep[t] < 0) rep[t] = v;
      int a = find(uf, v), b = find(uf, rep[t]);
      if (a != b) uf[std::max(a, b)] = std::min(a, b);
    }
    for (int v = 0; v < n_; ++v) uf[v] = find(uf, v);
    return uf;
  }

  // -1, 0, 1 comparing the current trace path with the best leaf's path prefix.
  int compare_path(const std::vector<std::uint64_t>& path) const {
    if (best_lab_.empty()) return 1;
    const std::size_t m = std::min(path.size(), best_trace_.size());
    for (std::size_t i = 0; i < m; ++i)
      if (path[i] != best_trace_[i]) return path[i] < best_trace_[i] ? -1 : 1;
    return path.size() > best_trace_.size() ? 1 : 0;
  }

  std::vector<std::uint64_t> leaf_matrix(const std::vector<int>& lab) const {
    std::vector<std::uint64_t> m(static_cast<std::size_t>(n_) * w_, 0);
    for (int i = 0; i < n_; ++i) {
      const std::uint64_t* r = g_.row(lab[i]);
      for (int j = 0; j < n_; ++j)
        if ((r[lab[j] >> 6] >> (lab[j] & 63)) & 1u) m[static_cast<std::size_t>(i) * w_ + (j >> 6)] |= std::uint64_t{1} << (63 - (j & 63));
    }
    return m;
  }

  void search(const Partition& p, std::vector<std::uint64_t>& path) {
    int target = -1;
    for (int q = 0; q < n_; ++q)
      if (p.start[q] == q && cell_end(p, q) - q > 1) {
        target = q;
        break;
      }
    if (target < 0) {
      leaf(p, path);
      return;
    }
    const int te = cell_end(p, target);
    std::vector<int> cell(p.lab.begin() + target, p.lab.begin() + te);
    std::sort(cell.begin(), cell.end());
    std::vector<char> fixed(n_, 0);
    for (int q = 0; q < n_; ++q)
      if (p.start[q] == q && (q + 1 == n_ || p.start[q + 1] != q)) fixed[p.lab[q]] = 1;

    std::vector<int> explored;
    std::size_t gens_seen = static_cast<std::size_t>(-1);
    std::vector<int> orb;
    for (int v : cell) {
      if (!explored.empty()) {
        if (gens_seen != gens_.size()) {
          orb = orbits(fixed);
          gens_seen = gens_.size();
        }
        bool dup = false;
        for (int w : explored)
          if (orb[v] == orb[w]) {
            dup = true;
            break;
          }
        if (dup) continue;
      } else if (gens_seen != gens_.size()) {
        orb = orbits(fixed);
        gens_seen = gens_.size();
      }
      explored.push_back(v);

      Partition c = p;
      const int q = static_cast<int>(std::find(c.lab.begin() + target, c.lab.begin() + te, v) - c.lab.begin());
      std::swap(c.lab[target], c.lab[q]);
      for (int t = target + 1; t < te; ++t) c.start[t] = target + 1;
      std::vector<int> queue{target};
      const std::uint64_t t = mix(refine(c, queue), static_cast<std::uint64_t>(te - target));
      path.push_back(t);
      if (compare_path(path) >= 0) search(c, path);
      path.pop_back();
    }
  }

  void leaf(const Partition& p, const std::vector<std::uint64_t>& path) {
    const int cmp = compare_path(path);
    if (cmp < 0) return;
    auto mat = leaf_matrix(p.lab);
    if (cmp == 0) {
      if (path.size() < best_trace_.size() || mat < best_mat_) return;
      if (mat == best_mat_) {
        if (gens_.size() < kMaxGenerators) {
          std::vector<int> gamma(n_);
          for (int i = 0; i < n_; ++i) gamma[best_lab_[i]] = p.lab[i];
          gens_.push_back(std::move(gamma));
        }
        return;
      }
    }
    best_lab_ = p.lab;
    best_trace_ = path;
    best_mat_ = std::move(mat);
  }

  static constexpr std::size_t kMaxGenerators = 128;

  const BitGraph& g_;
  int n_;
  int w_;
  std::vector<int> twin_;
  std::vector<std::vector<int>> gens_;
  std::vector<int> best_lab_;
  std::vector<std::uint64_t> best_trace_;
  std::vector<std::uint64_t> best_mat_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const BitGraph& g) { return detail::Canonizer(g).run(); }

inline CanonicalForm canonical_form(const AbstractGraph& g) { return canonical_form(BitGraph(g)); }

inline bool isomorphic(const AbstractGraph& a, const AbstractGraph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() &&
         canonical_form(a).certificate == canonical_form(b).certificate;
}

}  // namespace planext
