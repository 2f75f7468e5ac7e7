#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "detail/drawn_tables.hpp"
#include "embedding.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "planarity.hpp"

namespace planext {

// Triangulation with its distinguished matching E*. By convention E* = {(0,1), (2,3), (4,5)}.
// After growth the matching edges are subdivided; split_matching then records (v1, midpoint, v2).
struct MarkedTriangulation {
  PlaneGraph graph;
  std::vector<Edge> matching;
  std::vector<std::array<int, 3>> split_matching;
};

// Gadget with the vertices through which it is glued into a host graph.
struct Fragment {
  PlaneGraph graph;
  std::vector<int> attachments;
  std::vector<int> interior;
};

namespace detail {

class RotationBuilder {
 public:
  explicit RotationBuilder(Rotation r) : rot_(std::move(r)), alive_(rot_.size(), 1) {}

  int add_vertex(std::vector<int> nbrs = {}) {
    rot_.push_back(std::move(nbrs));
    alive_.push_back(1);
    return static_cast<int>(rot_.size()) - 1;
  }

  std::vector<int>& at(int v) { return rot_[v]; }
  const std::vector<int>& at(int v) const { return rot_[v]; }
  int size() const { return static_cast<int>(rot_.size()); }

  // Replaces the entry `old` in rot(v) by `repl`, in order.
  void replace(int v, int old, std::initializer_list<int> repl) { replace(v, old, std::vector<int>(repl)); }
  void replace(int v, int old, const std::vector<int>& repl) {
    auto& r = rot_[v];
    auto it = std::find(r.begin(), r.end(), old);
    if (it == r.end())
      throw std::logic_error("rotation edit: " + std::to_string(old) + " not at " + std::to_string(v));
    it = r.erase(it);
    r.insert(it, repl.begin(), repl.end());
  }

  void kill(int v) {
    alive_[v] = 0;
    rot_[v].clear();
  }

  // Drops killed vertices; survivors keep their relative order.
  PlaneGraph finish(std::vector<int>* new_id_out = nullptr) const {
    std::vector<int> id(rot_.size(), -1);
    int next = 0;
    for (std::size_t v = 0; v < rot_.size(); ++v)
      if (alive_[v]) id[v] = next++;
    Rotation out(next);
    for (std::size_t v = 0; v < rot_.size(); ++v) {
      if (!alive_[v]) continue;
      for (int u : rot_[v]) {
        if (id[u] < 0) throw std::logic_error("rotation edit left a reference to a removed vertex");
        out[id[v]].push_back(id[u]);
      }
    }
    if (new_id_out) *new_id_out = id;
    return build_plane_graph(std::move(out));
  }

 private:
  Rotation rot_;
  std::vector<char> alive_;
};

// perm[v] = new id of v.
inline PlaneGraph relabel(const PlaneGraph& pg, std::span<const int> perm) {
  Rotation out(pg.order());
  for (int v = 0; v < pg.order(); ++v)
    for (int u : pg.rotation()[v]) out[perm[v]].push_back(perm[u]);
  return build_plane_graph(std::move(out));
}

// Puts `first` (in that order) at ids 0.., the remaining vertices after them by old id.
inline std::vector<int> front_permutation(int n, std::span<const int> first) {
  std::vector<int> perm(n, -1);
  int next = 0;
  for (int v : first) perm[v] = next++;
  for (int v = 0; v < n; ++v)
    if (perm[v] < 0) perm[v] = next++;
  return perm;
}

using SparseRotation = std::map<int, std::vector<int>>;

inline SparseRotation sparse(const std::vector<std::vector<int>>& table, int offset) {
  SparseRotation r;
  for (std::size_t v = 0; v < table.size(); ++v) {
    auto& row = r[static_cast<int>(v) + offset];
    for (int u : table[v]) row.push_back(u + offset);
  }
  return r;
}

// Places `inner` inside the face of `outer` bounded by `hole`, identifying inner_cycle[i]
// with hole[i]; at each seam vertex the inner neighbors fill the hole's angular sector.
inline SparseRotation glue(const SparseRotation& outer, std::span<const int> hole, const SparseRotation& inner,
                           std::span<const int> inner_cycle) {
  std::map<int, int> ident;
  for (std::size_t i = 0; i < hole.size(); ++i) ident[inner_cycle[i]] = hole[i];
  auto m = [&](int x) {
    auto it = ident.find(x);
    return it == ident.end() ? x : it->second;
  };
  SparseRotation rot = outer;
  for (const auto& [v, l] : inner) {
    if (ident.count(v)) continue;
    auto& row = rot[v];
    for (int u : l) row.push_back(m(u));
  }
  const std::size_t k = hole.size();
  for (std::size_t i = 0; i < k; ++i) {
    const int v = hole[i];
    const int x = hole[(i + k - 1) % k], y = hole[(i + 1) % k];
    const std::vector<int> ol = rot[v];
    std::vector<int> il;
    for (int u : inner.at(inner_cycle[i])) il.push_back(m(u));
    const auto n = ol.size();
    const auto jx = static_cast<std::size_t>(std::find(ol.begin(), ol.end(), x) - ol.begin());
    const auto jy = static_cast<std::size_t>(std::find(ol.begin(), ol.end(), y) - ol.begin());
    int a, b;
    if ((jx + 1) % n == jy) {
      a = x;
      b = y;
    } else if ((jy + 1) % n == jx) {
      a = y;
      b = x;
    } else {
      throw std::logic_error("glue: hole is not a face sector at " + std::to_string(v));
    }
    const auto ni = il.size();
    auto j = (static_cast<std::size_t>(std::find(il.begin(), il.end(), a) - il.begin()) + 1) % ni;
    std::vector<int> body;
    while (il[j] != b) {
      body.push_back(il[j]);
      j = (j + 1) % ni;
    }
    if (body.empty()) throw std::logic_error("glue: orientation mismatch at " + std::to_string(v));
    const auto ja = static_cast<std::size_t>(std::find(ol.begin(), ol.end(), a) - ol.begin());
    std::vector<int> merged(ol.begin(), ol.begin() + static_cast<long>(ja) + 1);
    merged.insert(merged.end(), body.begin(), body.end());
    merged.insert(merged.end(), ol.begin() + static_cast<long>(ja) + 1, ol.end());
    rot[v] = std::move(merged);
  }
  return rot;
}

inline PlaneGraph compact(const SparseRotation& r) {
  std::map<int, int> id;
  for (const auto& [v, l] : r) id.emplace(v, static_cast<int>(id.size()));
  Rotation out(id.size());
  for (const auto& [v, l] : r)
    for (int u : l) out[id.at(v)].push_back(id.at(u));
  return build_plane_graph(std::move(out));
}

inline PlaneGraph from_table(const std::vector<std::vector<int>>& t) { return build_plane_graph(Rotation(t)); }

// Diamond-holder in place of edge v1v2: two 2-valent vertices p,q joined to both ends,
// plus a diamond a,c,d,b (a-b missing) hanging between a-v1 and b-v2.
inline std::array<int, 6> apply_holder(RotationBuilder& rb, int v1, int v2) {
  const int p = rb.add_vertex(), q = rb.add_vertex();
  const int a = rb.add_vertex(), b = rb.add_vertex(), c = rb.add_vertex(), d = rb.add_vertex();
  rb.replace(v1, v2, {p, a, q});
  rb.replace(v2, v1, {q, b, p});
  rb.at(p) = {v2, v1};
  rb.at(q) = {v1, v2};
  rb.at(a) = {c, d, v1};
  rb.at(b) = {v2, d, c};
  rb.at(c) = {b, d, a};
  rb.at(d) = {b, a, c};
  return {p, q, a, b, c, d};
}

// Snowflake in place of the 6-star at v: hexagon h_i and an apex x_i over each leaf l_i,
// so that {l_i, h_i, h_{i+1}, x_i} is a K4. Returns the hexagon then apex ids.
inline std::array<int, 12> apply_snowflake(RotationBuilder& rb, int v) {
  const std::vector<int> l = rb.at(v);
  if (l.size() != 6) throw std::logic_error("snowflake needs a vertex of degree 6");
  std::array<int, 6> h{}, x{};
  for (auto& t : h) t = rb.add_vertex();
  for (auto& t : x) t = rb.add_vertex();
  for (int i = 0; i < 6; ++i) {
    const int nx = (i + 1) % 6, pv = (i + 5) % 6;
    rb.at(h[i]) = {l[i], x[i], h[nx], h[pv], x[pv], l[pv]};
    rb.at(x[i]) = {l[i], h[nx], h[i]};
    rb.replace(l[i], v, {h[nx], x[i], h[i]});
  }
  rb.kill(v);
  std::array<int, 12> out{};
  std::copy(h.begin(), h.end(), out.begin());
  std::copy(x.begin(), x.end(), out.begin() + 6);
  return out;
}

inline bool all_faces_triangles(const PlaneGraph& pg) {
  if (!euler_check(pg)) return false;
  const auto fs = faces(pg);
  return std::all_of(fs.begin(), fs.end(), [](const Face& f) { return f.size() == 3; });
}

}  // namespace detail

inline PlaneGraph icosidodecahedron() { return detail::from_table(detail::drawn::icosidodecahedron()); }

// G_0 is the icosidodecahedron; G_k nests G_{k-1} inside the annulus, and that inside G_0's inner pentagon.
inline PlaneGraph c4_family(int k) {
  if (k < 0) throw InputError("c4_family needs k >= 0");
  namespace fig = detail::drawn;
  int next = 0;
  auto fresh = [&](const auto& table) {
    auto r = detail::sparse(table, next);
    next += static_cast<int>(table.size());
    return r;
  };
  auto shift = [](const std::array<int, 5>& c, int off) {
    std::array<int, 5> out{};
    for (int i = 0; i < 5; ++i) out[i] = c[i] + off;
    return out;
  };
  int off = next;
  detail::SparseRotation g = fresh(fig::icosidodecahedron());
  std::array<int, 5> outer = shift(fig::kIcosiOuter, off);
  for (int level = 1; level <= k; ++level) {
    off = next;
    const auto ring = fresh(fig::annulus());
    const auto ring_inner = shift(fig::kAnnulusInner, off), ring_outer = shift(fig::kAnnulusOuter, off);
    const auto filled = detail::glue(ring, ring_inner, g, outer);
    off = next;
    const auto shell = fresh(fig::icosidodecahedron());
    g = detail::glue(shell, shift(fig::kIcosiInner, off), filled, ring_outer);
    outer = shift(fig::kIcosiOuter, off);
  }
  return detail::compact(g);
}

inline PlaneGraph complete_bipartite_2(int n) {
  if (n < 4) throw InputError("complete_bipartite_2 needs n >= 4");
  Rotation r(n);
  for (int m = 2; m < n; ++m) {
    r[0].push_back(m);
    r[1].insert(r[1].begin(), m);
    r[m] = {0, 1};
  }
  return build_plane_graph(std::move(r));
}

// Rim 0..n-3 in counterclockwise order, inner hub n-2, outer hub n-1.
inline PlaneGraph double_wheel(int n) {
  if (n < 6) throw InputError("double_wheel needs n >= 6 (n = 5 contains K4)");
  const int m = n - 2, a = m, b = m + 1;
  Rotation r(n);
  for (int i = 0; i < m; ++i) {
    r[i] = {b, (i + 1) % m, a, (i + m - 1) % m};
    r[a].push_back(i);
    r[b].insert(r[b].begin(), i);
  }
  return build_plane_graph(std::move(r));
}

inline PlaneGraph figure5_graph() { return detail::from_table(detail::drawn::two_k4()); }

// K4 minus one edge.
inline PlaneGraph diamond() { return build_plane_graph(Rotation{{1, 3, 2}, {2, 0}, {1, 0, 3}, {0, 2}}); }

// Admissible T_k orders up to `limit`: seeds 6 and 15, closed under k -> 4k + 3.
inline std::vector<int> admissible_T_orders(int limit) {
  std::set<int> out;
  for (long long seed : {6LL, 15LL})
    for (long long k = seed; k <= limit; k = 4 * k + 3) out.insert(static_cast<int>(k));
  return {out.begin(), out.end()};
}

inline bool is_admissible_T_order(int k) {
  for (long long seed : {6LL, 15LL})
    for (long long t = seed; t <= k; t = 4 * t + 3)
      if (t == k) return true;
  return false;
}

struct TriangulationCheck {
  bool triangulation = false;        // Euler-valid, every face a triangle
  bool condition_i = false;          // vertices 0..5 have degree 4
  bool condition_ii = false;         // all other vertices have degree 6
  bool condition_iii = false;        // E* = {01, 23, 45} present
  bool ok() const { return triangulation && condition_i && condition_ii && condition_iii; }
};

inline TriangulationCheck check_triangulation(const MarkedTriangulation& t) {
  TriangulationCheck c;
  const auto& g = t.graph.graph();
  c.triangulation = detail::all_faces_triangles(t.graph);
  const int n = g.order();
  c.condition_i = n >= 6;
  for (int v = 0; v < std::min(n, 6); ++v) c.condition_i = c.condition_i && g.degree(v) == 4;
  c.condition_ii = true;
  for (int v = 6; v < n; ++v) c.condition_ii = c.condition_ii && g.degree(v) == 6;
  const std::vector<Edge> want = {Edge(0, 1), Edge(2, 3), Edge(4, 5)};
  std::vector<Edge> have = t.matching;
  std::sort(have.begin(), have.end());
  c.condition_iii = n >= 6 && have == want;
  for (const Edge& e : want) c.condition_iii = c.condition_iii && g.adjacent(e.u, e.v);
  return c;
}

// Subdivides every edge and joins the three midpoints inside every face.
inline MarkedTriangulation grow_triangulation(const MarkedTriangulation& t) {
  const PlaneGraph& pg = t.graph;
  if (!detail::all_faces_triangles(pg)) throw InputError("grow_triangulation needs a plane triangulation");
  const int n = pg.order();
  const auto edges = pg.graph().edges();
  auto mid = [&](int a, int b) {
    return n + static_cast<int>(std::lower_bound(edges.begin(), edges.end(), Edge(a, b)) - edges.begin());
  };
  Rotation r(n + edges.size());
  for (int v = 0; v < n; ++v)
    for (int u : pg.rotation()[v]) r[v].push_back(mid(v, u));
  for (const Edge& e : edges) {
    const int a = e.u, b = e.v;
    const int c = pg.successor(b, a);  // third corner of the face right of a->b
    const int d = pg.successor(a, b);  // third corner of the face right of b->a
    r[mid(a, b)] = {b, mid(d, b), mid(a, d), a, mid(c, a), mid(b, c)};
  }
  MarkedTriangulation out;
  out.graph = build_plane_graph(std::move(r));
  for (const Edge& e : t.matching) out.split_matching.push_back({e.u, mid(e.u, e.v), e.v});
  return out;
}

inline PlaneGraph grow_triangulation(const PlaneGraph& pg) { return grow_triangulation(MarkedTriangulation{pg, {}, {}}).graph; }

// At each subdivided matching edge v1-m-v2, replaces m by four vertices n1, n2, u, w so that
// v1 and v2 reach degree 6 and n1n2 becomes a matching edge between two new degree-4 vertices.
inline MarkedTriangulation fix_condition_iii(const MarkedTriangulation& t) {
  if (t.split_matching.size() != 3) throw InputError("fix_condition_iii: no subdivided matching recorded");
  detail::RotationBuilder rb(t.graph.rotation());
  std::vector<int> fresh;
  for (const auto& [v1, m, v2] : t.split_matching) {
    std::vector<int> rm = rb.at(m);
    if (rm.size() != 6) throw InputError("fix_condition_iii: subdivision vertex does not have degree 6");
    std::rotate(rm.begin(), std::find(rm.begin(), rm.end(), v2), rm.end());
    if (rm[0] != v2 || rm[3] != v1) throw InputError("fix_condition_iii: unexpected neighborhood at subdivision vertex");
    const int a2 = rm[1], a1 = rm[2], b1 = rm[4], b2 = rm[5];
    const int n1 = rb.add_vertex(), n2 = rb.add_vertex(), u = rb.add_vertex(), w = rb.add_vertex();
    rb.replace(v1, m, {w, n1, u});
    rb.replace(v2, m, {u, n2, w});
    rb.replace(a1, m, {u});
    rb.replace(a2, m, {u});
    rb.replace(b1, m, {w});
    rb.replace(b2, m, {w});
    rb.at(n1) = {w, n2, u, v1};
    rb.at(n2) = {v2, u, n1, w};
    rb.at(u) = {a2, a1, v1, n1, n2, v2};
    rb.at(w) = {v2, n2, n1, v1, b1, b2};
    rb.kill(m);
    fresh.push_back(n1);
    fresh.push_back(n2);
  }
  std::vector<int> id;
  const PlaneGraph raw = rb.finish(&id);
  std::vector<int> first;
  for (int v : fresh) first.push_back(id[v]);
  MarkedTriangulation out;
  out.graph = detail::relabel(raw, detail::front_permutation(raw.order(), first));
  out.matching = {Edge(0, 1), Edge(2, 3), Edge(4, 5)};
  return out;
}

inline MarkedTriangulation triangulation_T(int k) {
  if (!is_admissible_T_order(k)) {
    std::string list;
    for (int a : admissible_T_orders(1000)) list += (list.empty() ? "" : ", ") + std::to_string(a);
    throw InputError("k = " + std::to_string(k) + " is not admissible for T_k; admissible: " + list + ", ...");
  }
  MarkedTriangulation t;
  t.matching = {Edge(0, 1), Edge(2, 3), Edge(4, 5)};
  if (k == 6) {
    std::vector<Edge> es;
    for (auto [a, b] : detail::drawn::octahedron_edges()) es.emplace_back(a, b);
    const AbstractGraph g = AbstractGraph::from_edges(6, es);
    t.graph = build_plane_graph(g, is_planar(g).rotation);
    return t;
  }
  if (k == 15) {
    const PlaneGraph raw = detail::from_table(detail::drawn::tower15());
    std::vector<int> first;
    for (auto [a, b] : detail::drawn::kTower15Matching) {
      first.push_back(a);
      first.push_back(b);
    }
    t.graph = detail::relabel(raw, detail::front_permutation(raw.order(), first));
    return t;
  }
  return fix_condition_iii(grow_triangulation(triangulation_T((k - 3) / 4)));
}

inline Fragment diamond_holder() {
  detail::RotationBuilder rb(Rotation{{1}, {0}});
  const auto ids = detail::apply_holder(rb, 0, 1);
  Fragment f;
  f.graph = rb.finish();
  f.attachments = {0, 1};
  f.interior = {ids[2], ids[3], ids[4], ids[5]};
  return f;
}

inline Fragment snowflake() {
  detail::RotationBuilder rb(Rotation{{1, 2, 3, 4, 5, 6}, {0}, {0}, {0}, {0}, {0}, {0}});
  detail::apply_snowflake(rb, 0);
  Fragment f;
  f.graph = rb.finish();  // leaves become 0..5, hexagon 6..11, apexes 12..17
  f.attachments = {0, 1, 2, 3, 4, 5};
  for (int v = 6; v < 18; ++v) f.interior.push_back(v);
  return f;
}

// G*: subdivide the non-matching edges of T_k, put a diamond-holder on each matching edge,
// then replace the 6-star at every original vertex by a snowflake.
inline PlaneGraph c5_family(int k) {
  const MarkedTriangulation t = triangulation_T(k);
  detail::RotationBuilder rb(t.graph.rotation());
  for (const Edge& e : t.graph.graph().edges()) {
    if (std::find(t.matching.begin(), t.matching.end(), e) != t.matching.end()) continue;
    const int s = rb.add_vertex({e.u, e.v});
    rb.replace(e.u, e.v, {s});
    rb.replace(e.v, e.u, {s});
  }
  for (const Edge& e : t.matching) detail::apply_holder(rb, e.u, e.v);
  for (int v = 0; v < k; ++v) detail::apply_snowflake(rb, v);
  return rb.finish();
}

}  // namespace planext
