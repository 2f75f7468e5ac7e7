#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "planarity.hpp"

namespace planext {

struct Dart {
  int from = 0;
  int to = 0;
  auto operator<=>(const Dart&) const = default;
};

struct Face {
  std::vector<Dart> walk;
  int size() const noexcept { return static_cast<int>(walk.size()); }
};

// Graph plus counterclockwise rotation system. Built via build_plane_graph (connected input)
// or by the reductions, whose output may fall apart into several components.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  const AbstractGraph& graph() const noexcept { return g_; }
  const Rotation& rotation() const noexcept { return rot_; }
  int order() const noexcept { return g_.order(); }
  std::size_t edge_count() const noexcept { return g_.edge_count(); }

  // Index of u within rotation(v).
  int position(int v, int u) const {
    const auto& nb = g_.neighbors(v);
    const auto k = std::lower_bound(nb.begin(), nb.end(), u) - nb.begin();
    return pos_[v][static_cast<std::size_t>(k)];
  }

  // Neighbor following u in the cyclic order at v.
  int successor(int v, int u) const {
    const auto& r = rot_[v];
    return r[(static_cast<std::size_t>(position(v, u)) + 1) % r.size()];
  }

  static PlaneGraph make(AbstractGraph g, Rotation rot, bool require_connected) {
    const int n = g.order();
    if (static_cast<int>(rot.size()) != n)
      throw InputError("rotation lists " + std::to_string(rot.size()) + " vertices, graph has " + std::to_string(n));
    PlaneGraph pg;
    pg.pos_.resize(n);
    for (int v = 0; v < n; ++v) {
      const auto& nb = g.neighbors(v);
      if (rot[v].size() != nb.size())
        throw InputError("vertex " + std::to_string(v) + ": rotation has " + std::to_string(rot[v].size()) +
                         " entries, degree is " + std::to_string(nb.size()));
      pg.pos_[v].assign(nb.size(), -1);
      for (std::size_t i = 0; i < rot[v].size(); ++i) {
        const int u = rot[v][i];
        const auto it = std::lower_bound(nb.begin(), nb.end(), u);
        if (it == nb.end() || *it != u)
          throw InputError("vertex " + std::to_string(v) + ", position " + std::to_string(i) + ": " +
                           std::to_string(u) + " is not a neighbor");
        auto& slot = pg.pos_[v][static_cast<std::size_t>(it - nb.begin())];
        if (slot >= 0)
          throw InputError("vertex " + std::to_string(v) + ", position " + std::to_string(i) + ": neighbor " +
                           std::to_string(u) + " repeated");
        slot = static_cast<int>(i);
      }
    }
    if (require_connected && !is_connected(g)) throw InputError("embedding input must be connected");
    pg.g_ = std::move(g);
    pg.rot_ = std::move(rot);
    return pg;
  }

 private:
  AbstractGraph g_;
  Rotation rot_;
  std::vector<std::vector<int>> pos_;
};

inline PlaneGraph build_plane_graph(AbstractGraph g, Rotation rotation) {
  return PlaneGraph::make(std::move(g), std::move(rotation), true);
}

// Graph derived from the rotation itself.
inline PlaneGraph build_plane_graph(Rotation rotation) {
  std::vector<Edge> es;
  const int n = static_cast<int>(rotation.size());
  for (int v = 0; v < n; ++v)
    for (int u : rotation[v]) {
      if (u < 0 || u >= n) throw InputError("vertex " + std::to_string(v) + ": neighbor " + std::to_string(u) + " out of range");
      if (u == v) throw InputError("loop at vertex " + std::to_string(v));
      es.emplace_back(u, v);
    }
  std::sort(es.begin(), es.end());
  // every edge must be listed from both ends
  for (std::size_t i = 0; i < es.size(); i += 2)
    if (i + 1 >= es.size() || es[i] != es[i + 1] || (i + 2 < es.size() && es[i + 2] == es[i]))
      throw InputError("rotation not symmetric at edge " + std::to_string(es[i].u) + "-" + std::to_string(es[i].v));
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return build_plane_graph(AbstractGraph::from_edges(n, es), std::move(rotation));
}

// Dart orbits under (u,v) -> (v, succ_v(u)), visited in vertex then rotation order.
inline std::vector<Face> faces(const PlaneGraph& pg) {
  const int n = pg.order();
  std::vector<std::vector<char>> seen(n);
  for (int v = 0; v < n; ++v) seen[v].assign(pg.rotation()[v].size(), 0);
  std::vector<Face> out;
  for (int v = 0; v < n; ++v)
    for (std::size_t i = 0; i < pg.rotation()[v].size(); ++i) {
      if (seen[v][i]) continue;
      Face f;
      Dart d{v, pg.rotation()[v][i]};
      while (true) {
        auto& flag = seen[d.from][static_cast<std::size_t>(pg.position(d.from, d.to))];
        if (flag) break;
        flag = 1;
        f.walk.push_back(d);
        d = Dart{d.to, pg.successor(d.to, d.from)};
      }
      out.push_back(std::move(f));
    }
  return out;
}

// n - e + f = 2 on every component (components with a single vertex count one face).
inline bool euler_check(const PlaneGraph& pg) {
  int comps = 0;
  const auto comp = component_ids(pg.graph(), &comps);
  std::vector<long long> chi(comps, 0);
  for (int v = 0; v < pg.order(); ++v) {
    chi[comp[v]] += 1;
    if (pg.graph().degree(v) == 0) chi[comp[v]] += 1;
  }
  for (const Edge& e : pg.graph().edges()) chi[comp[e.u]] -= 1;
  for (const Face& f : faces(pg)) chi[comp[f.walk.front().from]] += 1;
  return std::all_of(chi.begin(), chi.end(), [](long long x) { return x == 2; });
}

struct FaceProfile {
  std::map<int, int> f_i;
  int f = 0;
  int f31 = 0;
  int count(int size) const {
    auto it = f_i.find(size);
    return it == f_i.end() ? 0 : it->second;
  }
};

struct EdgeFaces {
  Edge edge;
  int size_a = 0;  // size_a <= size_b
  int size_b = 0;
};

struct EdgeFaceClassification {
  std::vector<EdgeFaces> edges;
  std::map<int, int> e_i;
  std::map<std::pair<int, int>, int> e_ij;  // key (i, j) with i <= j
  int e(int i) const {
    auto it = e_i.find(i);
    return it == e_i.end() ? 0 : it->second;
  }
  int e_pair(int i, int j) const {
    auto it = e_ij.find({std::min(i, j), std::max(i, j)});
    return it == e_ij.end() ? 0 : it->second;
  }
};

// Face index of every dart, addressed as [v][position in rotation(v)].
struct FaceIndex {
  std::vector<Face> faces;
  std::vector<std::vector<int>> of_dart;

  explicit FaceIndex(const PlaneGraph& pg) : faces(planext::faces(pg)), of_dart(pg.order()) {
    for (int v = 0; v < pg.order(); ++v) of_dart[v].assign(pg.rotation()[v].size(), -1);
    for (std::size_t i = 0; i < faces.size(); ++i)
      for (const Dart& d : faces[i].walk)
        of_dart[d.from][static_cast<std::size_t>(pg.position(d.from, d.to))] = static_cast<int>(i);
  }

  int face_of(const PlaneGraph& pg, int u, int v) const {
    return of_dart[u][static_cast<std::size_t>(pg.position(u, v))];
  }
};

namespace detail {

inline void require_euler(const PlaneGraph& pg) {
  if (!euler_check(pg)) throw InputError("embedding fails the Euler check (not a plane embedding)");
}

}  // namespace detail

inline FaceProfile face_profile(const PlaneGraph& pg) {
  detail::require_euler(pg);
  const FaceIndex fx(pg);
  FaceProfile p;
  p.f = static_cast<int>(fx.faces.size());
  for (std::size_t i = 0; i < fx.faces.size(); ++i) {
    const Face& f = fx.faces[i];
    ++p.f_i[f.size()];
    if (f.size() != 3) continue;
    int shared = 0;
    for (const Dart& d : f.walk) {
      const int other = fx.face_of(pg, d.to, d.from);
      if (other != static_cast<int>(i) && fx.faces[other].size() == 3) ++shared;
    }
    if (shared == 1) ++p.f31;
  }
  return p;
}

inline EdgeFaceClassification classify_edges(const PlaneGraph& pg) {
  detail::require_euler(pg);
  const FaceIndex fx(pg);
  EdgeFaceClassification c;
  for (const Edge& e : pg.graph().edges()) {
    int a = fx.faces[fx.face_of(pg, e.u, e.v)].size();
    int b = fx.faces[fx.face_of(pg, e.v, e.u)].size();
    if (a > b) std::swap(a, b);
    c.edges.push_back({e, a, b});
    ++c.e_i[a];
    if (b != a) ++c.e_i[b];
    ++c.e_ij[{a, b}];
  }
  return c;
}

namespace detail {

// Keeps edges with keep_edge(e) and drops vertices left without edges when drop_isolated.
template <class Pred>
PlaneGraph filter_plane_graph(const PlaneGraph& pg, Pred keep_edge, const std::vector<char>& drop_vertex, bool drop_isolated) {
  const int n = pg.order();
  Rotation rot(n);
  for (int v = 0; v < n; ++v) {
    if (drop_vertex[v]) continue;
    for (int u : pg.rotation()[v])
      if (!drop_vertex[u] && keep_edge(Edge(u, v))) rot[v].push_back(u);
  }
  std::vector<int> id(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (!drop_vertex[v] && !(drop_isolated && rot[v].empty() && pg.graph().degree(v) > 0)) id[v] = next++;
  Rotation out(next);
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v) {
    if (id[v] < 0) continue;
    for (int u : rot[v]) {
      out[id[v]].push_back(id[u]);
      if (v < u) es.emplace_back(id[v], id[u]);
    }
  }
  return PlaneGraph::make(AbstractGraph::from_edges(next, es), std::move(out), false);
}

}  // namespace detail

// Deletes every edge whose two incident faces are triangles, then vertices isolated by that.
inline PlaneGraph reduce_prime(const PlaneGraph& pg) {
  detail::require_euler(pg);
  const FaceIndex fx(pg);
  auto keep = [&](Edge e) {
    return !(fx.faces[fx.face_of(pg, e.u, e.v)].size() == 3 && fx.faces[fx.face_of(pg, e.v, e.u)].size() == 3);
  };
  return detail::filter_plane_graph(pg, keep, std::vector<char>(pg.order(), 0), true);
}

// Vertices c of degree 3 whose three incident faces are triangles: the centre of an embedded K4.
inline std::vector<int> k4_centers(const PlaneGraph& pg) {
  const FaceIndex fx(pg);
  std::vector<int> out;
  for (int c = 0; c < pg.order(); ++c) {
    if (pg.graph().degree(c) != 3) continue;
    bool ok = true;
    for (int u : pg.rotation()[c])
      if (fx.faces[fx.face_of(pg, c, u)].size() != 3) ok = false;
    const auto& nb = pg.graph().neighbors(c);
    if (ok && pg.graph().adjacent(nb[0], nb[1]) && pg.graph().adjacent(nb[1], nb[2]) && pg.graph().adjacent(nb[0], nb[2]))
      out.push_back(c);
  }
  return out;
}

// Removes one centre per embedded K4 (lowest id first; a centre adjacent to a removed one is kept).
inline PlaneGraph reduce_k4_centers(const PlaneGraph& pg) {
  detail::require_euler(pg);
  std::vector<char> drop(pg.order(), 0);
  for (int c : k4_centers(pg)) {
    bool clash = false;
    for (int u : pg.graph().neighbors(c)) clash = clash || drop[u];
    if (!clash) drop[c] = 1;
  }
  return detail::filter_plane_graph(pg, [](Edge) { return true; }, drop, false);
}

}  // namespace planext
