#include <random>

#include <gtest/gtest.h>

#include <planext/bitgraph.hpp>
#include <planext/embedding.hpp>
#include <planext/patterns.hpp>
#include <planext/planarity.hpp>

#include "support/oracles.hpp"

using namespace planext;

namespace {

bool is_cycle_witness(const AbstractGraph& g, const std::vector<int>& w, int k) {
  if (static_cast<int>(w.size()) != k) return false;
  std::set<int> distinct(w.begin(), w.end());
  if (static_cast<int>(distinct.size()) != k) return false;
  for (int i = 0; i < k; ++i)
    if (!g.adjacent(w[i], w[(i + 1) % k])) return false;
  return true;
}

AbstractGraph k33() {
  std::vector<Edge> es;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) es.emplace_back(a, b);
  return AbstractGraph::from_edges(6, es);
}

}  // namespace

TEST(ForbiddenPattern, ParseAndNames) {
  EXPECT_EQ(ForbiddenPattern::parse("c5").name(), "c5");
  EXPECT_EQ(ForbiddenPattern::parse("k4").size(), 4);
  EXPECT_EQ(ForbiddenPattern::parse("K3").kind(), ForbiddenPattern::Kind::clique);
  EXPECT_THROW(ForbiddenPattern::parse("c2"), InputError);
  EXPECT_THROW(ForbiddenPattern::parse("x4"), InputError);
  EXPECT_THROW(ForbiddenPattern::parse("c"), InputError);
  EXPECT_THROW(ForbiddenPattern::custom(AbstractGraph(13)), InputError);
  EXPECT_THROW(ForbiddenPattern::custom(AbstractGraph(2)), InputError);  // disconnected
  EXPECT_EQ(ForbiddenPattern::cycle(4).graph(), oracle::cycle(4));
}

TEST(Cycles, WitnessesAndAgreementWithOracle) {
  std::mt19937 rng(21);
  for (int t = 0; t < 300; ++t) {
    const AbstractGraph g = oracle::random_graph(8, 0.25 + 0.001 * t, rng);
    for (int k = 3; k <= 6; ++k) {
      const PatternMatch m = contains_pattern(g, ForbiddenPattern::cycle(k));
      ASSERT_EQ(m.found, oracle::contains(g, oracle::cycle(k))) << "k=" << k;
      if (m.found) EXPECT_TRUE(is_cycle_witness(g, m.witness, k));
    }
  }
}

TEST(Cliques, AgreementWithOracle) {
  std::mt19937 rng(22);
  for (int t = 0; t < 300; ++t) {
    const AbstractGraph g = oracle::random_graph(8, 0.5, rng);
    for (int r = 3; r <= 5; ++r) {
      const PatternMatch m = contains_pattern(g, ForbiddenPattern::clique(r));
      ASSERT_EQ(m.found, oracle::contains(g, oracle::complete(r)));
      if (m.found) {
        ASSERT_EQ(static_cast<int>(m.witness.size()), r);
        for (int i = 0; i < r; ++i)
          for (int j = i + 1; j < r; ++j) EXPECT_TRUE(g.adjacent(m.witness[i], m.witness[j]));
      }
    }
  }
}

TEST(CustomPatterns, AgreementWithOracle) {
  const AbstractGraph paw = AbstractGraph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  const AbstractGraph star = AbstractGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  const AbstractGraph house = AbstractGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}});
  std::mt19937 rng(23);
  for (int t = 0; t < 200; ++t) {
    const AbstractGraph g = oracle::random_graph(7, 0.35, rng);
    for (const auto& h : {paw, star, house}) {
      const PatternMatch m = contains_pattern(g, ForbiddenPattern::custom(h));
      ASSERT_EQ(m.found, oracle::contains(g, h));
      if (m.found)
        for (const Edge& e : h.edges()) EXPECT_TRUE(g.adjacent(m.witness[e.u], m.witness[e.v]));
    }
  }
}

TEST(PatternThroughEdge, MatchesDifferenceOfWholeGraphChecks) {
  std::mt19937 rng(24);
  const std::vector<ForbiddenPattern> ps{ForbiddenPattern::cycle(4), ForbiddenPattern::cycle(5), ForbiddenPattern::clique(4),
                                         ForbiddenPattern::custom(AbstractGraph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}))};
  for (int t = 0; t < 300; ++t) {
    AbstractGraph g = oracle::random_graph(8, 0.3, rng);
    for (const auto& p : ps) {
      if (contains_pattern(g, p).found) continue;
      for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v) {
          if (g.adjacent(u, v)) continue;
          BitGraph b(g);
          b.add_edge(u, v);
          EXPECT_EQ(contains_pattern_through(b, u, v, p), contains_pattern(b, p).found);
        }
    }
  }
}

TEST(Planarity, KuratowskiGraphs) {
  for (const AbstractGraph& g : {oracle::complete(5), k33()}) {
    const PlanarityResult r = is_planar(g);
    EXPECT_FALSE(r.planar);
    EXPECT_TRUE(is_kuratowski_subdivision(g.order(), r.obstruction));
    EXPECT_FALSE(planar_quick(BitGraph(g)));
  }
  EXPECT_TRUE(is_planar(oracle::complete(4)).planar);
  EXPECT_FALSE(is_planar(oracle::petersen()).planar);
}

TEST(Planarity, CertificatesAlwaysCheck) {
  std::mt19937 rng(25);
  for (int t = 0; t < 500; ++t) {
    const AbstractGraph g = oracle::random_graph(9, 0.2 + 0.0008 * t, rng);
    const PlanarityResult r = is_planar(g);
    EXPECT_EQ(planar_quick(BitGraph(g)), r.planar);
    if (r.planar) {
      EXPECT_TRUE(euler_check(PlaneGraph::make(g, r.rotation, false)));
    } else {
      EXPECT_TRUE(is_kuratowski_subdivision(g.order(), r.obstruction));
      for (const Edge& e : r.obstruction) EXPECT_TRUE(g.adjacent(e.u, e.v));
    }
  }
}

TEST(Planarity, SubdivisionVerifier) {
  // K3,3 with one edge subdivided by a new vertex.
  std::vector<Edge> es;
  for (const Edge& e : k33().edges())
    if (!(e.u == 0 && e.v == 3)) es.push_back(e);
  es.emplace_back(0, 6);
  es.emplace_back(6, 3);
  EXPECT_TRUE(is_kuratowski_subdivision(7, es));
  es.emplace_back(1, 2);  // extra edge
  EXPECT_FALSE(is_kuratowski_subdivision(7, es));
  const auto c6 = oracle::cycle(6).edges();
  EXPECT_FALSE(is_kuratowski_subdivision(6, c6));
  EXPECT_FALSE(is_kuratowski_subdivision(6, {}));
}
