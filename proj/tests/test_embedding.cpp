#include <random>

#include <gtest/gtest.h>

#include <planext/audit.hpp>
#include <planext/constructions.hpp>
#include <planext/embedding.hpp>
#include <planext/json_io.hpp>
#include <planext/planarity.hpp>

#include "support/oracles.hpp"
#include "support/reduction_fixture.hpp"

using namespace planext;

namespace {

PlaneGraph k4() { return build_plane_graph(Rotation{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}); }

}  // namespace

TEST(PlaneGraph, ValidationNamesVertexAndPosition) {
  const AbstractGraph tri = oracle::cycle(3);
  try {
    build_plane_graph(tri, Rotation{{1, 2}, {2, 2}, {0, 1}});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("vertex 1, position 1"), std::string::npos) << e.what();
  }
  try {
    build_plane_graph(tri, Rotation{{1, 2}, {0, 2}, {0}});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("vertex 2"), std::string::npos);
  }
  EXPECT_THROW(build_plane_graph(Rotation{{1}, {}}), InputError);  // listed from one end only
  EXPECT_THROW(build_plane_graph(Rotation{{1}, {0}, {}}), InputError);  // disconnected
}

TEST(PlaneGraph, SuccessorFollowsRotation) {
  const PlaneGraph g = k4();
  EXPECT_EQ(g.successor(0, 1), 2);
  EXPECT_EQ(g.successor(0, 3), 1);
  EXPECT_EQ(g.position(2, 3), 2);
}

TEST(Faces, K4HasFourTriangles) {
  const PlaneGraph g = k4();
  const auto fs = faces(g);
  ASSERT_EQ(fs.size(), 4u);
  for (const auto& f : fs) EXPECT_EQ(f.size(), 3);
  EXPECT_TRUE(euler_check(g));
}

TEST(Faces, EveryDartInExactlyOneFace) {
  const PlaneGraph g = icosidodecahedron();
  std::set<Dart> seen;
  for (const auto& f : faces(g))
    for (const Dart& d : f.walk) EXPECT_TRUE(seen.insert(d).second);
  EXPECT_EQ(seen.size(), 2 * g.edge_count());
}

TEST(Faces, TreeHasOneFaceWalkingEachEdgeTwice) {
  const PlaneGraph star = build_plane_graph(Rotation{{1, 2, 3}, {0}, {0}, {0}});
  const auto fs = faces(star);
  ASSERT_EQ(fs.size(), 1u);
  EXPECT_EQ(fs[0].size(), 6);
  EXPECT_TRUE(euler_check(star));
}

TEST(Euler, DetectsNonPlanarRotation) {
  // K4 with one vertex's cyclic order reversed relative to a plane drawing.
  const PlaneGraph bad = build_plane_graph(Rotation{{1, 3, 2}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
  EXPECT_FALSE(euler_check(bad));
  EXPECT_THROW(face_profile(bad), InputError);
  EXPECT_THROW(reduce_prime(bad), InputError);
}

TEST(Euler, BoostEmbeddingsOfRandomPlanarGraphsAreValid) {
  std::mt19937 rng(17);
  int checked = 0;
  for (int t = 0; t < 400; ++t) {
    const AbstractGraph g = oracle::random_graph(9, 0.35, rng);
    if (!is_connected(g)) continue;
    const PlanarityResult r = is_planar(g);
    if (!r.planar) continue;
    const PlaneGraph pg = build_plane_graph(g, r.rotation);
    EXPECT_TRUE(euler_check(pg));
    EXPECT_EQ(static_cast<long long>(faces(pg).size()), static_cast<long long>(g.edge_count()) - g.order() + 2);
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(FaceProfile, Icosidodecahedron) {
  const PlaneGraph g = icosidodecahedron();
  const FaceProfile fp = face_profile(g);
  EXPECT_EQ(fp.f, 32);
  EXPECT_EQ(fp.count(3), 20);
  EXPECT_EQ(fp.count(5), 12);
  EXPECT_EQ(fp.f31, 0);
  const EdgeFaceClassification ec = classify_edges(g);
  EXPECT_EQ(ec.e_pair(3, 5), 60);
  EXPECT_EQ(ec.e(3), 60);
  EXPECT_EQ(ec.e(5), 60);
  for (const auto& e : ec.edges) {
    EXPECT_EQ(e.size_a, 3);
    EXPECT_EQ(e.size_b, 5);
  }
}

TEST(FaceProfile, TwoK4sAtACutVertex) {
  const PlaneGraph g = figure5_graph();
  const FaceProfile fp = face_profile(g);
  EXPECT_EQ(fp.count(3), 6);
  EXPECT_EQ(fp.count(6), 1);
  const EdgeFaceClassification ec = classify_edges(g);
  EXPECT_EQ(ec.e_pair(3, 6), 6);
  EXPECT_EQ(ec.e_pair(3, 3), 6);
}

TEST(FaceProfile, F31CountsTrianglesWithOneTriangularNeighbor) {
  // Diamond: two triangles sharing an edge, outer 4-face.
  const FaceProfile fp = face_profile(diamond());
  EXPECT_EQ(fp.count(3), 2);
  EXPECT_EQ(fp.count(4), 1);
  EXPECT_EQ(fp.f31, 2);
}

TEST(ReducePrime, MatchesDrawnFixture) {
  const PlaneGraph before = build_plane_graph(Rotation(fixtures::reduction_before()));
  const PlaneGraph after = build_plane_graph(Rotation(fixtures::reduction_after()));
  ASSERT_TRUE(euler_check(before));
  ASSERT_TRUE(euler_check(after));
  EXPECT_EQ(before.order(), 10);
  EXPECT_EQ(before.edge_count(), 17u);
  const PlaneGraph r = reduce_prime(before);
  EXPECT_EQ(r.order(), 9);
  EXPECT_EQ(r.edge_count(), 12u);
  EXPECT_TRUE(oracle::isomorphic(r.graph(), after.graph()));
  EXPECT_TRUE(euler_check(r));
  const FaceProfile a = face_profile(r), b = face_profile(after);
  EXPECT_EQ(a.f_i, b.f_i);
}

TEST(ReducePrime, DiamondBecomesFourCycle) {
  const PlaneGraph r = reduce_prime(diamond());
  EXPECT_EQ(r.order(), 4);
  EXPECT_EQ(r.edge_count(), 4u);
  EXPECT_TRUE(oracle::isomorphic(r.graph(), oracle::cycle(4)));
}

TEST(ReducePrime, TriangleFreeInputUnchanged) {
  const PlaneGraph g = complete_bipartite_2(6);
  const PlaneGraph r = reduce_prime(g);
  EXPECT_EQ(r.graph(), g.graph());
  EXPECT_EQ(r.rotation(), g.rotation());
}

TEST(ReducePrime, OutputMayBeDisconnected) {
  // Octahedron with a pendant vertex inside two opposite faces: only the pendant edges survive.
  const PlaneGraph oct = triangulation_T(6).graph;
  const auto fs = faces(oct);
  // pick two vertex-disjoint faces
  std::size_t fa = 0, fb = 0;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      std::set<int> s;
      for (const auto& d : fs[i].walk) s.insert(d.from);
      for (const auto& d : fs[j].walk) s.insert(d.from);
      if (s.size() == 6) fa = i, fb = j;
    }
  Rotation rot = oct.rotation();
  for (std::size_t f : {fa, fb}) {
    const Dart d = fs[f].walk[0];
    const int p = static_cast<int>(rot.size());
    rot.push_back({d.from});
    // the corner of f at d.from sits just before d.to in rotation(d.from)
    auto& r = rot[d.from];
    r.insert(r.begin() + oct.position(d.from, d.to), p);
  }
  const PlaneGraph g = build_plane_graph(std::move(rot));
  ASSERT_TRUE(euler_check(g));
  const PlaneGraph r = reduce_prime(g);
  EXPECT_TRUE(euler_check(r));
  EXPECT_FALSE(is_connected(r.graph()));
}

TEST(ReduceK4Centers, RemovesOneCentrePerK4) {
  const PlaneGraph r = reduce_k4_centers(figure5_graph());
  EXPECT_EQ(r.order(), 5);
  EXPECT_EQ(r.edge_count(), 6u);
  EXPECT_TRUE(euler_check(r));
  const PlaneGraph s = reduce_k4_centers(k4());
  EXPECT_EQ(s.order(), 3);
  EXPECT_EQ(s.edge_count(), 3u);
}

TEST(AuditC4, IcosidodecahedronIsTightEverywhere) {
  const AuditReport r = audit_c4(icosidodecahedron());
  ASSERT_EQ(r.entries.size(), 4u);
  for (const auto& e : r.entries) {
    EXPECT_TRUE(e.applicable);
    EXPECT_TRUE(e.holds) << e.id;
    EXPECT_TRUE(e.tight) << e.id;
  }
  EXPECT_EQ(r.find("d")->rhs, Rational(60));
}

TEST(AuditC4, RequiresFreeness) {
  EXPECT_THROW(audit_c4(k4()), InapplicableError);
  EXPECT_THROW(audit_c4(build_plane_graph(Rotation{{1, 2}, {2, 0}, {0, 1}})), InapplicableError);
}

TEST(AuditC4, SlackOnNonExtremalGraph) {
  const AuditReport r = audit_c4(build_plane_graph(Rotation{{1, 2, 3, 4}, {0}, {0}, {0}, {0}}));
  EXPECT_TRUE(r.all_applicable_hold());
  EXPECT_FALSE(r.find("d")->tight);
}

TEST(AuditC5, FigureFiveGraph) {
  const AuditReport r = audit_c5(figure5_graph());
  EXPECT_TRUE(r.all_applicable_hold());
  EXPECT_TRUE(r.find("d")->tight);  // 12 = 12(7-2)/5
  EXPECT_FALSE(r.find("e1")->applicable);  // cut vertex
  EXPECT_FALSE(r.find("i")->applicable);   // n < 11
  EXPECT_TRUE(r.find("a")->applicable);
}

TEST(AuditC5, MainConstructionHoldsWithEquality) {
  const AuditReport r = audit_c5(c5_family(6));
  EXPECT_TRUE(r.all_applicable_hold());
  for (const auto& e : r.entries) EXPECT_TRUE(e.applicable) << e.id;
  EXPECT_TRUE(r.find("i")->tight);
  EXPECT_EQ(r.find("i")->lhs, Rational(231));
}

TEST(AuditC5, RejectsGraphsWithFiveCycles) {
  EXPECT_THROW(audit_c5(icosidodecahedron()), InapplicableError);
  EXPECT_THROW(audit_c5(k4()), InapplicableError);  // n < 5
}

TEST(EmbeddingJson, RoundTrip) {
  const PlaneGraph g = icosidodecahedron();
  const std::string text = embedding_json(g).dump();
  const PlaneGraph h = read_embedding_json(text);
  EXPECT_EQ(h.rotation(), g.rotation());
  EXPECT_EQ(embedding_json(g)["schema_version"], kSchemaVersion);
}

TEST(EmbeddingJson, ErrorsNameVertexAndPosition) {
  try {
    read_embedding_json(R"({"n": 2, "rotation": [[1], [5]]})");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("vertex 1, position 0"), std::string::npos) << e.what();
  }
  EXPECT_THROW(read_embedding_json(R"({"n": 2, "rotation": [[1], [0]]}x)"), ParseError);
  EXPECT_THROW(read_embedding_json(R"({"n": 3, "rotation": [[1], [0]]})"), InputError);
  EXPECT_THROW(read_embedding_json(R"({"schema_version": 9, "n": 2, "rotation": [[1], [0]]})"), InputError);
  EXPECT_THROW(read_embedding_json(R"([1, 2])"), InputError);
}

TEST(AdjacencyJson, RoundTripAndEmbeddingFallback) {
  const AbstractGraph g = oracle::petersen();
  EXPECT_EQ(read_graph_json(adjacency_json(g).dump()), g);
  EXPECT_EQ(read_graph_json(embedding_json(k4()).dump()), k4().graph());
}

TEST(Dot, ListsEveryEdge) {
  const std::string dot = to_dot(k4().graph());
  EXPECT_EQ(dot.rfind("graph G {", 0), 0u);
  EXPECT_NE(dot.find("2 -- 3;"), std::string::npos);
}
