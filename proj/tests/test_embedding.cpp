#include <gtest/gtest.h>

#include "oneplane/embedding.hpp"
#include "oneplane/generators.hpp"
#include "support.hpp"

using namespace oneplane;
using namespace testing_support;

namespace {

int euler(const Drawing& d) {
  Embedded em = embed(d);
  return em.sk.num_nodes() - (em.sk.m + 2 * em.sk.c) + static_cast<int>(em.fs.faces.size());
}

}  // namespace

TEST(Embedding, HandBuiltDrawingsAreValid) {
  for (const Drawing& d : {k4(), k5_minus_edge(), k5(), octahedron(), bipyramid(4), bipyramid(9)}) {
    EXPECT_TRUE(validate_drawing(d).empty());
    EXPECT_EQ(euler(d), 2);
    EXPECT_TRUE(is_triangulated(d));
  }
}

TEST(Embedding, RegionCounts) {
  EXPECT_EQ(trace_regions(octahedron()).size(), 8u);
  // one kite turns two triangles into four
  EXPECT_EQ(trace_regions(with_kites(octahedron(), {{0, 1}})).size(), 10u);
  EXPECT_EQ(trace_regions(k5()).size(), 8u);
  EXPECT_EQ(trace_regions(k4()).size(), 4u);
}

TEST(Embedding, KiteOnOctahedronFromGenerator) {
  Drawing d = gen_kite_augmented(3, 6, 1);
  EXPECT_TRUE(validate_drawing(d).empty());
  EXPECT_EQ(d.num_crossings(), 1);
  EXPECT_EQ(trace_regions(d).size(), 10u);
  for (const Region& r : trace_regions(d)) EXPECT_EQ(r.corners.size(), 3u);
}

TEST(Embedding, RegionCornersIncludeCrossings) {
  Drawing d = k5();
  int with_crossing = 0;
  for (const Region& r : trace_regions(d)) {
    ASSERT_EQ(r.corners.size(), 3u);
    for (int x : r.corners)
      if (x >= d.n()) ++with_crossing;
  }
  EXPECT_EQ(with_crossing, 4);
}

TEST(Embedding, EdgeCrossedTwiceRejected) {
  Drawing d = with_kites(octahedron(), {{0, 1}});
  d.crossings.push_back({d.crossings[0].a, 3});
  d.rotations.push_back(d.rotations.back());
  EXPECT_FALSE(validate_drawing(d).empty());
}

TEST(Embedding, AdjacentEdgesMayNotCross) {
  Drawing d = with_kites(octahedron(), {{0, 1}});
  Drawing bad = d;
  // second edge of the crossing replaced by one sharing an endpoint
  EdgeLookup look(d.graph);
  bad.crossings[0].b = look.find(0, 3);
  EXPECT_FALSE(validate_drawing(bad).empty());
}

TEST(Embedding, MissingRotationEntryRejected) {
  Drawing d = octahedron();
  d.rotations[2].pop_back();
  EXPECT_FALSE(validate_drawing(d).empty());
  EXPECT_THROW(embed(d), Error);
}

TEST(Embedding, NonSphericalRotationRejected) {
  Drawing d = octahedron();
  std::swap(d.rotations[0][0], d.rotations[0][1]);
  auto problems = validate_drawing(d);
  ASSERT_FALSE(problems.empty());
  EXPECT_NE(problems.front().find("V - E + F"), std::string::npos);
}

TEST(Embedding, SelfLoopAndDuplicateRejected) {
  Drawing d = k4();
  d.graph.edges[0] = {1, 1};
  EXPECT_FALSE(validate_drawing(d).empty());
  Drawing e = k4();
  e.graph.edges[1] = e.graph.edges[0];
  EXPECT_FALSE(validate_drawing(e).empty());
}

TEST(Embedding, MissingEdgeMakesQuadrilateral) {
  Drawing d = octahedron();
  // drop edge {3,4}; its two triangles merge
  Graph g = d.graph;
  EdgeLookup look(g);
  int e = look.find(3, 4);
  g.edges.erase(g.edges.begin() + e);
  auto rot = vertex_rotation(d);
  for (int v : {3, 4}) rot[v].erase(std::find(rot[v].begin(), rot[v].end(), 7 - v));
  Drawing q = planar_drawing(g, rot);
  EXPECT_TRUE(validate_drawing(q).empty());
  EXPECT_FALSE(is_triangulated(q));
  EXPECT_EQ(trace_regions(q).size(), 7u);
}

TEST(Embedding, VertexRotationRoundTrip) {
  Drawing d = octahedron();
  EXPECT_EQ(planar_drawing(d.graph, vertex_rotation(d)), d);
}

TEST(Embedding, DensityClasses) {
  // cube plus both diagonals of every face: 24 = 4n - 8 edges
  std::vector<std::pair<int, int>> cube{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
                                        {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
  std::vector<std::array<int, 4>> faces{{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 5, 4},
                                        {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}};
  for (auto f : faces) {
    cube.push_back({f[0], f[2]});
    cube.push_back({f[1], f[3]});
  }
  EXPECT_EQ(classify_density(make_graph(8, cube)), Density::optimal);
  EXPECT_EQ(classify_density(complete(7)), Density::exceeds_bound);
  EXPECT_EQ(classify_density(complete(6)), Density::below_optimal);
  EXPECT_THROW(classify_density(complete(2)), Error);
}

TEST(Embedding, StackedVertexIsValid) {
  Drawing d = octahedron();
  Drawing s = stack_into(d, trace_regions(d)[0]);
  EXPECT_TRUE(validate_drawing(s).empty());
  EXPECT_TRUE(is_triangulated(s));
  EXPECT_EQ(s.n(), 7);
  EXPECT_EQ(s.m(), 15);
}
