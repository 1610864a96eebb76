#include <gtest/gtest.h>

#include "oneplane/connectivity.hpp"
#include "oneplane/generators.hpp"
#include "oneplane/planarize.hpp"
#include "support.hpp"

using namespace oneplane;
using namespace testing_support;

namespace {

void expect_good_output(const Drawing& in, const PlanarizeResult& r) {
  const Drawing& out = r.drawing;
  ASSERT_TRUE(validate_drawing(out).empty());
  EXPECT_EQ(out.num_crossings(), 0);
  EXPECT_EQ(out.n(), in.n());
  EXPECT_EQ(out.m(), 3 * in.n() - 6);
  EXPECT_EQ(out.m(), in.m() - in.num_crossings());
  EXPECT_TRUE(is_triangulated(out));
  EXPECT_TRUE(separating_triangles_planar(out).empty());
  // spanning subgraph with the edge map as witness
  for (int e = 0; e < in.m(); ++e)
    if (r.edge_map[e] >= 0) {
      EXPECT_EQ(out.graph.edges[r.edge_map[e]], in.graph.edges[e]);
    }
}

}  // namespace

TEST(Planarize, OctahedronKiteDropsTheKite) {
  Drawing d = with_kites(octahedron(), {{0, 1}});
  auto r = planarize(d);
  expect_good_output(d, r);
  ASSERT_EQ(r.trace.size(), 1u);
  // the kite edge has four triangles, the crossed edge two, so the crossed
  // edge is scanned; both its triangles have apexes on the kite edge
  EXPECT_EQ(r.trace[0].decision.rule, Rule::case1);
  const Edge& gone = d.graph.edges[r.trace[0].decision.deleted];
  EXPECT_EQ(std::minmax(gone.u, gone.v), std::minmax(2, 3));
  EXPECT_EQ(r.drawing, octahedron());
}

TEST(Planarize, IdentityWithoutCrossings) {
  Drawing d = gen_kite_augmented(4, 60, 0);
  auto r = planarize(d);
  EXPECT_EQ(r.drawing, d);
  EXPECT_TRUE(r.trace.empty());
}

TEST(Planarize, KiteInstances) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed)
    for (int n : {8, 12, 30, 100, 400}) {
      Drawing d = gen_kite_augmented(seed, n, n / 4);
      auto r = planarize(d);
      expect_good_output(d, r);
      if (n <= 100) {
        EXPECT_GE(vertex_connectivity(r.drawing.graph), 4);
      }
    }
}

TEST(Planarize, WitnessTriangleDeletesTheScannedEdge) {
  // octahedron with a vertex stacked into 0-1-2, kites across 0-1 and 4-5;
  // 0-1 is scanned and 0-1-2 is a witness
  Drawing oct = octahedron();
  Drawing d = with_kites(stack_into(oct, trace_regions(oct)[0]), {{0, 1}, {4, 5}});
  ASSERT_TRUE(validate_drawing(d).empty());
  auto r = planarize(d);
  expect_good_output(d, r);
  ASSERT_EQ(r.trace.size(), 2u);
  const Decision& first = r.trace[0].decision;
  EXPECT_EQ(first.rule, Rule::case2);
  const Edge& gone = d.graph.edges[first.deleted];
  EXPECT_EQ(std::minmax(gone.u, gone.v), std::minmax(0, 1));
  ASSERT_TRUE(first.witness);
  std::array<int, 3> w = *first.witness;
  std::sort(w.begin(), w.end());
  EXPECT_EQ(w, (std::array<int, 3>{0, 1, 2}));
  EXPECT_EQ(r.trace[1].decision.rule, Rule::case1);
  EXPECT_GE(vertex_connectivity(r.drawing.graph), 4);
}

TEST(Planarize, DecisionsFollowTheRule) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Drawing d = gen_kite_augmented(seed, 80, 20);
    PlanarizeState st(d);
    for (int c = 0; c < d.num_crossings(); ++c) {
      int a = d.crossings[c].a, b = d.crossings[c].b;
      int ca = st.index().alive_count(a), cb = st.index().alive_count(b);
      int scanned = (ca < cb || (ca == cb && a < b)) ? a : b;
      Decision dec = st.choose_deletion(c);
      EXPECT_TRUE((dec.deleted == a && dec.kept == b) || (dec.deleted == b && dec.kept == a));
      if (dec.rule == Rule::case2) {
        EXPECT_EQ(dec.deleted, scanned);
        ASSERT_TRUE(dec.witness);
        auto w = *dec.witness;
        auto [u, v] = d.graph.edges[scanned];
        EXPECT_TRUE(std::count(w.begin(), w.end(), u) && std::count(w.begin(), w.end(), v));
        auto [p, q] = d.graph.edges[dec.kept];
        for (int x : w) {
          EXPECT_NE(x, p);
          EXPECT_NE(x, q);
        }
      } else {
        EXPECT_EQ(dec.kept, scanned);
        EXPECT_FALSE(dec.witness);
      }
      st.apply(c, dec);
    }
  }
}

TEST(Planarize, EveryIntermediateStateStaysClean) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Drawing d = gen_kite_augmented(seed, 50, 12);
    int steps = 0;
    planarize(d, [&](int, const PlanarizeState& st) {
      ++steps;
      Drawing snap = st.snapshot();
      ASSERT_TRUE(validate_drawing(snap).empty());
      EXPECT_TRUE(is_triangulated(snap));
      EXPECT_TRUE(uncrossed_separating_triangles(snap).empty());
    });
    EXPECT_EQ(steps, 12);
  }
}

TEST(Planarize, Preconditions) {
  EXPECT_THROW(planarize(gen_double_stellation(8).drawing), Error);
  try {
    planarize(gen_double_stellation(8).drawing);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "not-triangulated");
  }
  Drawing oct = octahedron();
  Drawing s = stack_into(oct, trace_regions(oct)[1]);
  try {
    planarize(s);
    FAIL() << "expected a separating triangle";
  } catch (const WitnessError& e) {
    EXPECT_EQ(e.code(), "separating-triangle");
    EXPECT_TRUE(verify_witness(s.graph, e.witness()));
  }
  EXPECT_THROW(planarize(k5()), Error);
}

TEST(Planarize, ResolvedCrossingCannotRepeat) {
  Drawing d = with_kites(octahedron(), {{0, 1}});
  PlanarizeState st(d);
  st.apply(0, st.choose_deletion(0));
  EXPECT_THROW(st.choose_deletion(0), Error);
  EXPECT_THROW(st.choose_deletion(5), Error);
}
