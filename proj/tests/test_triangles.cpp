#include <gtest/gtest.h>

#include <random>

#include "oneplane/generators.hpp"
#include "oneplane/triangles.hpp"
#include "support.hpp"

using namespace oneplane;
using namespace testing_support;

namespace {

std::set<std::array<int, 3>> listed(const TriangleIndex& idx) {
  std::set<std::array<int, 3>> out;
  for (int t = 0; t < idx.num_triangles(); ++t) out.insert(idx.triangle(t).v);
  return out;
}

}  // namespace

TEST(Triangles, MatchesCubicEnumeration) {
  std::mt19937_64 rng(11);
  for (int n : {3, 5, 10, 25, 40, 60})
    for (double p : {0.1, 0.3, 0.6, 1.0}) {
      Graph g = random_graph(n, p, rng);
      TriangleIndex idx(g);
      auto brute = brute_triangles(g);
      EXPECT_EQ(listed(idx), brute) << "n=" << n << " p=" << p;
      EXPECT_EQ(idx.num_triangles(), static_cast<int>(brute.size()));
    }
}

TEST(Triangles, EdgeIdsAreConsistent) {
  std::mt19937_64 rng(5);
  Graph g = random_graph(30, 0.4, rng);
  TriangleIndex idx(g);
  for (int t = 0; t < idx.num_triangles(); ++t) {
    const Triangle& tri = idx.triangle(t);
    EXPECT_TRUE(std::is_sorted(tri.v.begin(), tri.v.end()));
    EXPECT_EQ(g.edges[tri.e[0]], (Edge{std::min(tri.v[0], tri.v[1]), std::max(tri.v[0], tri.v[1])}));
    auto [u1, v1] = g.edges[tri.e[1]];
    EXPECT_EQ(std::minmax(u1, v1), std::minmax(tri.v[0], tri.v[2]));
    auto [u2, v2] = g.edges[tri.e[2]];
    EXPECT_EQ(std::minmax(u2, v2), std::minmax(tri.v[1], tri.v[2]));
  }
}

TEST(Triangles, PerEdgeListsUnderDeletion) {
  std::mt19937_64 rng(17);
  Graph g = random_graph(40, 0.35, rng);
  TriangleIndex idx(g);
  std::vector<char> gone(g.m(), 0);
  std::vector<int> order(g.m());
  for (int e = 0; e < g.m(); ++e) order[e] = e;
  std::shuffle(order.begin(), order.end(), rng);
  for (int step = 0; step < g.m() / 2; ++step) {
    int e = order[step];
    idx.delete_edge(e);
    gone[e] = 1;
    if (step % 25) continue;
    // recount from scratch on the surviving edges
    Graph h;
    h.n = g.n;
    for (int f = 0; f < g.m(); ++f)
      if (!gone[f]) h.edges.push_back(g.edges[f]);
    auto brute = brute_triangles(h);
    EXPECT_EQ(idx.num_alive_triangles(), static_cast<int>(brute.size()));
    for (int f = 0; f < g.m(); ++f) {
      if (gone[f]) {
        EXPECT_FALSE(idx.edge_alive(f));
        continue;
      }
      auto [u, v] = g.edges[f];
      int expect = 0;
      for (const auto& t : brute)
        if (std::count(t.begin(), t.end(), u) && std::count(t.begin(), t.end(), v)) ++expect;
      EXPECT_EQ(idx.alive_count(f), expect);
      EXPECT_EQ(static_cast<int>(idx.triangles_of_edge(f).size()), expect);
    }
  }
}

TEST(Triangles, DeletedEdgeQueriesThrow) {
  TriangleIndex idx(complete(4));
  idx.delete_edge(0);
  EXPECT_THROW(idx.triangles_of_edge(0), Error);
  EXPECT_THROW(idx.delete_edge(0), Error);
  EXPECT_THROW(idx.triangles_of_edge(99), Error);
}

TEST(Triangles, CompleteGraphCount) {
  TriangleIndex idx(complete(12));
  EXPECT_EQ(idx.num_triangles(), 220);
  for (int e = 0; e < 66; ++e) EXPECT_EQ(idx.alive_count(e), 10);
}

TEST(Triangles, WorkStaysLinearOnTriangulations) {
  // listing work per edge is bounded by the degeneracy, not by n
  for (int n : {2000, 8000}) {
    Drawing d = gen_kite_augmented(2, n, n / 4);
    TriangleIndex idx(d.graph);
    EXPECT_LT(idx.work(), 10ull * d.m());
  }
}
