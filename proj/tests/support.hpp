#pragma once
// Hand-built drawings and brute-force oracles shared by the tests.

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "oneplane/embedding.hpp"

namespace testing_support {

using namespace oneplane;

struct Point {
  double x, y;
};

// Crossing-free drawing of a straight-line embedding; neighbours are sorted
// counterclockwise by angle.
inline Drawing straight_line(const std::vector<Point>& pts, const std::vector<std::pair<int, int>>& pairs) {
  Graph g = make_graph(static_cast<int>(pts.size()), pairs);
  std::vector<std::vector<int>> rot(g.n);
  for (const Edge& e : g.edges) {
    rot[e.u].push_back(e.v);
    rot[e.v].push_back(e.u);
  }
  for (int v = 0; v < g.n; ++v)
    std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) {
      return std::atan2(pts[a].y - pts[v].y, pts[a].x - pts[v].x) <
             std::atan2(pts[b].y - pts[v].y, pts[b].x - pts[v].x);
    });
  return planar_drawing(g, rot);
}

// Adds, for each listed edge (a,b) of a crossing-free triangulated drawing,
// the edge between the two apexes of its faces, drawn across (a,b).
inline Drawing with_kites(const Drawing& planar, const std::vector<std::pair<int, int>>& crossed) {
  auto rot = vertex_rotation(planar);
  const int n = planar.n();
  auto after = [&](int v, int w) {
    const auto& r = rot[v];
    auto it = std::find(r.begin(), r.end(), w);
    return r[(it - r.begin() + 1) % r.size()];
  };
  Graph g = planar.graph;
  struct K {
    int a, b, c, d;
  };
  std::vector<K> ks;
  for (auto [a, b] : crossed) {
    int c = after(a, b), d = after(b, a);
    ks.push_back({a, b, c, d});
  }
  for (const K& k : ks) {
    auto& rc = rot[k.c];
    rc.insert(std::find(rc.begin(), rc.end(), k.a) + 1, k.d);
    auto& rd = rot[k.d];
    rd.insert(std::find(rd.begin(), rd.end(), k.b) + 1, k.c);
    g.edges.push_back({k.c, k.d});
  }
  EdgeLookup look(g);
  Drawing d;
  d.graph = g;
  d.rotations.resize(n + ks.size());
  for (int v = 0; v < n; ++v)
    for (int w : rot[v]) {
      int e = look.find(v, w);
      d.rotations[v].push_back({e, g.edges[e].u == v ? 0 : 1, -1});
    }
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const K& k = ks[i];
    int ab = look.find(k.a, k.b), cd = look.find(k.c, k.d);
    int c = static_cast<int>(i);
    d.crossings.push_back({ab, cd});
    auto end = [&](int e, int x) { return EdgeEnd{e, g.edges[e].u == x ? 0 : 1, c}; };
    d.rotations[n + c] = {end(ab, k.b), end(cd, k.c), end(ab, k.a), end(cd, k.d)};
  }
  return d;
}

inline Drawing k4() {
  return straight_line({{0, 0}, {4, 0}, {2, 4}, {2, 1.5}}, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
}

// K5 minus the edge {2,4}.
inline Drawing k5_minus_edge() {
  return straight_line({{0, 0}, {4, 0}, {2, 4}, {2, 2}, {2, 0.8}},
                       {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {3, 4}});
}

// K5 with {2,4} drawn across {0,1}.
inline Drawing k5() { return with_kites(k5_minus_edge(), {{0, 1}}); }

inline Drawing octahedron() {
  return straight_line({{0, 0}, {8, 0}, {4, 8}, {4, 1.5}, {5.5, 4}, {2.5, 4}},
                       {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {0, 5}});
}

// Double wheel on a k-cycle: rim 0..k-1, hubs k (inside) and k+1 (outside).
inline Drawing bipyramid(int k) {
  std::vector<std::vector<int>> rot(k + 2);
  for (int i = 0; i < k; ++i) {
    rot[i] = {(i + 1) % k, k, (i + k - 1) % k, k + 1};
    rot[k].push_back(i);
    rot[k + 1].insert(rot[k + 1].begin(), i);
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) pairs.insert(pairs.end(), {{i, (i + 1) % k}, {i, k}, {i, k + 1}});
  return planar_drawing(make_graph(k + 2, pairs), rot);
}

// Vertex inserted into a region whose corners are all vertices, joined to
// each corner.
inline Drawing stack_into(const Drawing& d, const Region& r) {
  const int z = d.n();
  Drawing out;
  out.graph = d.graph;
  out.graph.n = z + 1;
  out.crossings = d.crossings;
  auto shift = [&](int node) { return node < z ? node : node + 1; };
  out.rotations.assign(out.num_nodes(), {});
  for (int x = 0; x < d.num_nodes(); ++x) out.rotations[shift(x)] = d.rotations[x];
  const int k = static_cast<int>(r.corners.size());
  std::vector<EdgeEnd> zr;
  for (int i = 0; i < k; ++i) {
    int v = r.corners[i];
    const EdgeEnd& in = r.boundary[(i + k - 1) % k];  // edge from the previous corner
    EdgeEnd at_v{in.edge, 1 - in.side, -1};
    int e = out.graph.m();
    out.graph.edges.push_back({std::min(v, z), std::max(v, z)});
    auto& rv = out.rotations[v];
    rv.insert(std::find(rv.begin(), rv.end(), at_v) + 1, EdgeEnd{e, v < z ? 0 : 1, -1});
    zr.insert(zr.begin(), EdgeEnd{e, 1, -1});
  }
  out.rotations[z] = zr;
  return out;
}

// Random simple graph with edge probability p.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) pairs.push_back({u, v});
  return make_graph(n, pairs);
}

inline Graph complete(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  return make_graph(n, pairs);
}

inline Graph petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i) {
    pairs.push_back({i, (i + 1) % 5});
    pairs.push_back({i, i + 5});
    pairs.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return make_graph(10, pairs);
}

inline std::vector<std::vector<char>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<char>> a(g.n, std::vector<char>(g.n, 0));
  for (const Edge& e : g.edges) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

// All triangles as sorted triples, O(n^3).
inline std::set<std::array<int, 3>> brute_triangles(const Graph& g) {
  auto a = adjacency_matrix(g);
  std::set<std::array<int, 3>> out;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      for (int k = j + 1; k < g.n; ++k)
        if (a[i][j] && a[i][k] && a[j][k]) out.insert({i, j, k});
  return out;
}

// Maximum matching size by recursion over vertex subsets (n <= 20).
inline int brute_matching(const Graph& g) {
  auto a = adjacency_matrix(g);
  std::vector<int> memo(1u << g.n, -1);
  std::function<int(unsigned)> best = [&](unsigned mask) -> int {
    if (mask == 0) return 0;
    if (memo[mask] >= 0) return memo[mask];
    int v = __builtin_ctz(mask);
    unsigned rest = mask & ~(1u << v);
    int r = best(rest);
    for (int w = 0; w < g.n; ++w)
      if ((rest >> w & 1) && a[v][w]) r = std::max(r, 1 + best(rest & ~(1u << w)));
    return memo[mask] = r;
  };
  return best((1u << g.n) - 1);
}

inline bool connected_without(const Graph& g, unsigned removed) {
  auto a = adjacency_matrix(g);
  int start = -1, left = 0;
  for (int v = 0; v < g.n; ++v)
    if (!(removed >> v & 1)) {
      ++left;
      if (start < 0) start = v;
    }
  if (left <= 1) return true;
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w = 0; w < g.n; ++w)
      if (a[u][w] && !seen[w] && !(removed >> w & 1)) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == left;
}

// Smallest vertex set whose removal disconnects the graph; n - 1 for
// complete graphs. Exhaustive over subsets (n <= 16).
inline int brute_connectivity(const Graph& g) {
  for (int size = 0; size <= g.n - 2; ++size) {
    for (unsigned mask = 0; mask < (1u << g.n); ++mask)
      if (__builtin_popcount(mask) == size && !connected_without(g, mask)) return size;
  }
  return g.n - 1;
}

// Graph isomorphism by backtracking over vertex images (small graphs).
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.m() != b.m()) return false;
  auto A = adjacency_matrix(a), B = adjacency_matrix(b);
  auto adj_a = adjacency(a), adj_b = adjacency(b);
  std::vector<int> map(a.n, -1), used(b.n, 0);
  std::function<bool(int)> go = [&](int v) {
    if (v == a.n) return true;
    for (int w = 0; w < b.n; ++w) {
      if (used[w] || adj_a[v].size() != adj_b[w].size()) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = A[v][u] == B[w][map[u]];
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (go(v + 1)) return true;
      used[w] = 0;
    }
    map[v] = -1;
    return false;
  };
  return go(0);
}

// Hamiltonian cycle existence by trying every ordering with vertex 0 first.
inline bool brute_hamiltonian(const Graph& g) {
  if (g.n < 3) return false;
  auto a = adjacency_matrix(g);
  std::vector<int> perm;
  for (int v = 1; v < g.n; ++v) perm.push_back(v);
  do {
    bool ok = a[0][perm.front()] && a[perm.back()][0];
    for (std::size_t i = 0; ok && i + 1 < perm.size(); ++i) ok = a[perm[i]][perm[i + 1]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace testing_support
