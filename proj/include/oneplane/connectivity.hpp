#pragma once
// Separating triangles, vertex connectivity, and the 4-connectivity
// characterization for triangulated 1-plane drawings.

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "oneplane/embedding.hpp"
#include "oneplane/triangles.hpp"

namespace oneplane {

struct SeparationWitness {
  enum class Kind { triangle, vertex_cut };
  Kind kind = Kind::vertex_cut;
  std::vector<int> vertices;  // the cutting set
  std::vector<int> side_a;
  std::vector<int> side_b;
};

class WitnessError : public Error {
 public:
  WitnessError(std::string code, const std::string& what, SeparationWitness w)
      : Error(std::move(code), what), witness_(std::move(w)) {}
  const SeparationWitness& witness() const noexcept { return witness_; }

 private:
  SeparationWitness witness_;
};

// True iff the cutting set is disjoint from both sides, both sides are
// nonempty and disjoint, and no path avoids the cut between them.
inline bool verify_witness(const Graph& g, const SeparationWitness& w) {
  if (w.side_a.empty() || w.side_b.empty()) return false;
  std::vector<char> tag(g.n, 0);
  for (int v : w.vertices) {
    if (v < 0 || v >= g.n || tag[v]) return false;
    tag[v] = 1;
  }
  for (int v : w.side_a) {
    if (v < 0 || v >= g.n || tag[v]) return false;
    tag[v] = 2;
  }
  for (int v : w.side_b) {
    if (v < 0 || v >= g.n || tag[v]) return false;
    tag[v] = 3;
  }
  auto adj = adjacency(g);
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{w.side_a.front()};
  seen[w.side_a.front()] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (tag[u] == 3) return false;
    for (int x : adj[u])
      if (!seen[x] && tag[x] != 1) {
        seen[x] = 1;
        stack.push_back(x);
      }
  }
  return true;
}

namespace detail {

// Whether the uncrossed triangle t bounds a region. Such a region contains
// a dart of each of t's edges, so the two darts of t.e[0] suffice.
inline bool is_facial(const Embedded& em, const Triangle& t) {
  for (int dart : {2 * t.e[0], 2 * t.e[0] + 1}) {
    const auto& f = em.fs.faces[em.fs.face_of[dart]];
    if (f.size() != 3) continue;
    bool match = true;
    for (int x : f) {
      int v = em.sk.node[x];
      if (v != t.v[0] && v != t.v[1] && v != t.v[2]) match = false;
    }
    if (match) return true;
  }
  return false;
}

// Vertices on the two sides of the closed curve formed by uncrossed edges
// `es`, found by a dual traversal that may not step across those edges.
inline std::pair<std::vector<int>, std::vector<int>> curve_sides(const Embedded& em,
                                                                 const std::array<int, 3>& es,
                                                                 const std::array<int, 3>& on_curve) {
  const Skeleton& s = em.sk;
  const auto& fs = em.fs;
  std::vector<char> side(fs.faces.size(), 0);
  auto barred = [&](int dart) {
    int e = dart < 2 * s.m ? dart / 2 : -1;
    return e == es[0] || e == es[1] || e == es[2];
  };
  auto flood = [&](int start, char label) {
    std::vector<int> q{start};
    side[start] = label;
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (int dart : fs.faces[q[i]]) {
        if (barred(dart)) continue;
        int f = fs.face_of[s.twin[dart]];
        if (!side[f]) {
          side[f] = label;
          q.push_back(f);
        }
      }
    }
  };
  flood(fs.face_of[2 * es[0]], 1);
  int other = fs.face_of[2 * es[0] + 1];
  if (!side[other]) flood(other, 2);
  std::vector<char> mark(s.n, 0);
  for (int v : on_curve) mark[v] = 3;
  std::vector<int> a, b;
  for (std::size_t f = 0; f < fs.faces.size(); ++f) {
    for (int dart : fs.faces[f]) {
      int x = s.node[dart];
      if (x >= s.n || mark[x]) continue;
      mark[x] = side[f];
      (side[f] == 1 ? a : b).push_back(x);
    }
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return {a, b};
}

inline bool all_uncrossed(const Skeleton& s, const Triangle& t) {
  return s.crossing_of[t.e[0]] < 0 && s.crossing_of[t.e[1]] < 0 && s.crossing_of[t.e[2]] < 0;
}

inline std::vector<SeparationWitness> separating_uncrossed(const Drawing& d, const Embedded& em) {
  TriangleIndex idx(d.graph);
  std::vector<SeparationWitness> out;
  for (int t = 0; t < idx.num_triangles(); ++t) {
    const Triangle& tri = idx.triangle(t);
    if (!all_uncrossed(em.sk, tri) || is_facial(em, tri)) continue;
    SeparationWitness w;
    w.kind = SeparationWitness::Kind::triangle;
    w.vertices.assign(tri.v.begin(), tri.v.end());
    auto [a, b] = curve_sides(em, tri.e, tri.v);
    // a non-facial triangle always has vertices on both sides; keep the
    // check anyway so the witness is never reported hollow
    if (a.empty() || b.empty()) continue;
    w.side_a = std::move(a);
    w.side_b = std::move(b);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace detail

// First uncrossed triangle that does not bound a region, if any. Linear
// time; in a simple 1-plane drawing such a triangle is separating.
inline std::optional<std::array<int, 3>> find_uncrossed_separating_triangle(const Embedded& em,
                                                                           const TriangleIndex& idx) {
  for (int t = 0; t < idx.num_triangles(); ++t) {
    const Triangle& tri = idx.triangle(t);
    if (detail::all_uncrossed(em.sk, tri) && !detail::is_facial(em, tri)) return tri.v;
  }
  return std::nullopt;
}

inline std::optional<std::array<int, 3>> find_uncrossed_separating_triangle(const Drawing& d,
                                                                           const Embedded& em) {
  return find_uncrossed_separating_triangle(em, TriangleIndex(d.graph));
}

// Witness for an uncrossed triangle, with the vertices on each side.
inline SeparationWitness triangle_witness(const Drawing& d, const Embedded& em,
                                          const std::array<int, 3>& tri) {
  EdgeLookup look(d.graph);
  std::array<int, 3> es{look.find(tri[0], tri[1]), look.find(tri[0], tri[2]), look.find(tri[1], tri[2])};
  SeparationWitness w;
  w.kind = SeparationWitness::Kind::triangle;
  w.vertices.assign(tri.begin(), tri.end());
  auto sides = detail::curve_sides(em, es, tri);
  w.side_a = std::move(sides.first);
  w.side_b = std::move(sides.second);
  return w;
}

inline std::vector<SeparationWitness> uncrossed_separating_triangles(const Drawing& d) {
  Embedded em = embed(d);
  return detail::separating_uncrossed(d, em);
}

inline std::vector<SeparationWitness> separating_triangles_planar(const Drawing& d) {
  if (d.num_crossings() != 0) throw Error("has-crossings", "drawing has crossings");
  Embedded em = embed(d);
  if (!is_triangulated(em)) throw Error("not-triangulated", "drawing is not triangulated");
  return detail::separating_uncrossed(d, em);
}

// Unit-capacity flow on the vertex-split digraph: v_in = 2v, v_out = 2v+1.
class SplitFlow {
 public:
  explicit SplitFlow(const Graph& g) : n_(g.n), head_(2 * g.n, -1) {
    for (int v = 0; v < n_; ++v) arc(2 * v, 2 * v + 1);
    for (const Edge& e : g.edges) {
      arc(2 * e.u + 1, 2 * e.v);
      arc(2 * e.v + 1, 2 * e.u);
    }
    cap0_ = cap_;
  }

  // Number of internally vertex-disjoint s-t paths, capped at `limit`.
  int paths(int s, int t, int limit) {
    cap_ = cap0_;
    src_ = 2 * s + 1;
    int flow = 0;
    std::vector<int> via(2 * n_);
    std::vector<int> q;
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      q.assign(1, src_);
      via[src_] = -2;
      int sink = 2 * t;
      for (std::size_t i = 0; i < q.size() && via[sink] == -1; ++i) {
        int x = q[i];
        for (int a = head_[x]; a >= 0; a = next_[a]) {
          if (cap_[a] > 0 && via[to_[a]] == -1) {
            via[to_[a]] = a;
            q.push_back(to_[a]);
          }
        }
      }
      if (via[sink] == -1) break;
      for (int x = sink; x != src_;) {
        int a = via[x];
        --cap_[a];
        ++cap_[a ^ 1];
        x = to_[a ^ 1];
      }
      ++flow;
    }
    return flow;
  }

  // After a maximum flow: split vertices whose in-node is reachable in the
  // residual graph but whose out-node is not.
  std::vector<int> cut_vertices() const {
    std::vector<char> seen(2 * n_, 0);
    std::vector<int> q{src_};
    seen[src_] = 1;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (int a = head_[q[i]]; a >= 0; a = next_[a])
        if (cap_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = 1;
          q.push_back(to_[a]);
        }
    std::vector<int> cut;
    for (int v = 0; v < n_; ++v)
      if (seen[2 * v] && !seen[2 * v + 1]) cut.push_back(v);
    return cut;
  }

 private:
  void arc(int a, int b) {
    for (auto [x, y, c] : {std::array<int, 3>{a, b, 1}, std::array<int, 3>{b, a, 0}}) {
      to_.push_back(y);
      cap_.push_back(c);
      next_.push_back(head_[x]);
      head_[x] = static_cast<int>(to_.size()) - 1;
    }
  }

  int n_;
  int src_ = 0;
  std::vector<int> head_, next_, to_, cap_, cap0_;
};

namespace detail {

inline SeparationWitness cut_witness(const Graph& g, std::vector<int> cut, int s) {
  SeparationWitness w;
  w.kind = SeparationWitness::Kind::vertex_cut;
  std::sort(cut.begin(), cut.end());
  std::vector<char> tag(g.n, 0);
  for (int v : cut) tag[v] = 1;
  auto adj = adjacency(g);
  std::vector<int> q{s};
  tag[s] = 2;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (int x : adj[q[i]])
      if (!tag[x]) {
        tag[x] = 2;
        q.push_back(x);
      }
  for (int v = 0; v < g.n; ++v) {
    if (tag[v] == 2) w.side_a.push_back(v);
    else if (tag[v] == 0) w.side_b.push_back(v);
  }
  w.vertices = std::move(cut);
  return w;
}

struct ConnResult {
  int value;                                // min(connectivity, limit)
  std::optional<SeparationWitness> cut;     // a minimum cut when value < limit
};

// Even's algorithm: a minimum cut S misses one of v_0..v_|S|, and every
// vertex on the far side of S has a larger index, so scanning sources
// i <= current bound against all later non-neighbours finds it.
inline ConnResult connectivity(const Graph& g, int limit) {
  const int n = g.n;
  if (n < 2) throw Error("too-small", "connectivity needs n >= 2");
  auto adj = adjacency(g);
  long long m = g.m();
  if (m == 1LL * n * (n - 1) / 2) return {std::min(n - 1, limit), std::nullopt};
  int best = limit;
  std::optional<SeparationWitness> cut;
  int minv = 0;
  for (int v = 1; v < n; ++v)
    if (adj[v].size() < adj[minv].size()) minv = v;
  int delta = static_cast<int>(adj[minv].size());
  if (delta < best) {
    best = delta;
    cut = cut_witness(g, adj[minv], minv);
  }
  SplitFlow flow(g);
  EdgeLookup look(g);
  for (int i = 0; i <= best && i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (look.adjacent(i, j)) continue;
      int f = flow.paths(i, j, best);
      if (f < best) {
        best = f;
        cut = cut_witness(g, flow.cut_vertices(), i);
      }
    }
  }
  if (best >= limit) cut.reset();
  return {best, std::move(cut)};
}

}  // namespace detail

inline int vertex_connectivity(const Graph& g) { return detail::connectivity(g, g.n).value; }

inline std::optional<SeparationWitness> minimum_vertex_cut(const Graph& g) {
  return detail::connectivity(g, g.n).cut;
}

struct KConnectivity {
  bool connected = false;
  std::optional<SeparationWitness> witness;
};

// Connectivity >= k in the convention where K_n is (n-1)-connected.
inline KConnectivity is_k_connected(const Graph& g, int k) {
  if (k <= 0) return {true, std::nullopt};
  if (g.n < 2) return {k <= 0, std::nullopt};
  auto r = detail::connectivity(g, k);
  if (r.value >= k) return {true, std::nullopt};
  return {false, std::move(r.cut)};
}

struct CorollaryReport {
  bool no_uncrossed_separating_triangle = false;
  bool four_connected = false;
  bool equivalent() const { return no_uncrossed_separating_triangle == four_connected; }
};

inline CorollaryReport corollary_check(const Drawing& d) {
  Embedded em = embed(d);
  if (d.n() < 6) throw Error("out-of-scope", "the characterization needs n >= 6");
  if (!is_triangulated(em)) throw Error("not-triangulated", "drawing is not triangulated");
  CorollaryReport r;
  r.no_uncrossed_separating_triangle = !find_uncrossed_separating_triangle(d, em).has_value();
  r.four_connected = is_k_connected(d.graph, 4).connected;
  return r;
}

}  // namespace oneplane
