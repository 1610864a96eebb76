#pragma once
// Generated 1-plane drawings: three non-Hamiltonian families with their
// expected-property manifests, and random kite-augmented triangulations.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "oneplane/embedding.hpp"

namespace oneplane {

struct Manifest {
  std::string family;
  std::map<std::string, long long> values;
  std::map<std::string, std::vector<int>> sets;
};

struct FamilyInstance {
  Drawing drawing;
  Manifest manifest;
};

// Wall instance. `w` and `w_prime` are plane drawings on the ring vertices
// 0..20k-1 (same ids as in the full drawing). In `w_s` and `w_prime_s` the
// ring vertices keep their ids and stellation vertex i of the manifest set
// "S" (resp. "S'") becomes 20k+i.
struct WallInstance : FamilyInstance {
  Drawing w, w_prime;
  Graph w_s, w_prime_s;
};

namespace detail {

// Straight-line drawings on a vertical cylinder: x is periodic, y grows
// upward, and up to two cap vertices sit at y = +inf / -inf. Rotations come
// from edge directions, so the drawing is only as good as the coordinates.
class StripBuilder {
 public:
  explicit StripBuilder(double period) : period_(period) {}

  int vertex(double x, double y) {
    pos_.push_back({x, y});
    cap_.push_back(0);
    return n_++;
  }
  int top_cap() { return cap(1); }
  int bottom_cap() { return cap(-1); }

  int edge(int u, int v) {
    g_.edges.push_back({u, v});
    return g_.m() - 1;
  }
  int edge_id(int u, int v) {
    auto it = ids_.find(pair_key(u, v));
    if (it != ids_.end()) return it->second;
    int e = edge(u, v);
    ids_.emplace(pair_key(u, v), e);
    return e;
  }
  void cross(int e, int f) { crossings_.push_back({e, f}); }
  void cross(int a, int b, int c, int d) { cross(edge_id(a, b), edge_id(c, d)); }

  Drawing build() const {
    Drawing d;
    d.graph = g_;
    d.graph.n = n_;
    d.crossings = crossings_;
    const int C = static_cast<int>(crossings_.size());
    d.rotations.resize(n_ + C);
    std::vector<std::vector<std::pair<double, EdgeEnd>>> at(n_ + C);
    for (int e = 0; e < g_.m(); ++e) {
      auto [u, v] = g_.edges[e];
      at[u].push_back({key(u, v), {e, 0, -1}});
      at[v].push_back({key(v, u), {e, 1, -1}});
    }
    for (int c = 0; c < C; ++c)
      for (int e : {crossings_[c].a, crossings_[c].b}) {
        auto [u, v] = g_.edges[e];
        // from the crossing point, side 0 lies in direction v->u
        at[n_ + c].push_back({angle(dir(v, u)), {e, 0, c}});
        at[n_ + c].push_back({angle(dir(u, v)), {e, 1, c}});
      }
    for (int x = 0; x < n_ + C; ++x) {
      auto& list = at[x];
      std::sort(list.begin(), list.end(),
                [](const auto& p, const auto& q) { return p.first < q.first; });
      for (auto& [k, end] : list) d.rotations[x].push_back(end);
    }
    return d;
  }

 private:
  struct Point {
    double x, y;
  };

  int cap(int side) {
    pos_.push_back({0, 0});
    cap_.push_back(side);
    return n_++;
  }

  double wrap(double dx) const {
    if (period_ <= 0) return dx;
    dx = std::fmod(dx, period_);
    if (dx > period_ / 2) dx -= period_;
    if (dx <= -period_ / 2) dx += period_;
    return dx;
  }

  Point dir(int u, int v) const {
    if (cap_[v]) return {0, static_cast<double>(cap_[v])};
    if (cap_[u]) return {0, static_cast<double>(-cap_[u])};
    return {wrap(pos_[v].x - pos_[u].x), pos_[v].y - pos_[u].y};
  }

  static double angle(Point p) { return std::atan2(p.y, p.x); }

  // Sort key of the end of u's edge toward v. Around a cap the ccw order is
  // increasing x for the top cap and decreasing x for the bottom one.
  double key(int u, int v) const {
    if (!cap_[u]) return angle(dir(u, v));
    double x = pos_[v].x;
    if (period_ > 0) x = std::fmod(std::fmod(x, period_) + period_, period_);
    return cap_[u] > 0 ? x : -x;
  }

  double period_;
  int n_ = 0;
  std::vector<Point> pos_;
  std::vector<int> cap_;
  Graph g_;
  std::vector<Crossing> crossings_;
  std::unordered_map<std::uint64_t, int> ids_;
};

inline std::vector<int> iota(int from, int to) {
  std::vector<int> v;
  for (int i = from; i < to; ++i) v.push_back(i);
  return v;
}

}  // namespace detail

// Double wheel H on an (h-2)-cycle, white faces stellated into K4s and black
// faces filled to K6s.
inline FamilyInstance gen_max1p(int h) {
  if (h < 6 || h % 2) throw Error("bad-parameter", "h must be an even integer >= 6");
  const int len = h - 2;
  detail::StripBuilder b(len);
  std::vector<int> cyc;
  for (int i = 0; i < len; ++i) cyc.push_back(b.vertex(i, 0));
  const int north = b.top_cap(), south = b.bottom_cap();
  for (int i = 0; i < len; ++i) {
    b.edge_id(cyc[i], cyc[(i + 1) % len]);
    b.edge_id(north, cyc[i]);
    b.edge_id(south, cyc[i]);
  }
  for (int i = 0; i < len; ++i) {
    const int l = cyc[i], r = cyc[(i + 1) % len];
    for (int side : {1, -1}) {
      const int pole = side > 0 ? north : south;
      const bool white = (i % 2 == 0) == (side > 0);
      if (white) {
        int w = b.vertex(i + 0.5, 0.5 * side);
        b.edge_id(w, l);
        b.edge_id(w, r);
        b.edge_id(w, pole);
        continue;
      }
      int p = b.vertex(i + 0.5, 3.0 * side);
      int q = b.vertex(i + 0.25, 1.0 * side);
      int s = b.vertex(i + 0.75, 1.0 * side);
      for (auto [x, y] : {std::pair{p, q}, {q, s}, {s, p}, {pole, p}, {l, q}, {r, s}}) b.edge_id(x, y);
      b.cross(pole, q, l, p);
      b.cross(l, s, r, q);
      b.cross(r, p, pole, s);
    }
  }
  FamilyInstance out;
  out.drawing = b.build();
  auto& mf = out.manifest;
  mf.family = "max1p";
  mf.values = {{"h", h},
               {"n", 5LL * h - 8},
               {"unmatched_lower_bound", h - 4}};
  mf.sets["VH"] = detail::iota(0, h);
  mf.sets["C"] = cyc;
  return out;
}

// Nested squares with aligned spokes, every face double-stellated.
inline FamilyInstance gen_double_stellation(int h) {
  if (h < 8 || h % 4) throw Error("bad-parameter", "h must be a multiple of 4 and >= 8");
  const int rings = h / 4;
  detail::StripBuilder b(4);
  auto q = [](int i, int j) { return 4 * i + ((j % 4) + 4) % 4; };
  for (int i = 0; i < rings; ++i)
    for (int j = 0; j < 4; ++j) b.vertex(j, i);
  for (int i = 0; i < rings; ++i)
    for (int j = 0; j < 4; ++j) {
      b.edge_id(q(i, j), q(i, j + 1));
      if (i + 1 < rings) b.edge_id(q(i, j), q(i + 1, j));
    }
  std::vector<int> stell;
  // the two disc faces: cap vertex s plus t next to the ring
  for (int side : {-1, 1}) {
    const int i = side < 0 ? 0 : rings - 1;
    int s = side < 0 ? b.bottom_cap() : b.top_cap();
    int t = b.vertex(0.5, i + 0.5 * side);
    stell.push_back(s);
    stell.push_back(t);
    for (int j = 0; j < 4; ++j) b.edge_id(s, q(i, j));
    b.edge_id(t, q(i, 0));
    b.edge_id(t, q(i, 1));
    b.cross(t, q(i, 2), s, q(i, 1));
    b.cross(t, q(i, 3), s, q(i, 0));
  }
  for (int i = 0; i + 1 < rings; ++i)
    for (int j = 0; j < 4; ++j) {
      int a = q(i, j), bb = q(i, j + 1), c = q(i + 1, j + 1), d = q(i + 1, j);
      int s = b.vertex(j + 0.5, i + 0.5);
      int t = b.vertex(j + 0.5, i + 0.15);
      stell.push_back(s);
      stell.push_back(t);
      for (int x : {a, bb, c, d}) b.edge_id(s, x);
      b.edge_id(t, a);
      b.edge_id(t, bb);
      b.cross(t, c, s, bb);
      b.cross(t, d, s, a);
    }
  FamilyInstance out;
  out.drawing = b.build();
  auto& mf = out.manifest;
  mf.family = "double-stellation";
  mf.values = {{"h", h},
               {"n", 3LL * h - 4},
               {"connectivity", 4},
               {"matching_upper_bound", h}};
  mf.sets["VH"] = detail::iota(0, h);
  std::sort(stell.begin(), stell.end());
  mf.sets["S"] = stell;
  return out;
}

// Two complementary walls on rings C_0..C_2k, stellated and merged with the
// connector edges removed.
inline WallInstance gen_wall(int k) {
  if (k < 1) throw Error("bad-parameter", "k must be >= 1");
  const int top = 2 * k;
  auto size = [&](int g) { return g == 0 || g == top ? 5 : 10; };
  auto xpos = [&](int g, int p) { return size(g) == 5 ? 2.0 * p + 0.5 : 1.0 * p; };
  detail::StripBuilder b(10);
  std::vector<std::vector<int>> ring(top + 1);
  for (int g = 0; g <= top; ++g)
    for (int p = 0; p < size(g); ++p) ring[g].push_back(b.vertex(xpos(g, p), g));
  for (int g = 0; g <= top; ++g)
    for (int p = 0; p < size(g); ++p) b.edge_id(ring[g][p], ring[g][(p + 1) % size(g)]);
  const int ring_edges = 10 + 10 * (top - 1);

  const int x0 = b.bottom_cap(), x2k = b.top_cap();
  for (int v : ring[0]) b.edge_id(x0, v);
  for (int v : ring[top]) b.edge_id(x2k, v);

  // centre at column c of strip g; W owns columns c = g+1 (mod 2)
  std::vector<int> S{x0, x2k}, Sp{x0, x2k};
  std::vector<std::vector<int>> centre(top, std::vector<int>(10));
  auto rel = [](double x, double c) {
    double d = std::fmod(x - c, 10.0);
    if (d > 5) d -= 10;
    if (d <= -5) d += 10;
    return d;
  };
  // neighbours of centre (g, c) on ring r, as ring positions
  auto near = [&](int r, int c) {
    std::vector<int> out;
    for (int p = 0; p < size(r); ++p)
      if (std::abs(rel(xpos(r, p), c)) <= 1.5) out.push_back(p);
    return out;
  };
  for (int g = 0; g < top; ++g)
    for (int c = 0; c < 10; ++c) {
      int v = b.vertex(c, g + 0.5);
      centre[g][c] = v;
      ((c % 2) == ((g + 1) % 2) ? S : Sp).push_back(v);
      for (int r : {g, g + 1})
        for (int p : near(r, c)) b.edge_id(v, ring[r][p]);
    }
  for (int g = 0; g < top; ++g)
    for (int c = 0; c < 10; ++c) {
      int c2 = (c + 1) % 10;
      for (int r : {g, g + 1})
        for (int p : near(r, c))
          for (int p2 : near(r, c2)) {
            double a = rel(xpos(r, p), c), bb = rel(xpos(r, p2), c);
            if (a > bb) b.cross(centre[g][c], ring[r][p], centre[g][c2], ring[r][p2]);
          }
    }

  WallInstance out;
  out.drawing = b.build();
  const int nr = 20 * k;

  // connectors: positions on C_g joined to C_{g+1}
  auto connectors = [&](bool prime) {
    std::vector<std::pair<int, int>> es;
    for (int j = 0; j < 5; ++j) es.push_back({ring[0][j], ring[1][2 * j + (prime ? 1 : 0)]});
    for (int g = 1; g + 1 < top; ++g)
      for (int p = 0; p < 10; ++p)
        if ((p % 2) == ((g + (prime ? 1 : 0)) % 2)) es.push_back({ring[g][p], ring[g + 1][p]});
    for (int j = 0; j < 5; ++j) es.push_back({ring[top - 1][2 * j + (prime ? 0 : 1)], ring[top][j]});
    return es;
  };
  const Graph& full = out.drawing.graph;
  for (bool prime : {false, true}) {
    detail::StripBuilder wb(10);
    for (int g = 0; g <= top; ++g)
      for (int p = 0; p < size(g); ++p) wb.vertex(xpos(g, p), g);
    for (int e = 0; e < ring_edges; ++e) wb.edge(full.edges[e].u, full.edges[e].v);
    for (auto [u, v] : connectors(prime)) wb.edge(u, v);
    Drawing wd = wb.build();

    const auto& stell = prime ? Sp : S;
    std::vector<int> id(full.n, -1);
    for (int v = 0; v < nr; ++v) id[v] = v;
    for (std::size_t i = 0; i < stell.size(); ++i) id[stell[i]] = nr + static_cast<int>(i);
    Graph ws = wd.graph;
    ws.n = nr + static_cast<int>(stell.size());
    for (const Edge& e : full.edges) {
      bool su = e.u >= nr && id[e.u] >= 0, sv = e.v >= nr && id[e.v] >= 0;
      if (su || sv) ws.edges.push_back({id[e.u], id[e.v]});
    }
    (prime ? out.w_prime : out.w) = std::move(wd);
    (prime ? out.w_prime_s : out.w_s) = std::move(ws);
  }

  auto& mf = out.manifest;
  mf.family = "wall";
  mf.values = {{"k", k},
               {"n", 40LL * k + 2},
               {"connectivity", 5},
               {"matching_upper_bound", (40LL * k) / 2},
               {"unmatched_lower_bound", 2},
               {"wall_faces", 10LL * k + 2}};
  mf.sets["S"] = S;
  mf.sets["S'"] = Sp;
  mf.sets["x0"] = {x0};
  mf.sets["x2k"] = {x2k};
  mf.sets["rings"] = detail::iota(0, nr);
  for (int g = 0; g <= top; ++g) mf.sets["C" + std::to_string(g)] = ring[g];
  return out;
}

namespace detail {

// Planar triangulation as ccw faces, with directed edge -> face lookup.
class TriangulationGrower {
 public:
  explicit TriangulationGrower(std::uint64_t seed) : rng_(seed) {
    n_ = 6;
    adj_.resize(6);
    for (auto f : std::vector<std::array<int, 3>>{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
                                                  {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}}) {
      faces_.push_back(f);
      index(static_cast<int>(faces_.size()) - 1);
    }
    for (auto& f : faces_)
      for (int i = 0; i < 3; ++i) {
        int u = f[i], v = f[(i + 1) % 3];
        if (u < v) link(u, v);
      }
  }

  int n() const { return n_; }
  const std::vector<std::array<int, 3>>& faces() const { return faces_; }
  std::mt19937_64& rng() { return rng_; }
  std::uint64_t below(std::uint64_t k) { return rng_() % k; }
  bool adjacent(int u, int v) const { return face_.count(key(u, v)) > 0; }

  // Splits a random edge with a new degree-4 vertex.
  void grow() {
    auto [f, i] = pick();
    auto [a, b, c] = rotate(faces_[f], i);
    int g = face_.at(key(b, a));
    int d = apex(g, b, a);
    unindex(f);
    unindex(g);
    unlink(a, b);
    int v = n_++;
    adj_.emplace_back();
    faces_[f] = {a, v, c};
    faces_[g] = {v, b, c};
    faces_.push_back({b, v, d});
    faces_.push_back({v, a, d});
    for (int x : {f, g, static_cast<int>(faces_.size()) - 2, static_cast<int>(faces_.size()) - 1})
      index(x);
    for (int x : {a, b, c, d}) link(v, x);
  }

  // Random edge flip that keeps min degree 4 and adds no separating triangle.
  void flip() {
    auto [f, i] = pick();
    auto [a, b, c] = rotate(faces_[f], i);
    int g = face_.at(key(b, a));
    int d = apex(g, b, a);
    if (adjacent(c, d) || adj_[a].size() <= 4 || adj_[b].size() <= 4) return;
    const auto& small = adj_[c].size() < adj_[d].size() ? adj_[c] : adj_[d];
    int other = &small == &adj_[c] ? d : c;
    for (int x : small)
      if (x != a && x != b && adjacent(x, other)) return;
    unindex(f);
    unindex(g);
    unlink(a, b);
    faces_[f] = {c, a, d};
    faces_[g] = {d, b, c};
    index(f);
    index(g);
    link(c, d);
  }

  // Third vertex of the face on the left of u->v.
  int apex_of(int u, int v) const { return apex(face_.at(key(u, v)), u, v); }

 private:
  static std::uint64_t key(int u, int v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
  }
  static std::array<int, 3> rotate(const std::array<int, 3>& f, int i) {
    return {f[i], f[(i + 1) % 3], f[(i + 2) % 3]};
  }
  int apex(int f, int u, int v) const {
    for (int x : faces_[f])
      if (x != u && x != v) return x;
    return -1;
  }
  std::pair<int, int> pick() {
    int f = static_cast<int>(below(faces_.size()));
    return {f, static_cast<int>(below(3))};
  }
  void index(int f) {
    for (int i = 0; i < 3; ++i) face_[key(faces_[f][i], faces_[f][(i + 1) % 3])] = f;
  }
  void unindex(int f) {
    for (int i = 0; i < 3; ++i) face_.erase(key(faces_[f][i], faces_[f][(i + 1) % 3]));
  }
  void link(int u, int v) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  void unlink(int u, int v) {
    auto drop = [](std::vector<int>& l, int x) {
      auto it = std::find(l.begin(), l.end(), x);
      *it = l.back();
      l.pop_back();
    };
    drop(adj_[u], v);
    drop(adj_[v], u);
  }

  std::mt19937_64 rng_;
  int n_ = 0;
  std::vector<std::array<int, 3>> faces_;
  std::unordered_map<std::uint64_t, int> face_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace detail

// Random 4-connected planar triangulation on n vertices plus t kite edges,
// each crossing the shared edge of two faces. Kites use edge-disjoint
// quadrilaterals. Throws "infeasible-kites" naming how many fit when fewer
// than t can be placed.
inline Drawing gen_kite_augmented(std::uint64_t seed, int n, int t) {
  if (n < 6) throw Error("bad-parameter", "n must be >= 6");
  if (t < 0) throw Error("bad-parameter", "crossings must be >= 0");
  detail::TriangulationGrower tg(seed);
  while (tg.n() < n) {
    tg.grow();
    for (int i = 0; i < 3; ++i) tg.flip();
  }

  // edges in first-seen order over the face list
  Graph g;
  g.n = n;
  std::unordered_map<std::uint64_t, int> eid;
  for (const auto& f : tg.faces())
    for (int i = 0; i < 3; ++i) {
      int u = f[i], v = f[(i + 1) % 3];
      if (eid.emplace(pair_key(u, v), g.m()).second) g.edges.push_back({std::min(u, v), std::max(u, v)});
    }

  // ccw neighbour order: in face (a,b,c), c follows b around a
  std::unordered_map<std::uint64_t, int> succ;
  succ.reserve(tg.faces().size() * 3);
  std::vector<int> any(n, -1);
  auto dkey = [](int u, int v) { return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v); };
  for (const auto& f : tg.faces())
    for (int i = 0; i < 3; ++i) {
      int a = f[i], b = f[(i + 1) % 3], c = f[(i + 2) % 3];
      succ[dkey(a, b)] = c;
      any[a] = b;
    }
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) {
    int w = any[v];
    do {
      rot[v].push_back(w);
      w = succ.at(dkey(v, w));
    } while (w != any[v]);
  }

  // greedy kite placement over shuffled edges
  std::vector<int> order(g.m());
  for (int e = 0; e < g.m(); ++e) order[e] = e;
  for (int i = g.m() - 1; i > 0; --i) std::swap(order[i], order[tg.below(i + 1)]);
  std::vector<char> used(g.m(), 0);
  struct Kite {
    int a, b, c, d, ab;
  };
  std::vector<Kite> kites;
  std::unordered_map<std::uint64_t, int> added;
  for (int e : order) {
    if (static_cast<int>(kites.size()) == t) break;
    if (used[e]) continue;
    int a = g.edges[e].u, b = g.edges[e].v;
    int c = tg.apex_of(a, b), d = tg.apex_of(b, a);
    if (tg.adjacent(c, d) || added.count(pair_key(c, d))) continue;
    std::array<int, 5> quad{e, eid.at(pair_key(a, c)), eid.at(pair_key(b, c)), eid.at(pair_key(a, d)),
                            eid.at(pair_key(b, d))};
    if (std::any_of(quad.begin(), quad.end(), [&](int f) { return used[f] != 0; })) continue;
    for (int f : quad) used[f] = 1;
    added.emplace(pair_key(c, d), 0);
    kites.push_back({a, b, c, d, e});
  }
  if (static_cast<int>(kites.size()) < t)
    throw Error("infeasible-kites", "only " + std::to_string(kites.size()) + " of " + std::to_string(t) +
                                        " kites could be placed");

  Drawing d;
  d.rotations.resize(n + t);
  auto insert_after = [&](int v, int x, int y) {
    auto& r = rot[v];
    auto it = std::find(r.begin(), r.end(), x);
    r.insert(it + 1, y);
  };
  std::vector<int> kite_edge;
  for (const Kite& k : kites) {
    // (a,b,c) is ccw, so around c a is followed by b; d goes between them
    insert_after(k.c, k.a, k.d);
    insert_after(k.d, k.b, k.c);
    kite_edge.push_back(g.m());
    eid.emplace(pair_key(k.c, k.d), g.m());
    g.edges.push_back({std::min(k.c, k.d), std::max(k.c, k.d)});
  }
  d.graph = g;
  for (int v = 0; v < n; ++v)
    for (int w : rot[v]) {
      int e = eid.at(pair_key(v, w));
      d.rotations[v].push_back({e, g.edges[e].u == v ? 0 : 1, -1});
    }
  for (int i = 0; i < t; ++i) {
    const Kite& k = kites[i];
    int ab = k.ab, cd = kite_edge[i];
    d.crossings.push_back({ab, cd});
    auto end = [&](int e, int x) { return EdgeEnd{e, g.edges[e].u == x ? 0 : 1, i}; };
    d.rotations[n + i] = {end(ab, k.b), end(cd, k.c), end(ab, k.a), end(cd, k.d)};
  }
  return d;
}

}  // namespace oneplane
