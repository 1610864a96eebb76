#pragma once
// Graphs and 1-plane drawings stored as planarization skeletons.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace oneplane {

// Precondition failure with a stable machine-readable reason code.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Graph {
  int n = 0;
  std::vector<Edge> edges;  // edge id = index

  int m() const { return static_cast<int>(edges.size()); }
  friend bool operator==(const Graph&, const Graph&) = default;
};

inline std::uint64_t pair_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

// Endpoint-pair to edge id lookup.
class EdgeLookup {
 public:
  EdgeLookup() = default;
  explicit EdgeLookup(const Graph& g) {
    ids_.reserve(g.edges.size() * 2);
    for (int e = 0; e < g.m(); ++e) ids_.emplace(pair_key(g.edges[e].u, g.edges[e].v), e);
  }
  int find(int u, int v) const {
    auto it = ids_.find(pair_key(u, v));
    return it == ids_.end() ? -1 : it->second;
  }
  bool adjacent(int u, int v) const { return find(u, v) >= 0; }

 private:
  std::unordered_map<std::uint64_t, int> ids_;
};

inline std::vector<std::vector<int>> adjacency(const Graph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (const Edge& e : g.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

// Throws unless ids are in range and the graph is simple.
inline void require_simple(const Graph& g) {
  if (g.n < 0) throw Error("bad-graph", "negative vertex count");
  std::unordered_map<std::uint64_t, int> ids;
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    if (u < 0 || v < 0 || u >= g.n || v >= g.n)
      throw Error("bad-graph", "edge " + std::to_string(e) + " has an endpoint out of range");
    if (u == v) throw Error("bad-graph", "edge " + std::to_string(e) + " is a loop");
    if (!ids.emplace(pair_key(u, v), e).second)
      throw Error("bad-graph", "edge " + std::to_string(e) + " duplicates another edge");
  }
}

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
  Graph g;
  g.n = n;
  g.edges.reserve(pairs.size());
  for (auto [u, v] : pairs) g.edges.push_back({u, v});
  require_simple(g);
  return g;
}

// One end of a skeleton edge. At a vertex, `side` says which endpoint of the
// edge it is (0 = u, 1 = v) and crossing is -1. At a crossing node, the end
// belongs to the part-edge between endpoint `side` and the crossing.
struct EdgeEnd {
  int edge = 0;
  int side = 0;
  int crossing = -1;
  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

struct Crossing {
  int a = 0;
  int b = 0;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Skeleton nodes are 0..n-1 for vertices and n+c for crossing c.
struct Drawing {
  Graph graph;
  std::vector<Crossing> crossings;
  std::vector<std::vector<EdgeEnd>> rotations;

  int n() const { return graph.n; }
  int m() const { return graph.m(); }
  int num_crossings() const { return static_cast<int>(crossings.size()); }
  int num_nodes() const { return graph.n + num_crossings(); }
  friend bool operator==(const Drawing&, const Drawing&) = default;
};

// Dart-level view of a drawing. A dart is an edge-end; the vertex end of
// edge e at side s is 2e+s, and the end of part-edge (e,s) at crossing c is
// 2m + 4c + 2w + s where w selects the crossing's first or second edge.
struct Skeleton {
  int n = 0;
  int m = 0;
  int c = 0;
  std::vector<int> crossing_of;  // per edge, -1 when uncrossed
  std::vector<int> node;         // per dart
  std::vector<int> twin;         // per dart
  std::vector<int> next;         // per dart: successor in its node's rotation
  std::vector<int> prev;

  int num_darts() const { return 2 * m + 4 * c; }
  int num_nodes() const { return n + c; }
  bool is_vertex(int node_id) const { return node_id < n; }
};

namespace detail {

inline int endpoint(const Graph& g, int e, int side) {
  return side == 0 ? g.edges[e].u : g.edges[e].v;
}

// Builds the skeleton, appending invariant violations to `out`. Returns
// nothing if the rotation data is too broken to index.
inline std::optional<Skeleton> analyze(const Drawing& d, std::vector<std::string>& out) {
  const Graph& g = d.graph;
  const int n = g.n, m = g.m(), C = d.num_crossings();
  auto say = [&](std::string s) { out.push_back(std::move(s)); };
  bool graph_ok = true;
  if (n < 0) {
    say("negative vertex count");
    return std::nullopt;
  }
  {
    // duplicates: bucket edges by smaller endpoint, then mark larger endpoints
    std::vector<int> dup_of(m, -1), head(n, -1), link(m, -1);
    for (int e = m - 1; e >= 0; --e) {
      auto [u, v] = g.edges[e];
      if (u < 0 || v < 0 || u >= n || v >= n || u == v) continue;
      int lo = std::min(u, v);
      link[e] = head[lo];
      head[lo] = e;
    }
    std::vector<int> seen(n, -1);
    for (int lo = 0; lo < n; ++lo) {
      for (int e = head[lo]; e >= 0; e = link[e]) {
        int hi = std::max(g.edges[e].u, g.edges[e].v);
        if (seen[hi] >= 0) dup_of[e] = seen[hi];
        else seen[hi] = e;
      }
      for (int e = head[lo]; e >= 0; e = link[e]) seen[std::max(g.edges[e].u, g.edges[e].v)] = -1;
    }
    for (int e = 0; e < m; ++e) {
      auto [u, v] = g.edges[e];
      if (u < 0 || v < 0 || u >= n || v >= n) {
        say("edge " + std::to_string(e) + " has an endpoint out of range");
        graph_ok = false;
      } else if (u == v) {
        say("edge " + std::to_string(e) + " is a loop");
      } else if (dup_of[e] >= 0) {
        say("edge " + std::to_string(e) + " duplicates edge " + std::to_string(dup_of[e]));
      }
    }
  }
  Skeleton s;
  s.n = n;
  s.m = m;
  s.c = C;
  s.crossing_of.assign(m, -1);
  bool crossings_ok = true;
  for (int c = 0; c < C; ++c) {
    auto [a, b] = d.crossings[c];
    if (a < 0 || b < 0 || a >= m || b >= m) {
      say("crossing " + std::to_string(c) + " references an unknown edge");
      crossings_ok = false;
      continue;
    }
    if (a == b) {
      say("crossing " + std::to_string(c) + " crosses an edge with itself");
      crossings_ok = false;
      continue;
    }
    for (int e : {a, b}) {
      if (s.crossing_of[e] >= 0) {
        say("edge " + std::to_string(e) + " crossed twice");
        crossings_ok = false;
      } else {
        s.crossing_of[e] = c;
      }
    }
    if (graph_ok) {
      const Edge& ea = g.edges[a];
      const Edge& eb = g.edges[b];
      if (ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v)
        say("crossing " + std::to_string(c) + " joins edges sharing an endpoint");
    }
  }
  if (!graph_ok || !crossings_ok) return std::nullopt;
  if (static_cast<int>(d.rotations.size()) != n + C) {
    say("expected " + std::to_string(n + C) + " rotation lists, found " +
        std::to_string(d.rotations.size()));
    return std::nullopt;
  }

  const int D = 2 * m + 4 * C;
  s.node.assign(D, -1);
  s.next.assign(D, -1);
  s.prev.assign(D, -1);
  s.twin.assign(D, -1);
  bool rot_ok = true;
  std::vector<int> ds;
  for (int x = 0; x < n + C; ++x) {
    const auto& rot = d.rotations[x];
    ds.clear();
    for (const EdgeEnd& end : rot) {
      auto where = [x] { return "rotation of node " + std::to_string(x); };
      if (end.edge < 0 || end.edge >= m || (end.side != 0 && end.side != 1)) {
        say(where() + " has an invalid edge-end");
        rot_ok = false;
        continue;
      }
      int dart;
      if (x < n) {
        if (end.crossing != -1 || endpoint(g, end.edge, end.side) != x) {
          say(where() + " lists an end not incident to it");
          rot_ok = false;
          continue;
        }
        dart = 2 * end.edge + end.side;
      } else {
        int c = x - n;
        if (end.crossing != c || (d.crossings[c].a != end.edge && d.crossings[c].b != end.edge)) {
          say(where() + " lists an end not incident to it");
          rot_ok = false;
          continue;
        }
        int w = d.crossings[c].a == end.edge ? 0 : 1;
        dart = 2 * m + 4 * c + 2 * w + end.side;
      }
      if (s.node[dart] != -1) {
        say(where() + " repeats an edge-end");
        rot_ok = false;
        continue;
      }
      s.node[dart] = x;
      ds.push_back(dart);
    }
    for (std::size_t i = 0; i < ds.size(); ++i) {
      s.next[ds[i]] = ds[(i + 1) % ds.size()];
      s.prev[ds[(i + 1) % ds.size()]] = ds[i];
    }
    if (x >= n) {
      if (ds.size() != 4) {
        say("crossing node " + std::to_string(x - n) + " has degree " + std::to_string(ds.size()));
        rot_ok = false;
      } else {
        // alternation: positions 0 and 2 belong to one edge, 1 and 3 to the other
        auto w = [&](int dd) { return ((dd - 2 * m) % 4) / 2; };
        if (w(ds[0]) != w(ds[2]) || w(ds[1]) != w(ds[3]) || w(ds[0]) == w(ds[1]))
          say("crossing node " + std::to_string(x - n) + " does not alternate its edges");
      }
    }
  }
  for (int dart = 0; dart < D; ++dart) {
    if (s.node[dart] == -1) {
      if (dart < 2 * m) {
        int e = dart / 2;
        say("edge-end " + std::to_string(e) + "." + std::to_string(dart % 2) + " missing from rotations");
        rot_ok = false;
      } else {
        int c = (dart - 2 * m) / 4;
        say("crossing node " + std::to_string(c) + " is missing an edge-end");
        rot_ok = false;
      }
    }
  }
  if (!rot_ok) return std::nullopt;
  for (int e = 0; e < m; ++e) {
    int c = s.crossing_of[e];
    for (int side = 0; side < 2; ++side) {
      int v_dart = 2 * e + side;
      int other;
      if (c < 0) {
        other = 2 * e + (1 - side);
      } else {
        int w = d.crossings[c].a == e ? 0 : 1;
        other = 2 * m + 4 * c + 2 * w + side;
        s.twin[other] = v_dart;
      }
      s.twin[v_dart] = other;
    }
  }
  return s;
}

}  // namespace detail

// Faces of the skeleton: each face is the cyclic list of darts leaving its
// corners, following next(twin(d)).
struct FaceSet {
  std::vector<int> face_of;               // per dart
  std::vector<std::vector<int>> faces;    // darts per face
};

inline FaceSet trace_faces(const Skeleton& s) {
  FaceSet fs;
  const int D = s.num_darts();
  fs.face_of.assign(D, -1);
  for (int start = 0; start < D; ++start) {
    if (fs.face_of[start] != -1) continue;
    int f = static_cast<int>(fs.faces.size());
    fs.faces.emplace_back();
    int dart = start;
    do {
      fs.face_of[dart] = f;
      fs.faces[f].push_back(dart);
      dart = s.next[s.twin[dart]];
    } while (dart != start);
  }
  return fs;
}

// Every violated Drawing invariant; empty means valid.
inline std::vector<std::string> validate_drawing(const Drawing& d) {
  std::vector<std::string> out;
  auto sk = detail::analyze(d, out);
  if (!sk) return out;
  int faces = static_cast<int>(trace_faces(*sk).faces.size());
  long long euler = static_cast<long long>(sk->num_nodes()) - (sk->m + 2LL * sk->c) + faces;
  if (euler != 2) out.push_back("not spherical: V - E + F = " + std::to_string(euler));
  return out;
}

inline Skeleton skeleton(const Drawing& d) {
  std::vector<std::string> out;
  auto sk = detail::analyze(d, out);
  if (!out.empty() || !sk) throw Error("invalid-drawing", out.empty() ? "invalid drawing" : out.front());
  return std::move(*sk);
}

// Validated skeleton plus its faces.
struct Embedded {
  Skeleton sk;
  FaceSet fs;
};

inline Embedded embed(const Drawing& d) {
  Embedded em{skeleton(d), {}};
  em.fs = trace_faces(em.sk);
  long long euler = static_cast<long long>(em.sk.num_nodes()) - (em.sk.m + 2LL * em.sk.c) +
                    static_cast<long long>(em.fs.faces.size());
  if (euler != 2) throw Error("invalid-drawing", "not spherical: V - E + F = " + std::to_string(euler));
  return em;
}

inline EdgeEnd edge_end_of(const Drawing& d, const Skeleton& s, int dart) {
  if (dart < 2 * s.m) return {dart / 2, dart % 2, -1};
  int r = dart - 2 * s.m;
  int c = r / 4;
  int e = (r % 4) / 2 == 0 ? d.crossings[c].a : d.crossings[c].b;
  return {e, r % 2, c};
}

struct Region {
  std::vector<int> corners;         // skeleton nodes
  std::vector<EdgeEnd> boundary;    // edge-ends leaving each corner
};

inline std::vector<Region> trace_regions(const Drawing& d) {
  Embedded em = embed(d);
  const Skeleton& s = em.sk;
  std::vector<Region> out;
  out.reserve(em.fs.faces.size());
  for (const auto& face : em.fs.faces) {
    Region r;
    for (int dart : face) {
      r.corners.push_back(s.node[dart]);
      r.boundary.push_back(edge_end_of(d, s, dart));
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline bool is_triangulated(const Embedded& em) {
  return std::all_of(em.fs.faces.begin(), em.fs.faces.end(),
                     [](const std::vector<int>& f) { return f.size() == 3; });
}

inline bool is_triangulated(const Drawing& d) { return is_triangulated(embed(d)); }

enum class Density { exceeds_bound, optimal, below_optimal };

inline const char* to_string(Density c) {
  switch (c) {
    case Density::exceeds_bound: return "exceeds-1-planar-bound";
    case Density::optimal: return "optimal";
    case Density::below_optimal: return "below-optimal";
  }
  return "?";
}

inline Density classify_density(const Graph& g) {
  if (g.n < 3) throw Error("too-small", "density classification needs n >= 3");
  long long bound = 4LL * g.n - 8;
  if (g.m() > bound) return Density::exceeds_bound;
  return g.m() == bound ? Density::optimal : Density::below_optimal;
}

// Crossing-free drawing from a rotation system given as neighbour lists.
inline Drawing planar_drawing(const Graph& g, const std::vector<std::vector<int>>& rot) {
  EdgeLookup look(g);
  Drawing d;
  d.graph = g;
  d.rotations.resize(g.n);
  for (int v = 0; v < g.n; ++v) {
    for (int w : rot[v]) {
      int e = look.find(v, w);
      if (e < 0) throw Error("bad-rotation", "rotation lists a non-edge");
      d.rotations[v].push_back({e, g.edges[e].u == v ? 0 : 1, -1});
    }
  }
  return d;
}

// Neighbour order around each vertex, ignoring crossings (the far endpoint
// of each incident edge).
inline std::vector<std::vector<int>> vertex_rotation(const Drawing& d) {
  std::vector<std::vector<int>> rot(d.n());
  for (int v = 0; v < d.n(); ++v)
    for (const EdgeEnd& end : d.rotations[v])
      rot[v].push_back(detail::endpoint(d.graph, end.edge, 1 - end.side));
  return rot;
}

}  // namespace oneplane
