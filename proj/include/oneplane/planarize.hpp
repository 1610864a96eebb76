#pragma once
// Crossing resolution: delete one edge per crossing so that the drawing
// stays triangulated and free of uncrossed separating triangles.

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "oneplane/connectivity.hpp"
#include "oneplane/embedding.hpp"
#include "oneplane/triangles.hpp"

namespace oneplane {

enum class Rule { case1, case2 };

inline const char* to_string(Rule r) { return r == Rule::case1 ? "case-1" : "case-2"; }

struct Decision {
  int deleted = -1;
  int kept = -1;
  Rule rule = Rule::case1;
  std::optional<std::array<int, 3>> witness;  // case-2 triangle on the deleted edge
};

struct DeletionRecord {
  int crossing = -1;
  Decision decision;
};

// Mutable planarization state over an input drawing.
class PlanarizeState {
 public:
  explicit PlanarizeState(const Drawing& d)
      : d_(d), idx_(d.graph), crossing_of_(d.m(), -1), resolved_(d.num_crossings(), 0),
        deleted_(d.m(), 0) {
    for (int c = 0; c < d.num_crossings(); ++c) {
      crossing_of_[d.crossings[c].a] = c;
      crossing_of_[d.crossings[c].b] = c;
    }
  }

  const Drawing& input() const { return d_; }
  TriangleIndex& index() { return idx_; }
  bool crossed(int e) const { return crossing_of_[e] >= 0; }
  bool deleted(int e) const { return deleted_[e] != 0; }
  bool resolved(int c) const { return resolved_[c] != 0; }

  // The crossing edge with fewer alive triangles is scanned (ties: smaller
  // id). An alive triangle on it whose other two edges are uncrossed and
  // whose apex is not an endpoint of the partner deletes the scanned edge;
  // otherwise the partner goes.
  Decision choose_deletion(int c) {
    if (c < 0 || c >= d_.num_crossings()) throw Error("unknown-crossing", "no such crossing");
    if (resolved_[c]) throw Error("resolved", "crossing " + std::to_string(c) + " already resolved");
    int a = d_.crossings[c].a, b = d_.crossings[c].b;
    int ca = idx_.alive_count(a), cb = idx_.alive_count(b);
    int e = (ca < cb || (ca == cb && a < b)) ? a : b;
    int other = e == a ? b : a;
    const Edge& ep = d_.graph.edges[other];
    for (int t : idx_.triangles_of_edge(e)) {
      const Triangle& tri = idx_.triangle(t);
      int apex = apex_of(tri, e);
      if (apex == ep.u || apex == ep.v) continue;
      bool clear = true;
      for (int f : tri.e)
        if (f != e && crossed(f)) clear = false;
      if (clear) return {e, other, Rule::case2, tri.v};
    }
    return {other, e, Rule::case1, std::nullopt};
  }

  // Applies a decision and checks the triangles that just became uncrossed:
  // each must bound one of the two regions created at the old crossing.
  void apply(int c, const Decision& dec) {
    idx_.delete_edge(dec.deleted);
    deleted_[dec.deleted] = 1;
    crossing_of_[dec.deleted] = -1;
    crossing_of_[dec.kept] = -1;
    resolved_[c] = 1;
    const Edge& gone = d_.graph.edges[dec.deleted];
    for (int t : idx_.triangles_of_edge(dec.kept)) {
      const Triangle& tri = idx_.triangle(t);
      bool clear = true;
      for (int f : tri.e)
        if (crossed(f)) clear = false;
      if (!clear) continue;
      int apex = apex_of(tri, dec.kept);
      if (apex != gone.u && apex != gone.v)
        throw Error("separating-triangle", "resolving crossing " + std::to_string(c) +
                                               " exposed an uncrossed separating triangle " +
                                               std::to_string(tri.v[0]) + " " + std::to_string(tri.v[1]) +
                                               " " + std::to_string(tri.v[2]));
    }
  }

  // Current drawing: deleted edges dropped, resolved crossings smoothed,
  // remaining edges and crossings renumbered in id order.
  Drawing snapshot() const {
    const int n = d_.n(), m = d_.m();
    std::vector<int> emap(m, -1), cmap(d_.num_crossings(), -1);
    Drawing out;
    out.graph.n = n;
    for (int e = 0; e < m; ++e)
      if (!deleted_[e]) {
        emap[e] = out.graph.m();
        out.graph.edges.push_back(d_.graph.edges[e]);
      }
    for (int c = 0; c < d_.num_crossings(); ++c)
      if (!resolved_[c]) {
        cmap[c] = out.num_crossings();
        out.crossings.push_back({emap[d_.crossings[c].a], emap[d_.crossings[c].b]});
      }
    out.rotations.resize(n + out.num_crossings());
    for (int v = 0; v < n; ++v)
      for (const EdgeEnd& end : d_.rotations[v])
        if (!deleted_[end.edge]) out.rotations[v].push_back({emap[end.edge], end.side, -1});
    for (int c = 0; c < d_.num_crossings(); ++c) {
      if (resolved_[c]) continue;
      for (const EdgeEnd& end : d_.rotations[n + c])
        out.rotations[n + cmap[c]].push_back({emap[end.edge], end.side, cmap[c]});
    }
    return out;
  }

 private:
  static int apex_of(const Triangle& t, int e) {
    // edges are (v0,v1), (v0,v2), (v1,v2); the apex is opposite e
    if (t.e[0] == e) return t.v[2];
    if (t.e[1] == e) return t.v[1];
    return t.v[0];
  }

  const Drawing& d_;
  TriangleIndex idx_;
  std::vector<int> crossing_of_;
  std::vector<char> resolved_;
  std::vector<char> deleted_;
};

struct PlanarizeResult {
  Drawing drawing;                       // crossing-free
  std::vector<DeletionRecord> trace;     // one record per input crossing, input ids
  std::vector<int> edge_map;             // input edge id -> output id, -1 if deleted
};

using StepObserver = std::function<void(int crossing, const PlanarizeState&)>;

inline PlanarizeResult planarize(const Drawing& d, const StepObserver& observe = {}) {
  Embedded em = embed(d);
  if (!is_triangulated(em)) throw Error("not-triangulated", "drawing is not triangulated");
  if (d.n() < 6) throw Error("too-small", "planarization needs n >= 6");
  PlanarizeState st(d);
  if (auto tri = find_uncrossed_separating_triangle(em, st.index()))
    throw WitnessError("separating-triangle", "uncrossed separating triangle present",
                       triangle_witness(d, em, *tri));
  PlanarizeResult res;
  res.trace.reserve(d.num_crossings());
  for (int c = 0; c < d.num_crossings(); ++c) {
    Decision dec = st.choose_deletion(c);
    st.apply(c, dec);
    res.trace.push_back({c, dec});
    if (observe) observe(c, st);
  }
  res.drawing = st.snapshot();
  res.edge_map.assign(d.m(), -1);
  for (int e = 0, k = 0; e < d.m(); ++e)
    if (!st.deleted(e)) res.edge_map[e] = k++;
  return res;
}

}  // namespace oneplane
