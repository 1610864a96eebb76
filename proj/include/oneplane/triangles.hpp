#pragma once
// Triangle listing and per-edge triangle lists under edge deletion.

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "oneplane/embedding.hpp"

namespace oneplane {

struct Triangle {
  std::array<int, 3> v;  // sorted vertex ids
  std::array<int, 3> e;  // edges (v0,v1), (v0,v2), (v1,v2)
};

// Adjacency in one array: the neighbours of v are item[start[v] .. start[v+1]).
struct CompactAdjacency {
  std::vector<int> start;
  std::vector<int> item;

  explicit CompactAdjacency(const Graph& g) : start(g.n + 1, 0), item(2 * g.edges.size()) {
    for (const Edge& e : g.edges) {
      ++start[e.u + 1];
      ++start[e.v + 1];
    }
    for (int v = 0; v < g.n; ++v) start[v + 1] += start[v];
    std::vector<int> at(start.begin(), start.end() - 1);
    for (const Edge& e : g.edges) {
      item[at[e.u]++] = e.v;
      item[at[e.v]++] = e.u;
    }
  }
  int n() const { return static_cast<int>(start.size()) - 1; }
  int degree(int v) const { return start[v + 1] - start[v]; }
  std::span<const int> neighbours(int v) const { return {item.data() + start[v], item.data() + start[v + 1]}; }
};

// Smallest-last ordering: position of each vertex in removal order.
inline std::vector<int> degeneracy_rank(const CompactAdjacency& adj) {
  const int n = adj.n();
  std::vector<int> deg(n), rank(n, -1);
  int maxd = 0;
  for (int v = 0; v < n; ++v) {
    deg[v] = adj.degree(v);
    maxd = std::max(maxd, deg[v]);
  }
  // bucket queue with intrusive doubly linked lists
  std::vector<int> head(maxd + 1, -1), nxt(n, -1), prv(n, -1);
  auto push = [&](int v) {
    nxt[v] = head[deg[v]];
    prv[v] = -1;
    if (head[deg[v]] >= 0) prv[head[deg[v]]] = v;
    head[deg[v]] = v;
  };
  auto pop = [&](int v) {
    if (prv[v] >= 0) nxt[prv[v]] = nxt[v];
    else head[deg[v]] = nxt[v];
    if (nxt[v] >= 0) prv[nxt[v]] = prv[v];
  };
  for (int v = 0; v < n; ++v) push(v);
  int low = 0;
  for (int i = 0; i < n; ++i) {
    low = std::max(0, low - 1);
    while (head[low] < 0) ++low;
    int v = head[low];
    pop(v);
    rank[v] = i;
    for (int w : adj.neighbours(v)) {
      if (rank[w] >= 0) continue;
      pop(w);
      --deg[w];
      push(w);
    }
  }
  return rank;
}

class TriangleIndex {
 public:
  explicit TriangleIndex(const Graph& g) : alive_count_(g.m(), 0), edge_alive_(g.m(), 1) {
    const int n = g.n, m = g.m();
    auto rank = degeneracy_rank(CompactAdjacency(g));
    // orient every edge toward the later-removed endpoint; out-degree is
    // bounded by the degeneracy
    std::vector<int> out_start(n + 1, 0);
    for (const Edge& e : g.edges) ++out_start[(rank[e.u] < rank[e.v] ? e.u : e.v) + 1];
    for (int v = 0; v < n; ++v) out_start[v + 1] += out_start[v];
    std::vector<std::pair<int, int>> out(m);
    {
      std::vector<int> at(out_start.begin(), out_start.end() - 1);
      for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges[e];
        if (rank[u] < rank[v]) out[at[u]++] = {v, e};
        else out[at[v]++] = {u, e};
      }
    }
    std::vector<int> mark(n, -1);
    for (int u = 0; u < n; ++u) {
      for (int i = out_start[u]; i < out_start[u + 1]; ++i) mark[out[i].first] = out[i].second;
      for (int i = out_start[u]; i < out_start[u + 1]; ++i) {
        auto [v, euv] = out[i];
        for (int j = out_start[v]; j < out_start[v + 1]; ++j) {
          ++work_;
          auto [w, evw] = out[j];
          if (mark[w] < 0) continue;
          add(u, v, w, euv, mark[w], evw);
        }
      }
      for (int i = out_start[u]; i < out_start[u + 1]; ++i) mark[out[i].first] = -1;
    }
    alive_triangles_ = static_cast<int>(tris_.size());
    tri_alive_.assign(tris_.size(), 1);
    // per-edge triangle lists
    list_start_.assign(m + 1, 0);
    for (int e = 0; e < m; ++e) list_start_[e + 1] = list_start_[e] + alive_count_[e];
    list_len_.assign(m, 0);
    lists_.resize(list_start_[m]);
    for (int t = 0; t < static_cast<int>(tris_.size()); ++t)
      for (int f : tris_[t].e) lists_[list_start_[f] + list_len_[f]++] = t;
  }

  int num_triangles() const { return static_cast<int>(tris_.size()); }
  int num_alive_triangles() const { return alive_triangles_; }
  const Triangle& triangle(int t) const { return tris_[t]; }
  bool triangle_alive(int t) const { return tri_alive_[t] != 0; }
  bool edge_alive(int e) const { return edge_alive_[e] != 0; }
  // |T_e| over alive triangles, O(1)
  int alive_count(int e) const { return alive_count_[e]; }
  std::uint64_t work() const { return work_; }

  // Alive triangles containing e. Compacts the list in place.
  std::span<const int> triangles_of_edge(int e) {
    check_alive(e);
    int* list = lists_.data() + list_start_[e];
    if (list_len_[e] != alive_count_[e]) {
      int k = 0;
      for (int i = 0; i < list_len_[e]; ++i)
        if (tri_alive_[list[i]]) list[k++] = list[i];
      list_len_[e] = k;
    }
    return {list, static_cast<std::size_t>(list_len_[e])};
  }

  // Removes e and every triangle through it; returns how many triangles died.
  int delete_edge(int e) {
    check_alive(e);
    int removed = 0;
    const int* list = lists_.data() + list_start_[e];
    for (int i = 0; i < list_len_[e]; ++i) {
      int t = list[i];
      if (!tri_alive_[t]) continue;
      tri_alive_[t] = 0;
      for (int f : tris_[t].e) --alive_count_[f];
      ++removed;
    }
    alive_triangles_ -= removed;
    list_len_[e] = 0;
    edge_alive_[e] = 0;
    return removed;
  }

 private:
  void check_alive(int e) const {
    if (e < 0 || e >= static_cast<int>(edge_alive_.size()))
      throw Error("unknown-edge", "edge " + std::to_string(e) + " does not exist");
    if (!edge_alive_[e]) throw Error("deleted-edge", "edge " + std::to_string(e) + " was deleted");
  }

  void add(int a, int b, int c, int eab, int eac, int ebc) {
    // normalize to sorted vertex order
    std::array<int, 3> v{a, b, c};
    auto edge_of = [&](int x, int y) {
      auto same = [&](int p, int q) { return (p == x && q == y) || (p == y && q == x); };
      if (same(a, b)) return eab;
      if (same(a, c)) return eac;
      return ebc;
    };
    std::sort(v.begin(), v.end());
    std::array<int, 3> ids{edge_of(v[0], v[1]), edge_of(v[0], v[2]), edge_of(v[1], v[2])};
    tris_.push_back({v, ids});
    for (int f : ids) ++alive_count_[f];
  }

  std::vector<Triangle> tris_;
  std::vector<char> tri_alive_;
  std::vector<int> lists_;  // per-edge segments of triangle ids
  std::vector<int> list_start_;
  std::vector<int> list_len_;
  std::vector<int> alive_count_;
  std::vector<char> edge_alive_;
  int alive_triangles_ = 0;
  std::uint64_t work_ = 0;
};

inline TriangleIndex build_index(const Graph& g) { return TriangleIndex(g); }

}  // namespace oneplane
