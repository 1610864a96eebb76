#pragma once
// Maximum cardinality matching in general graphs and Tutte-Berge bounds.

#include <algorithm>
#include <optional>
#include <vector>

#include "oneplane/embedding.hpp"

namespace oneplane {

struct MatchingCertificate {
  std::vector<int> matching;               // edge ids
  std::optional<std::vector<int>> witness; // Tutte-Berge set S
};

namespace detail {

// Edmonds' blossom algorithm, one BFS per free root.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : n_(g.n), adj_(adjacency(g)), match_(g.n, -1), parent_(g.n), base_(g.n), used_(g.n),
        in_blossom_(g.n) {}

  std::vector<int> run() {
    // greedy start
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (int w : adj_[v])
        if (match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int end = find_path(v);
      while (end != -1) {
        int pv = parent_[end], ppv = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = ppv;
      }
    }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::vector<int> q{root};
    for (std::size_t qi = 0; qi < q.size(); ++qi) {
      int v = q[qi];
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = 1;
              q.push_back(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          q.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

}  // namespace detail

inline MatchingCertificate max_matching(const Graph& g) {
  require_simple(g);
  auto mate = detail::Blossom(g).run();
  EdgeLookup look(g);
  MatchingCertificate out;
  for (int v = 0; v < g.n; ++v)
    if (mate[v] > v) out.matching.push_back(look.find(v, mate[v]));
  std::sort(out.matching.begin(), out.matching.end());
  return out;
}

// Odd components of G - S minus |S|, clamped at zero. Isolated vertices are
// odd components.
inline int tutte_berge_bound(const Graph& g, const std::vector<int>& s) {
  std::vector<char> removed(g.n, 0);
  int size = 0;
  for (int v : s) {
    if (v < 0 || v >= g.n) throw Error("bad-witness", "witness vertex out of range");
    if (!removed[v]) ++size;
    removed[v] = 1;
  }
  auto adj = adjacency(g);
  std::vector<char> seen(g.n, 0);
  int odd = 0;
  for (int r = 0; r < g.n; ++r) {
    if (removed[r] || seen[r]) continue;
    int count = 0;
    std::vector<int> stack{r};
    seen[r] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      ++count;
      for (int w : adj[u])
        if (!removed[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    odd += count % 2;
  }
  return std::max(0, odd - size);
}

inline bool is_matching(const Graph& g, const std::vector<int>& m) {
  std::vector<char> used(g.n, 0);
  for (int e : m) {
    if (e < 0 || e >= g.m()) return false;
    auto [u, v] = g.edges[e];
    if (used[u] || used[v]) return false;
    used[u] = used[v] = 1;
  }
  return true;
}

inline bool is_near_perfect(const Graph& g, const std::vector<int>& m) {
  if (!is_matching(g, m)) throw Error("invalid-matching", "edge set is not a matching");
  return static_cast<int>(m.size()) == g.n / 2;
}

}  // namespace oneplane
