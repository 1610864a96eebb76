#pragma once
// Hamiltonian cycles: a boundary-peeling finder for 4-connected planar
// triangulations, an exact backtracking oracle, and the 1-plane pipeline.

#include <pthread.h>

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "oneplane/connectivity.hpp"
#include "oneplane/embedding.hpp"
#include "oneplane/matching.hpp"
#include "oneplane/planarize.hpp"

namespace oneplane {

struct HamiltonianCycle {
  std::vector<int> order;
};

inline bool verify_cycle(const Graph& g, const HamiltonianCycle& h) {
  const auto& o = h.order;
  if (static_cast<int>(o.size()) != g.n || g.n < 3) return false;
  std::vector<char> seen(g.n, 0);
  for (int v : o) {
    if (v < 0 || v >= g.n || seen[v]) return false;
    seen[v] = 1;
  }
  EdgeLookup look(g);
  for (std::size_t i = 0; i < o.size(); ++i)
    if (!look.adjacent(o[i], o[(i + 1) % o.size()])) return false;
  return true;
}

// ---------------------------------------------------------------- exact

struct ExactResult {
  enum class Status { found, absent, budget_exceeded };
  Status status = Status::absent;
  HamiltonianCycle cycle;
};

inline const char* to_string(ExactResult::Status s) {
  switch (s) {
    case ExactResult::Status::found: return "found";
    case ExactResult::Status::absent: return "proven-absent";
    case ExactResult::Status::budget_exceeded: return "budget-exceeded";
  }
  return "?";
}

namespace detail {

class ExactSearch {
 public:
  ExactSearch(const Graph& g, long long budget, const std::vector<std::pair<int, int>>& forced)
      : g_(g), n_(g.n), adj_(adjacency(g)), budget_(budget), forced_(g.n), on_path_(g.n, 0),
        usable_(g.n, 0) {
    EdgeLookup look(g);
    for (auto [u, v] : forced) {
      if (u < 0 || v < 0 || u >= n_ || v >= n_ || !look.adjacent(u, v))
        throw Error("bad-forced-edge", "forced edge is not an edge of the graph");
      forced_[u].push_back(v);
      forced_[v].push_back(u);
    }
    forced_list_ = forced;
  }

  ExactResult run() {
    ExactResult r;
    if (n_ < 3) return r;
    for (int v = 0; v < n_; ++v)
      if (adj_[v].size() < 2 || forced_[v].size() > 2) return r;
    if (forced_list_.size() > static_cast<std::size_t>(n_)) return r;
    start_ = 0;
    for (int v = 1; v < n_; ++v)
      if (adj_[v].size() < adj_[start_].size()) start_ = v;
    for (int v = 0; v < n_; ++v) usable_[v] = static_cast<int>(adj_[v].size());
    path_.push_back(start_);
    on_path_[start_] = 1;
    try {
      if (extend()) {
        r.status = ExactResult::Status::found;
        r.cycle.order = path_;
      }
    } catch (const Exhausted&) {
      r.status = ExactResult::Status::budget_exceeded;
    }
    return r;
  }

 private:
  struct Exhausted {};

  bool closes() const {
    int end = path_.back();
    if (!std::binary_search(sorted_adj(end).begin(), sorted_adj(end).end(), start_)) return false;
    // every forced edge must lie on the cycle
    std::vector<int> at(n_);
    for (int i = 0; i < n_; ++i) at[path_[i]] = i;
    for (auto [u, v] : forced_list_) {
      int d = std::abs(at[u] - at[v]);
      if (d != 1 && d != n_ - 1) return false;
    }
    return true;
  }

  const std::vector<int>& sorted_adj(int v) const {
    if (sorted_.empty()) {
      sorted_ = adj_;
      for (auto& l : sorted_) std::sort(l.begin(), l.end());
    }
    return sorted_[v];
  }

  // Every unvisited vertex still has two usable neighbours (unvisited or a
  // path end), and the unvisited vertices plus both ends are connected.
  bool feasible() const {
    int end = path_.back();
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{end};
    seen[end] = 1;
    int reached = 0;
    bool start_reached = path_.size() == 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj_[u]) {
        if (w == start_) start_reached = true;
        if (seen[w] || on_path_[w]) continue;
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
    int left = n_ - static_cast<int>(path_.size());
    return reached == left && (start_reached || left == 0);
  }

  bool extend() {
    if (--budget_ < 0) throw Exhausted{};
    int u = path_.back();
    if (static_cast<int>(path_.size()) == n_) return closes();
    int pred = path_.size() >= 2 ? path_[path_.size() - 2] : -1;
    std::vector<int> cands;
    bool forced_move = false;
    for (int w : forced_[u]) {
      if (w == pred) continue;
      if (path_.size() == 1) break;  // the start may close through a forced edge later
      if (on_path_[w]) return false;
      cands.assign(1, w);
      forced_move = true;
      break;
    }
    if (!forced_move) {
      for (int w : adj_[u])
        if (!on_path_[w]) cands.push_back(w);
      // fewest usable neighbours first
      std::sort(cands.begin(), cands.end(), [&](int a, int b) { return usable_[a] < usable_[b]; });
    }
    for (int w : cands) {
      // u leaves the frontier unless it is the start
      if (u != start_)
        for (int x : adj_[u]) --usable_[x];
      path_.push_back(w);
      on_path_[w] = 1;
      bool ok = true;
      if (u != start_)
        for (int x : adj_[u])
          if (!on_path_[x] && usable_[x] < 2) ok = false;
      if (ok && feasible() && extend()) return true;
      on_path_[w] = 0;
      path_.pop_back();
      if (u != start_)
        for (int x : adj_[u]) ++usable_[x];
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<std::vector<int>> adj_;
  mutable std::vector<std::vector<int>> sorted_;
  long long budget_;
  std::vector<std::vector<int>> forced_;
  std::vector<std::pair<int, int>> forced_list_;
  std::vector<char> on_path_;
  std::vector<int> usable_;
  std::vector<int> path_;
  int start_ = 0;
};

}  // namespace detail

// Exhaustive search; `budget` bounds the number of search nodes. Forced
// edges must all lie on the returned cycle.
inline ExactResult hamiltonian_cycle_exact(const Graph& g, long long budget = 10'000'000,
                                           const std::vector<std::pair<int, int>>& forced = {}) {
  return detail::ExactSearch(g, budget, forced).run();
}

enum class PathRefutation { refuted_by_matching, inconclusive };

inline const char* to_string(PathRefutation r) {
  return r == PathRefutation::refuted_by_matching ? "refuted-by-matching" : "inconclusive";
}

// A Hamiltonian path contains a near-perfect matching.
inline PathRefutation refute_hamiltonian_path(const Graph& g) {
  auto m = max_matching(g);
  return static_cast<int>(m.matching.size()) < g.n / 2 ? PathRefutation::refuted_by_matching
                                                       : PathRefutation::inconclusive;
}

// ---------------------------------------------------------------- peeling

namespace detail {

// Hamiltonian paths in regions of a planar triangulation. A region is given
// by its boundary walk, oriented with the interior on the left; forced edges
// are boundary edges the path must use. Paths are built back to front.
class PeelSolver {
 public:
  struct BudgetExceeded {};
  using Path = std::vector<int>;       // reversed: last vertex first
  using Forced = std::vector<std::pair<int, int>>;

  PeelSolver(const std::vector<std::vector<int>>& rot, std::uint64_t seed)
      : rot_(rot), n_(static_cast<int>(rot.size())), sorted_(n_), rng_(seed), stamp_(n_, 0),
        pos_(n_, -1) {
    for (int v = 0; v < n_; ++v) {
      for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) sorted_[v].push_back({rot[v][i], i});
      std::sort(sorted_[v].begin(), sorted_[v].end());
    }
  }

  // One attempt rooted at v: a path between consecutive neighbours of v
  // through T - v, closed through v.
  std::optional<std::vector<int>> attempt(int v, long long cap, bool shuffle) {
    calls_ = 0;
    cap_ = cap;
    shuffle_ = shuffle;
    std::vector<int> link = rot_[v];
    auto f = fan(link[0], link[1], link.back());
    if (std::find(f.begin(), f.end(), v) != f.end()) std::reverse(link.begin(), link.end());
    try {
      auto p = solve(link, link.front(), link.back(), {});
      if (!p) return std::nullopt;
      p->push_back(v);
      return std::move(*p);
    } catch (const BudgetExceeded&) {
      return std::nullopt;
    }
  }

 private:
  static constexpr int kSmall = 5;

  int index(int x, int w) const {
    const auto& s = sorted_[x];
    auto it = std::lower_bound(s.begin(), s.end(), std::make_pair(w, -1));
    return it != s.end() && it->first == w ? it->second : -1;
  }
  bool adjacent(int x, int w) const { return index(x, w) >= 0; }
  int ccw(int x, int w) const {
    const auto& r = rot_[x];
    return r[(index(x, w) + 1) % r.size()];
  }
  // Neighbours of x from a to b inclusive, turning counterclockwise.
  std::vector<int> fan(int x, int a, int b) const {
    std::vector<int> out{a};
    int w = a;
    for (std::size_t guard = 0; w != b && guard < rot_[x].size(); ++guard) {
      w = ccw(x, w);
      out.push_back(w);
    }
    return out;
  }

  int fresh_stamp() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    return epoch_;
  }

  // Vertices of the region, or nothing once more than `cap` are found.
  std::optional<std::vector<int>> vertices(const std::vector<int>& B, int cap) {
    int ep = fresh_stamp();
    std::vector<int> out;
    for (int v : B)
      if (stamp_[v] != ep) {
        stamp_[v] = ep;
        out.push_back(v);
        if (static_cast<int>(out.size()) > cap) return std::nullopt;
      }
    if (B.size() < 2) return out;
    std::size_t boundary = out.size();
    const int k = static_cast<int>(B.size());
    for (int i = 0; i < k; ++i) {
      int x = B[i], prev = B[(i + k - 1) % k], next = B[(i + 1) % k];
      if (next == prev) continue;
      auto f = fan(x, next, prev);
      for (std::size_t j = 1; j + 1 < f.size(); ++j)
        if (stamp_[f[j]] != ep) {
          stamp_[f[j]] = ep;
          out.push_back(f[j]);
          if (static_cast<int>(out.size()) > cap) return std::nullopt;
        }
    }
    for (std::size_t i = boundary; i < out.size(); ++i)
      for (int w : rot_[out[i]])
        if (stamp_[w] != ep) {
          stamp_[w] = ep;
          out.push_back(w);
          if (static_cast<int>(out.size()) > cap) return std::nullopt;
        }
    return out;
  }

  static bool has_edge(const Forced& F, int a, int b) {
    for (auto [u, v] : F)
      if ((u == a && v == b) || (u == b && v == a)) return true;
    return false;
  }

  std::optional<Path> brute(const std::vector<int>& V, int a, int b, const Forced& F) {
    const int n = static_cast<int>(V.size());
    if (a == b) return n == 1 ? std::optional<Path>(Path{a}) : std::nullopt;
    auto in_v = [&](int w) { return std::find(V.begin(), V.end(), w) != V.end(); };
    auto fnb = [&](int u) {
      std::vector<int> out;
      for (auto [p, q] : F) {
        if (p == u) out.push_back(q);
        if (q == u) out.push_back(p);
      }
      return out;
    };
    for (int v : V)
      if (fnb(v).size() > 2) return std::nullopt;
    Path path{a};
    std::vector<int> used{a};
    auto is_used = [&](int w) { return std::find(used.begin(), used.end(), w) != used.end(); };
    std::function<bool(int)> dfs = [&](int u) {
      if (static_cast<int>(path.size()) == n) return u == b;
      auto fu = fnb(u);
      for (int w : fu)
        if (is_used(w) && (path.size() < 2 || w != path[path.size() - 2])) return false;
      std::vector<int> opts;
      for (int w : fu)
        if (!is_used(w)) opts.push_back(w);
      if (opts.empty())
        for (int w : rot_[u])
          if (in_v(w) && !is_used(w)) opts.push_back(w);
      for (int w : opts) {
        if (w == b && static_cast<int>(path.size()) != n - 1) continue;
        used.push_back(w);
        path.push_back(w);
        if (dfs(w)) return true;
        path.pop_back();
        used.pop_back();
      }
      return false;
    };
    if (!dfs(a)) return std::nullopt;
    std::reverse(path.begin(), path.end());
    return path;
  }

  // Refutations are exact, so failed subproblems are remembered across
  // attempts. Keys are 64-bit hashes; a collision can only cost a miss.
  static std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h * 0xff51afd7ed558ccdULL;
  }
  static std::uint64_t key_of(const std::vector<int>& B, int x, int y, const Forced& F) {
    std::uint64_t h = mix(mix(B.size(), x), y);
    for (int v : B) h = mix(h, v);
    std::vector<std::uint64_t> fs;
    for (auto [u, v] : F) fs.push_back(pair_key(std::min(u, v), std::max(u, v)));
    std::sort(fs.begin(), fs.end());
    for (auto f : fs) h = mix(h, f);
    return h;
  }

  std::optional<Path> solve(const std::vector<int>& B, int x, int y, const Forced& F) {
    if (++calls_ > cap_) throw BudgetExceeded{};
    if (B.size() <= 2 * kSmall) return solve_fresh(B, x, y, F);
    std::uint64_t key = key_of(B, x, y, F);
    if (refuted_.count(key)) return std::nullopt;
    auto r = solve_fresh(B, x, y, F);
    if (!r) refuted_.insert(key);
    return r;
  }

  std::optional<Path> solve_fresh(const std::vector<int>& B, int x, int y, const Forced& F) {
    auto V = vertices(B, kSmall);
    int size = V ? static_cast<int>(V->size()) : kSmall + 1;
    if (x == y) return size == 1 ? std::optional<Path>(Path{x}) : std::nullopt;
    if (size == 2) {
      for (auto [u, v] : F)
        if (!((u == x && v == y) || (u == y && v == x))) return std::nullopt;
      return Path{y, x};
    }
    {
      std::vector<std::pair<int, int>> deg;
      auto bump = [&](int u) {
        for (auto& [w, c] : deg)
          if (w == u) return ++c;
        deg.push_back({u, 1});
        return 1;
      };
      for (auto [u, v] : F) {
        int du = bump(u), dv = bump(v);
        if (du > 2 || dv > 2) return std::nullopt;
        if ((u == x || v == x) && (u == x ? du : dv) > 1) return std::nullopt;
        if ((u == y || v == y) && (u == y ? du : dv) > 1) return std::nullopt;
      }
    }
    if (has_edge(F, x, y)) return std::nullopt;
    if (V) return brute(*V, x, y, F);

    const int k = static_cast<int>(B.size());
    int i = static_cast<int>(std::find(B.begin(), B.end(), x) - B.begin());
    int bnext = B[(i + 1) % k], bprev = B[(i + k - 1) % k];
    auto f = fan(x, bnext, bprev);
    std::vector<int> cands;
    Forced rest;
    for (auto [u, v] : F) {
      if (u == x) cands.assign(1, v);
      else if (v == x) cands.assign(1, u);
      else rest.push_back({u, v});
    }
    if (cands.empty()) cands = order(f, y);
    std::vector<int> Bp;
    Bp.reserve(k + f.size());
    Bp.insert(Bp.end(), B.begin() + i + 1, B.end());
    Bp.insert(Bp.end(), B.begin(), B.begin() + i);
    for (std::size_t j = f.size() - 1; j-- > 1;) Bp.push_back(f[j]);
    for (int t : cands) {
      if (t == y) continue;  // the region minus x has more than one vertex
      auto r = after_peel(Bp, t, y, rest);
      if (r) {
        r->push_back(x);
        return r;
      }
    }
    return std::nullopt;
  }

  std::vector<int> order(const std::vector<int>& f, int y) {
    std::vector<int> ends, mid(f.begin() + 1, f.end() - 1);
    for (int v : {f.front(), f.back()})
      if (v != y) ends.push_back(v);
    if (shuffle_) {
      std::shuffle(ends.begin(), ends.end(), rng_);
      std::shuffle(mid.begin(), mid.end(), rng_);
    }
    ends.insert(ends.end(), mid.begin(), mid.end());
    return ends;
  }

  int repeated(const std::vector<int>& W) {
    int ep = fresh_stamp();
    for (int v : W) {
      if (stamp_[v] == ep) return v;
      stamp_[v] = ep;
    }
    return -1;
  }

  std::optional<Path> after_peel(const std::vector<int>& Bp, int t, int y, const Forced& F) {
    if (repeated(Bp) >= 0) return cut_case(Bp, t, y, F);
    return two_conn(Bp, t, y, F);
  }

  static bool walk_has_edge(const std::vector<int>& W, int a, int b) {
    const std::size_t k = W.size();
    if (k < 2) return false;
    for (std::size_t i = 0; i < k; ++i) {
      int u = W[i], v = W[(i + 1) % k];
      if ((u == a && v == b) || (u == b && v == a)) return true;
    }
    return false;
  }

  // The walk passes a cut vertex c twice: the region falls apart into two
  // sides meeting at c, and the path must cross from t's side to y's at c.
  std::optional<Path> cut_case(const std::vector<int>& W, int t, int y, const Forced& F) {
    // earliest vertex in walk order that occurs twice, and its next occurrence
    int ep = fresh_stamp();
    for (int v : W) {
      if (stamp_[v] != ep) {
        stamp_[v] = ep;
        pos_[v] = 0;
      }
      ++pos_[v];
    }
    int first = 0;
    while (pos_[W[first]] < 2) ++first;
    int second = first + 1;
    while (W[second] != W[first]) ++second;
    const int c = W[first];
    std::vector<int> W1(W.begin() + first, W.begin() + second);
    std::vector<int> W2(W.begin() + second, W.end());
    W2.insert(W2.end(), W.begin(), W.begin() + first);
    auto side = [&](int v) {
      if (v == c) return 0;
      return std::find(W1.begin(), W1.end(), v) != W1.end() ? 1 : 2;
    };
    Forced F1, F2;
    for (auto [u, v] : F) {
      if (walk_has_edge(W1, u, v)) F1.push_back({u, v});
      else if (walk_has_edge(W2, u, v)) F2.push_back({u, v});
      else return std::nullopt;
    }
    int st = side(t), sy = side(y);
    if (st == 0 || sy == 0 || st == sy) return std::nullopt;
    const auto& WA = st == 1 ? W1 : W2;
    const auto& WB = st == 1 ? W2 : W1;
    auto pa = sub(WA, t, c, st == 1 ? F1 : F2);
    if (!pa) return std::nullopt;
    auto pb = sub(WB, c, y, st == 1 ? F2 : F1);
    if (!pb) return std::nullopt;
    pb->insert(pb->end(), pa->begin() + 1, pa->end());
    return pb;
  }

  std::optional<Path> sub(const std::vector<int>& W, int a, int b, const Forced& F) {
    auto V = vertices(W, 2);
    if (V && V->size() == 2) {
      if (!adjacent(a, b) || a == b) return std::nullopt;
      for (auto [u, v] : F)
        if (!((u == a && v == b) || (u == b && v == a))) return std::nullopt;
      return Path{b, a};
    }
    if (repeated(W) >= 0) return cut_case(W, a, b, F);
    return solve(W, a, b, F);
  }

  // Simple boundary: split along chords. A chord one of whose open sides
  // holds neither t nor y cuts off a part the path must enter and leave
  // through the chord's ends; that part becomes a detour solved on its own,
  // and the chord becomes a forced edge of the remaining route region.
  std::optional<Path> two_conn(const std::vector<int>& Bp, int t, int y, const Forced& F) {
    const int m = static_cast<int>(Bp.size());
    int ep = fresh_stamp();
    for (int i = 0; i < m; ++i) {
      stamp_[Bp[i]] = ep;
      pos_[Bp[i]] = i;
    }
    if (stamp_[t] != ep || stamp_[y] != ep) return std::nullopt;
    const int pt = pos_[t], py = pos_[y];
    struct Hang {
      int i, j;  // closed arc Bp[i..j] walking forward (cyclically)
      int len;
    };
    std::vector<Hang> hangs;
    bool any_chord = false;
    auto strictly_between = [&](int p, int i, int j) {  // p in open arc i -> j
      if (i < j) return i < p && p < j;
      return p > i || p < j;
    };
    for (int i = 0; i < m; ++i) {
      int u = Bp[i];
      for (int w : rot_[u]) {
        if (stamp_[w] != ep || u > w) continue;
        int j = pos_[w];
        int d = ((i - j) % m + m) % m;
        if (d == 1 || d == m - 1) continue;
        any_chord = true;
        bool in1 = strictly_between(pt, i, j) || strictly_between(py, i, j);
        bool in2 = strictly_between(pt, j, i) || strictly_between(py, j, i);
        if (!in1 && !in2) return std::nullopt;
        if (!in1) hangs.push_back({i, j, ((j - i) % m + m) % m});
        else if (!in2) hangs.push_back({j, i, ((i - j) % m + m) % m});
      }
    }
    if (!any_chord) return solve(Bp, t, y, F);
    // outermost hanging arcs only
    std::sort(hangs.begin(), hangs.end(), [](const Hang& a, const Hang& b) { return a.len > b.len; });
    std::vector<char> covered(m, 0);
    std::vector<Hang> outer;
    for (const Hang& h : hangs) {
      int inner = (h.i + 1) % m;
      if (covered[inner]) continue;
      for (int p = inner; p != h.j; p = (p + 1) % m) covered[p] = 1;
      outer.push_back(h);
    }
    std::vector<int> Br;
    for (int p = 0; p < m; ++p)
      if (!covered[p]) Br.push_back(Bp[p]);
    Forced Fr;
    std::vector<Forced> Fh(outer.size());
    for (auto [u, v] : F) {
      int pu = pos_[u], pv = pos_[v];
      int lo = ((pv - pu) % m + m) % m == 1 ? pu : pv;  // edge Bp[lo] -> Bp[lo+1]
      int hi = (lo + 1) % m;
      int h = -1;
      for (int q = 0; q < static_cast<int>(outer.size()); ++q) {
        const Hang& H = outer[q];
        bool lo_in = lo == H.i || strictly_between(lo, H.i, H.j);
        bool hi_in = hi == H.j || strictly_between(hi, H.i, H.j);
        if (lo_in && hi_in) h = q;
      }
      if (h >= 0) Fh[h].push_back({u, v});
      else Fr.push_back({u, v});
    }
    std::vector<Path> detours;
    std::unordered_map<std::uint64_t, int> detour_of;
    for (int h = 0; h < static_cast<int>(outer.size()); ++h) {
      const Hang& H = outer[h];
      std::vector<int> Bh;
      for (int p = H.i;; p = (p + 1) % m) {
        Bh.push_back(Bp[p]);
        if (p == H.j) break;
      }
      int a = Bp[H.i], c = Bp[H.j];
      auto p = solve(Bh, a, c, Fh[h]);
      if (!p) return std::nullopt;
      detour_of[pair_key(a, c)] = static_cast<int>(detours.size());
      detours.push_back(std::move(*p));
      Fr.push_back({a, c});
    }
    auto rp = solve(Br, t, y, Fr);
    if (!rp) return std::nullopt;
    Path out;
    out.reserve(rp->size() * 2);
    out.push_back((*rp)[0]);
    for (std::size_t i = 0; i + 1 < rp->size(); ++i) {
      int u = (*rp)[i], w = (*rp)[i + 1];
      auto it = detour_of.find(pair_key(u, w));
      if (it != detour_of.end()) {
        const Path* det = &detours[it->second];
        // det runs from its chord's second end back to its first
        if (det->front() == u)
          out.insert(out.end(), det->begin() + 1, det->end());
        else
          out.insert(out.end(), det->rbegin() + 1, det->rend());
      } else {
        out.push_back(w);
      }
    }
    return out;
  }

  const std::vector<std::vector<int>>& rot_;
  int n_;
  std::vector<std::vector<std::pair<int, int>>> sorted_;
  std::mt19937_64 rng_;
  std::vector<int> stamp_;
  std::vector<int> pos_;
  int epoch_ = 0;
  long long calls_ = 0;
  long long cap_ = 0;
  bool shuffle_ = false;
  std::unordered_set<std::uint64_t> refuted_;
};

// Runs f on a thread with a large stack; the peeling recursion is about n
// frames deep.
template <class F>
void run_with_stack(F&& f, std::size_t bytes) {
  struct Box {
    F* fn;
    std::exception_ptr err;
  } box{&f, nullptr};
  auto tramp = [](void* p) -> void* {
    auto* b = static_cast<Box*>(p);
    try {
      (*b->fn)();
    } catch (...) {
      b->err = std::current_exception();
    }
    return nullptr;
  };
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, bytes);
  pthread_t th;
  if (pthread_create(&th, &attr, tramp, &box) != 0) {
    pthread_attr_destroy(&attr);
    f();
    return;
  }
  pthread_join(th, nullptr);
  pthread_attr_destroy(&attr);
  if (box.err) std::rethrow_exception(box.err);
}

}  // namespace detail

struct FinderOptions {
  int attempts = 64;
  long long exact_budget = 20'000'000;
  int exact_max_n = 64;  // larger inputs skip the exact fallback
  std::uint64_t seed = 1;
};

// Hamiltonian cycle of a 4-connected planar triangulation.
inline HamiltonianCycle hamiltonian_cycle_planar4ct(const Drawing& d, const FinderOptions& opt = {}) {
  if (d.num_crossings() != 0) throw Error("has-crossings", "drawing has crossings");
  Embedded em = embed(d);
  if (!is_triangulated(em)) throw Error("not-triangulated", "drawing is not triangulated");
  if (d.n() < 4) throw Error("too-small", "need n >= 4");
  if (auto tri = find_uncrossed_separating_triangle(d, em))
    throw WitnessError("separating-triangle", "separating triangle present",
                       triangle_witness(d, em, *tri));
  const Graph& g = d.graph;
  HamiltonianCycle h;
  if (g.n == 4) {
    h.order = {0, 1, 2, 3};
    return h;
  }
  auto rot = vertex_rotation(d);
  std::optional<std::vector<int>> found;
  detail::run_with_stack(
      [&] {
        detail::PeelSolver solver(rot, opt.seed);
        std::mt19937_64 pick(opt.seed);
        for (int a = 0; a < opt.attempts && !found; ++a) {
          int v = a == 0 ? 0 : static_cast<int>(pick() % static_cast<std::uint64_t>(g.n));
          // refutations carry over between attempts, so later ones get more room
          found = solver.attempt(v, (3LL + a / 2) * g.n + 50, a > 0);
        }
      },
      std::size_t(1) << 30);
  if (found) {
    h.order = std::move(*found);
    if (verify_cycle(g, h)) return h;
  }
  if (g.n > opt.exact_max_n) throw Error("search-failed", "peeling attempts exhausted");
  auto ex = hamiltonian_cycle_exact(g, opt.exact_budget);
  if (ex.status == ExactResult::Status::found && verify_cycle(g, ex.cycle)) return ex.cycle;
  throw Error("search-failed", std::string("no cycle found; exact search ") + to_string(ex.status));
}

enum class Provenance { base_case, via_planarization };

inline const char* to_string(Provenance p) {
  return p == Provenance::base_case ? "base-case" : "via-planarization";
}

struct PipelineResult {
  HamiltonianCycle cycle;
  Provenance provenance = Provenance::base_case;
};

// Hamiltonian cycle of a 4-connected triangulated 1-plane drawing.
inline PipelineResult pipeline(const Drawing& d, const FinderOptions& opt = {}) {
  Embedded em = embed(d);
  if (!is_triangulated(em)) throw Error("not-triangulated", "drawing is not triangulated");
  const Graph& g = d.graph;
  PipelineResult res;
  if (g.n <= 5) {
    // K4, K5 and K5 minus an edge are the only triangulated drawings with
    // 4 <= n <= 5
    long long full = 1LL * g.n * (g.n - 1) / 2;
    bool base = g.n >= 4 && (g.m() == full || (g.n == 5 && g.m() == full - 1));
    if (!base) throw Error("not-4-connected", "graph is not one of K4, K5, K5 minus an edge");
    auto ex = hamiltonian_cycle_exact(g, 1'000'000);
    if (ex.status != ExactResult::Status::found || !verify_cycle(g, ex.cycle))
      throw Error("search-failed", "base case has no cycle");
    res.cycle = ex.cycle;
    res.provenance = Provenance::base_case;
    return res;
  }
  if (auto tri = find_uncrossed_separating_triangle(d, em))
    throw WitnessError("not-4-connected", "uncrossed separating triangle present",
                       triangle_witness(d, em, *tri));
  auto planar = planarize(d);
  res.cycle = hamiltonian_cycle_planar4ct(planar.drawing, opt);
  res.provenance = Provenance::via_planarization;
  if (!verify_cycle(g, res.cycle)) throw Error("search-failed", "cycle does not verify");
  return res;
}

}  // namespace oneplane
