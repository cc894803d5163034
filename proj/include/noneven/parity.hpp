#pragma once

#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

#include "noneven/cycles.hpp"
#include "noneven/digraph.hpp"
#include "noneven/pattern_ops.hpp"
#include "noneven/sign.hpp"

namespace noneven {

using ArcWeighting = std::vector<uint8_t>;  // parallel to the arc list

struct WeakDoubleCycleCert {
  int k = 0;                   // odd
  Digraph pattern;             // the weak k-double-cycle embedded
  std::vector<int> embedding;  // pattern vertex -> host vertex
};

struct ParityVerdict {
  bool even = false;
  std::optional<Cycle> even_cycle;          // witness when a weighting is even
  std::optional<ArcWeighting> weighting;    // witness when a digraph is noneven
  std::optional<WeakDoubleCycleCert> cert;  // witness when a digraph is even
};

inline int cycle_weight(const WeightedDigraph& wd, const Cycle& c) {
  int w = 0, k = c.length();
  for (int i = 0; i < k; ++i)
    w += wd.weight_of(c.verts[static_cast<size_t>(i)],
                      c.verts[static_cast<size_t>((i + 1) % k)]);
  return w;
}

// Even iff some simple directed cycle has even total weight.
inline ParityVerdict is_even_weighted(const WeightedDigraph& wd) {
  ParityVerdict v;
  for_each_cycle(wd.base, [&](const Cycle& c) {
    if (v.even) return;
    if (cycle_weight(wd, c) % 2 == 0) {
      v.even = true;
      v.even_cycle = c;
    }
  });
  return v;
}

namespace detail {

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace detail

// Searches {0,1} arc weightings for one under which every cycle is odd.
// Weightings are enumerated modulo vertex switching: a spanning forest of the
// underlying undirected graph is pinned to weight 0, leaving 2^(m-n+c) cases.
inline std::optional<ArcWeighting> find_noneven_weighting(const Digraph& d) {
  auto cycles = enumerate_cycles(d);
  auto carcs = cycle_arc_indices(d, cycles);
  // short cycles first: cheaper rejection
  std::sort(carcs.begin(), carcs.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });

  int m = d.arc_count();
  detail::DisjointSet ds(d.order());
  std::vector<int> free_arcs;
  for (int i = 0; i < m; ++i) {
    const Arc& a = d.arcs()[static_cast<size_t>(i)];
    if (!ds.join(a.first, a.second)) free_arcs.push_back(i);
  }
  ArcWeighting w(static_cast<size_t>(m), 0);
  uint64_t cases = uint64_t{1} << free_arcs.size();
  for (uint64_t mask = 0; mask < cases; ++mask) {
    for (size_t i = 0; i < free_arcs.size(); ++i)
      w[static_cast<size_t>(free_arcs[i])] = (mask >> i) & 1;
    bool all_odd = true;
    for (const auto& idx : carcs) {
      int s = 0;
      for (int ai : idx) s += w[static_cast<size_t>(ai)];
      if (s % 2 == 0) {
        all_odd = false;
        break;
      }
    }
    if (all_odd) return w;
  }
  return std::nullopt;
}

// Same search without the switching reduction (all 2^m weightings); used as
// an independent route in tests.
inline std::optional<ArcWeighting> find_noneven_weighting_full(const Digraph& d) {
  auto cycles = enumerate_cycles(d);
  auto carcs = cycle_arc_indices(d, cycles);
  int m = d.arc_count();
  if (m > 24) throw std::invalid_argument("find_noneven_weighting_full: too many arcs");
  ArcWeighting w(static_cast<size_t>(m), 0);
  for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
    for (int i = 0; i < m; ++i) w[static_cast<size_t>(i)] = (mask >> i) & 1;
    bool all_odd = true;
    for (const auto& idx : carcs) {
      int s = 0;
      for (int ai : idx) s += w[static_cast<size_t>(ai)];
      if (s % 2 == 0) {
        all_odd = false;
        break;
      }
    }
    if (all_odd) return w;
  }
  return std::nullopt;
}

// ---- weak double cycles ----

inline bool is_double_cycle(const Digraph& d, int* k_out = nullptr) {
  int n = d.order();
  if (n < 2) return false;
  if (n == 2) {
    if (d.arc_count() != 2) return false;
    if (k_out) *k_out = 2;
    return true;
  }
  if (d.arc_count() != 2 * n || !is_symmetric(d)) return false;
  auto in = d.indegrees(), out = d.outdegrees();
  for (int v = 0; v < n; ++v)
    if (in[v] != 2 || out[v] != 2) return false;
  if (!is_strong(d)) return false;
  if (k_out) *k_out = n;
  return true;
}

struct WdcEntry {
  Digraph d;
  int k;
};

// All weak k-double-cycles on at most n_max vertices: the closure of the
// double cycles under arc subdivision and vertex splitting, one representative
// per isomorphism class. Built once and cached.
inline const std::vector<WdcEntry>& weak_double_cycle_library(int n_max = 7) {
  static std::map<int, std::vector<WdcEntry>> cache;
  auto it = cache.find(n_max);
  if (it != cache.end()) return it->second;

  std::vector<WdcEntry> lib;
  // one representative per (isomorphism class, source k) pair
  std::unordered_set<uint64_t> seen;
  auto key = [](const Digraph& d, int k) {
    return (canonical_id(d) << 8) | static_cast<uint64_t>(d.order() << 4) |
           static_cast<uint64_t>(k);
  };
  std::vector<WdcEntry> frontier;
  for (int k = 2; k <= n_max; ++k) {
    Digraph ck = double_cycle(k);
    if (seen.insert(key(ck, k)).second) frontier.push_back({ck, k});
  }
  while (!frontier.empty()) {
    std::vector<WdcEntry> next;
    for (const WdcEntry& e : frontier) {
      lib.push_back(e);
      if (e.d.order() >= n_max) continue;
      for (const Arc& a : e.d.arcs()) {
        Digraph s = subdivide(e.d, a.first, a.second);
        if (seen.insert(key(s, e.k)).second) next.push_back({s, e.k});
      }
      for (int v = 0; v < e.d.order(); ++v) {
        Digraph s = split(e.d, v);
        if (seen.insert(key(s, e.k)).second) next.push_back({s, e.k});
      }
    }
    frontier = std::move(next);
  }
  std::sort(lib.begin(), lib.end(), [](const WdcEntry& a, const WdcEntry& b) {
    if (a.d.order() != b.d.order()) return a.d.order() < b.d.order();
    return a.d.arc_count() < b.d.arc_count();
  });
  return cache.emplace(n_max, std::move(lib)).first->second;
}

// Seymour-Thomassen certificate: an odd weak double cycle embedded as a
// subdigraph. Exact for hosts with at most n_max vertices.
inline std::optional<WeakDoubleCycleCert> find_weak_double_cycle(const Digraph& host,
                                                                 int n_max = 7) {
  if (host.order() > n_max)
    throw std::invalid_argument("find_weak_double_cycle: host exceeds library bound");
  for (const WdcEntry& e : weak_double_cycle_library(n_max)) {
    if (e.k % 2 == 0 || e.k < 3) continue;
    if (e.d.order() > host.order() || e.d.arc_count() > host.arc_count()) continue;
    if (auto emb = find_embedding(e.d, host))
      return WeakDoubleCycleCert{e.k, e.d, *emb};
  }
  return std::nullopt;
}

// Exact reverse reduction: undo subdivisions (suppress an id=od=1 vertex) and
// splits (contract an arc (v1,v2) with od(v1)=id(v2)=1). Ties go to the
// lowest vertex index, suppression first. Accepts iff the irreducible result
// is C_k* for some k >= 3.
inline std::pair<bool, int> recognize_weak_double_cycle(const Digraph& input) {
  Digraph d = input;
  for (;;) {
    auto in = d.indegrees(), out = d.outdegrees();
    int best = -1, bu = -1, bv = -1;
    bool suppress = false;
    // inverse subdivision
    for (int w = 0; w < d.order(); ++w) {
      if (in[w] != 1 || out[w] != 1) continue;
      int u = d.in_neighbors(w)[0], v = d.out_neighbors(w)[0];
      if (u == v || d.has_arc(u, v)) continue;
      best = w;
      bu = u;
      bv = v;
      suppress = true;
      break;
    }
    // inverse split
    for (int v1 = 0; v1 < d.order() && (best < 0 || v1 < best); ++v1) {
      if (out[v1] != 1) continue;
      int v2 = d.out_neighbors(v1)[0];
      if (in[v2] != 1 || d.has_arc(v2, v1)) continue;
      best = v1;
      bu = v1;
      bv = v2;
      suppress = false;
      break;
    }
    if (best < 0) break;
    if (suppress) {
      Digraph r = d.without_vertex(best);
      int u = bu < best ? bu : bu - 1;
      int v = bv < best ? bv : bv - 1;
      r.add_arc(u, v);
      d = r;
    } else {
      // merge bv into bu: bu keeps its in-arcs, takes bv's out-arcs
      Digraph r(d.order());
      for (const Arc& a : d.arcs()) {
        if (a == Arc{bu, bv}) continue;
        int from = a.first == bv ? bu : a.first;
        int to = a.second == bv ? bu : a.second;
        r.add_arc(from, to);
      }
      d = r.without_vertex(bv);
    }
  }
  int k = 0;
  if (is_double_cycle(d, &k) && k >= 3) return {true, k};
  return {false, 0};
}

// Unweighted parity decision with witness either way.
inline ParityVerdict is_noneven_unweighted(const Digraph& d) {
  ParityVerdict v;
  if (auto w = find_noneven_weighting(d)) {
    v.even = false;
    v.weighting = *w;
  } else {
    v.even = true;
    v.cert = find_weak_double_cycle(d);
  }
  return v;
}

// Cheap-first evenness flag: certificate search, which is exact for n <= 7.
inline bool is_even_digraph(const Digraph& d) {
  return find_weak_double_cycle(d).has_value();
}

// ---- sign-nonsingularity ----

// All nonzero permutation terms sgn(sigma) * prod H share one sign, and at
// least one term is nonzero. Enumeration is guarded at n <= 8.
inline bool is_sns(const SignPattern& h) {
  int n = h.order();
  if (n > 8) throw std::invalid_argument("is_sns: order > 8 not supported");
  int seen_sign = 0;
  bool ok = true;
  detail::permutations(n, [&](const std::vector<int>& p) {
    if (!ok) return;
    int term = 1;
    for (int i = 0; i < n; ++i) term *= h.at(i, p[i]);
    if (term == 0) return;
    // permutation parity
    int par = 1;
    std::vector<char> vis(n, 0);
    for (int i = 0; i < n; ++i) {
      if (vis[i]) continue;
      int len = 0;
      for (int j = i; !vis[j]; j = p[j]) {
        vis[j] = 1;
        ++len;
      }
      if (len % 2 == 0) par = -par;
    }
    term *= par;
    if (seen_sign == 0) seen_sign = term;
    else if (seen_sign != term) ok = false;
  });
  return ok && seen_sign != 0;
}

}  // namespace noneven
