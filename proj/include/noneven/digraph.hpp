#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "noneven/sign.hpp"

namespace noneven {

using Arc = std::pair<int, int>;

// Loop-free simple digraph, vertices 0-indexed. Arc list kept sorted/unique.
class Digraph {
public:
  Digraph() = default;
  explicit Digraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("Digraph: negative order");
  }
  Digraph(int n, std::initializer_list<Arc> arcs) : Digraph(n) {
    for (const Arc& a : arcs) add_arc(a.first, a.second);
  }

  int order() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  bool has_arc(int u, int v) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
  }
  int arc_index(int u, int v) const {
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{u, v});
    if (it == arcs_.end() || *it != Arc{u, v}) return -1;
    return static_cast<int>(it - arcs_.begin());
  }

  void add_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Digraph: self-loop");
    Arc a{u, v};
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
    if (it != arcs_.end() && *it == a) return;
    arcs_.insert(it, a);
  }
  void remove_arc(int u, int v) {
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{u, v});
    if (it == arcs_.end() || *it != Arc{u, v})
      throw std::invalid_argument("Digraph: arc not present");
    arcs_.erase(it);
  }

  std::vector<int> out_neighbors(int u) const {
    std::vector<int> r;
    for (const Arc& a : arcs_)
      if (a.first == u) r.push_back(a.second);
    return r;
  }
  std::vector<int> in_neighbors(int v) const {
    std::vector<int> r;
    for (const Arc& a : arcs_)
      if (a.second == v) r.push_back(a.first);
    return r;
  }

  std::vector<int> indegrees() const {
    std::vector<int> d(n_, 0);
    for (const Arc& a : arcs_) ++d[a.second];
    return d;
  }
  std::vector<int> outdegrees() const {
    std::vector<int> d(n_, 0);
    for (const Arc& a : arcs_) ++d[a.first];
    return d;
  }

  // Subdigraph induced by keeping the listed vertices (relabeled 0..k-1).
  Digraph induced(const std::vector<int>& keep) const {
    std::vector<int> label(n_, -1);
    for (size_t i = 0; i < keep.size(); ++i) label[keep[i]] = static_cast<int>(i);
    Digraph r(static_cast<int>(keep.size()));
    for (const Arc& a : arcs_)
      if (label[a.first] >= 0 && label[a.second] >= 0)
        r.add_arc(label[a.first], label[a.second]);
    return r;
  }

  Digraph without_vertex(int v) const {
    std::vector<int> keep;
    for (int u = 0; u < n_; ++u)
      if (u != v) keep.push_back(u);
    return induced(keep);
  }

  bool operator==(const Digraph&) const = default;

private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("Digraph: vertex out of range");
  }
  int n_ = 0;
  std::vector<Arc> arcs_;
};

// Digraph plus a {0,1} weight per arc, stored parallel to the arc list.
struct WeightedDigraph {
  Digraph base;
  std::vector<uint8_t> weight;  // weight[i] is the weight of base.arcs()[i]

  WeightedDigraph() = default;
  explicit WeightedDigraph(Digraph d)
      : base(std::move(d)), weight(base.arc_count(), 0) {}
  WeightedDigraph(Digraph d, std::vector<uint8_t> w)
      : base(std::move(d)), weight(std::move(w)) {
    if (static_cast<int>(weight.size()) != base.arc_count())
      throw std::invalid_argument("WeightedDigraph: weight map not total");
  }
  int weight_of(int u, int v) const {
    int idx = base.arc_index(u, v);
    if (idx < 0) throw std::invalid_argument("WeightedDigraph: no such arc");
    return weight[static_cast<size_t>(idx)];
  }
};

// Simple undirected graph.
class UndirectedGraph {
public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("UndirectedGraph: negative order");
  }
  UndirectedGraph(int n, std::initializer_list<Arc> edges) : UndirectedGraph(n) {
    for (const Arc& e : edges) add_edge(e.first, e.second);
  }

  int order() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Arc>& edges() const { return edges_; }

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Arc{u, v});
  }
  void add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("UndirectedGraph: vertex out of range");
    if (u == v) throw std::invalid_argument("UndirectedGraph: self-edge");
    if (u > v) std::swap(u, v);
    Arc e{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return;
    edges_.insert(it, e);
  }

  std::vector<int> neighbors(int u) const {
    std::vector<int> r;
    for (const Arc& e : edges_) {
      if (e.first == u) r.push_back(e.second);
      if (e.second == u) r.push_back(e.first);
    }
    return r;
  }

  UndirectedGraph induced(const std::vector<int>& keep) const {
    std::vector<int> label(n_, -1);
    for (size_t i = 0; i < keep.size(); ++i) label[keep[i]] = static_cast<int>(i);
    UndirectedGraph r(static_cast<int>(keep.size()));
    for (const Arc& e : edges_)
      if (label[e.first] >= 0 && label[e.second] >= 0)
        r.add_edge(label[e.first], label[e.second]);
    return r;
  }

  static UndirectedGraph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    UndirectedGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
  }

  bool operator==(const UndirectedGraph&) const = default;

private:
  int n_ = 0;
  std::vector<Arc> edges_;  // normalized first < second, sorted
};

inline Digraph symmetrize(const UndirectedGraph& g) {
  Digraph d(g.order());
  for (const Arc& e : g.edges()) {
    d.add_arc(e.first, e.second);
    d.add_arc(e.second, e.first);
  }
  return d;
}

inline UndirectedGraph underlying_graph(const Digraph& d) {
  UndirectedGraph g(d.order());
  for (const Arc& a : d.arcs()) g.add_edge(a.first, a.second);
  return g;
}

inline bool is_symmetric(const Digraph& d) {
  for (const Arc& a : d.arcs())
    if (!d.has_arc(a.second, a.first)) return false;
  return true;
}

// Symmetric double cycle C_k* (k >= 2; C_2* is the single 2-cycle).
inline Digraph double_cycle(int k) {
  if (k < 2) throw std::invalid_argument("double_cycle: need k >= 2");
  Digraph d(k);
  if (k == 2) {
    d.add_arc(0, 1);
    d.add_arc(1, 0);
    return d;
  }
  for (int i = 0; i < k; ++i) {
    d.add_arc(i, (i + 1) % k);
    d.add_arc((i + 1) % k, i);
  }
  return d;
}

struct DegreeSequences {
  std::vector<int> in, out, total;  // sorted multisets
};

inline DegreeSequences degree_sequences(const Digraph& d) {
  DegreeSequences s;
  s.in = d.indegrees();
  s.out = d.outdegrees();
  s.total.resize(d.order());
  for (int v = 0; v < d.order(); ++v) s.total[v] = s.in[v] + s.out[v];
  std::sort(s.in.begin(), s.in.end());
  std::sort(s.out.begin(), s.out.end());
  std::sort(s.total.begin(), s.total.end());
  return s;
}

// ---- connectivity ----

inline bool is_strong(const Digraph& d) {
  int n = d.order();
  if (n <= 1) return true;
  auto reach = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const Arc& a : d.arcs()) {
        int from = forward ? a.first : a.second;
        int to = forward ? a.second : a.first;
        if (from == u && !seen[to]) {
          seen[to] = 1;
          stack.push_back(to);
        }
      }
    }
    return std::count(seen.begin(), seen.end(), 1) == n;
  };
  return reach(true) && reach(false);
}

// Strongly 2-connected: strong, and still strong after deleting any one vertex.
inline bool is_strongly_2connected(const Digraph& d) {
  if (d.order() < 3) return false;
  if (!is_strong(d)) return false;
  for (int v = 0; v < d.order(); ++v)
    if (!is_strong(d.without_vertex(v))) return false;
  return true;
}

inline bool is_strongly_kconnected(const Digraph& d, int k) {
  if (k <= 1) return is_strong(d);
  if (d.order() <= k) return false;
  // every deletion of up to k-1 vertices leaves a strong digraph
  std::vector<int> pick;
  std::function<bool(int, int)> rec = [&](int start, int remaining) {
    if (remaining == 0) {
      std::vector<int> keep;
      for (int v = 0; v < d.order(); ++v)
        if (std::find(pick.begin(), pick.end(), v) == pick.end()) keep.push_back(v);
      return is_strong(d.induced(keep));
    }
    for (int v = start; v < d.order(); ++v) {
      pick.push_back(v);
      bool ok = rec(v + 1, remaining - 1);
      pick.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  for (int r = 0; r <= k - 1; ++r)
    if (!rec(0, r)) return false;
  return true;
}

inline bool is_connected(const UndirectedGraph& g) {
  int n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return std::count(seen.begin(), seen.end(), 1) == n;
}

inline std::vector<int> cut_vertices(const UndirectedGraph& g) {
  int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<char> cut(n, 0);
  int timer = 0;
  std::function<void(int)> dfs = [&](int u) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (int w : g.neighbors(u)) {
      if (disc[w] < 0) {
        parent[w] = u;
        ++children;
        dfs(w);
        low[u] = std::min(low[u], low[w]);
        if (parent[u] < 0 && children > 1) cut[u] = 1;
        if (parent[u] >= 0 && low[w] >= disc[u]) cut[u] = 1;
      } else if (w != parent[u]) {
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(v);
  std::vector<int> r;
  for (int v = 0; v < n; ++v)
    if (cut[v]) r.push_back(v);
  return r;
}

inline bool is_biconnected(const UndirectedGraph& g) {
  if (g.order() < 3) return false;
  return is_connected(g) && cut_vertices(g).empty();
}

inline bool is_semi_complete(const Digraph& d) {
  for (int u = 0; u < d.order(); ++u)
    for (int v = u + 1; v < d.order(); ++v)
      if (!d.has_arc(u, v) && !d.has_arc(v, u)) return false;
  return true;
}

inline bool is_dense(const Digraph& d) {
  if (is_semi_complete(d)) return true;
  auto in = d.indegrees(), out = d.outdegrees();
  for (int v = 0; v < d.order(); ++v)
    if (in[v] + out[v] < d.order()) return false;
  return true;
}

// ---- subdivision and splitting ----

inline Digraph subdivide(const Digraph& d, int u, int v) {
  if (!d.has_arc(u, v)) throw std::invalid_argument("subdivide: arc not present");
  Digraph r(d.order() + 1);
  int w = d.order();
  for (const Arc& a : d.arcs())
    if (a != Arc{u, v}) r.add_arc(a.first, a.second);
  r.add_arc(u, w);
  r.add_arc(w, v);
  return r;
}

// Replace v with v1 = v (keeps incoming arcs) and v2 = new vertex (takes
// outgoing arcs), joined by the arc (v1, v2).
inline Digraph split(const Digraph& d, int v) {
  if (v < 0 || v >= d.order()) throw std::invalid_argument("split: no such vertex");
  Digraph r(d.order() + 1);
  int v2 = d.order();
  for (const Arc& a : d.arcs()) {
    int from = (a.first == v) ? v2 : a.first;
    r.add_arc(from, a.second);
  }
  r.add_arc(v, v2);
  return r;
}

// ---- isomorphism ----

namespace detail {
inline void permutations(int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    f(p);
  } while (std::next_permutation(p.begin(), p.end()));
}
}  // namespace detail

inline uint64_t adjacency_mask(const Digraph& d) {
  if (d.order() > 8) throw std::invalid_argument("adjacency_mask: n > 8");
  uint64_t m = 0;
  for (const Arc& a : d.arcs())
    m |= uint64_t{1} << (a.first * d.order() + a.second);
  return m;
}

// Lexicographically minimal adjacency bitmask over all vertex relabelings.
inline uint64_t canonical_id(const Digraph& d) {
  int n = d.order();
  if (n > 8) throw std::invalid_argument("canonical_id: n > 8");
  uint64_t best = ~uint64_t{0};
  detail::permutations(n, [&](const std::vector<int>& p) {
    uint64_t m = 0;
    for (const Arc& a : d.arcs())
      m |= uint64_t{1} << (p[a.first] * n + p[a.second]);
    best = std::min(best, m);
  });
  return best;
}

inline uint64_t canonical_id(const UndirectedGraph& g) {
  return canonical_id(symmetrize(g));
}

inline bool isomorphic(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
  return canonical_id(a) == canonical_id(b);
}

// Injective arc-preserving embedding of `pat` into `host` (subdigraph, not
// induced). Returns the vertex map on success.
inline std::optional<std::vector<int>> find_embedding(const Digraph& pat,
                                                      const Digraph& host) {
  int np = pat.order(), nh = host.order();
  if (np > nh || pat.arc_count() > host.arc_count()) return std::nullopt;
  auto pin = pat.indegrees(), pout = pat.outdegrees();
  auto hin = host.indegrees(), hout = host.outdegrees();

  // order pattern vertices so each (after the first) touches a placed one
  std::vector<int> order;
  std::vector<char> placed(np, 0);
  std::vector<std::vector<int>> und(np);
  for (const Arc& a : pat.arcs()) {
    und[a.first].push_back(a.second);
    und[a.second].push_back(a.first);
  }
  for (int start = 0; start < np; ++start) {
    if (placed[start]) continue;
    std::vector<int> stack{start};
    placed[start] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      order.push_back(u);
      for (int w : und[u])
        if (!placed[w]) {
          placed[w] = 1;
          stack.push_back(w);
        }
    }
  }

  std::vector<int> map(np, -1);
  std::vector<char> used(nh, 0);
  std::function<bool(size_t)> rec = [&](size_t idx) {
    if (idx == order.size()) return true;
    int u = order[idx];
    for (int h = 0; h < nh; ++h) {
      if (used[h] || hin[h] < pin[u] || hout[h] < pout[u]) continue;
      bool ok = true;
      for (int w = 0; w < np && ok; ++w) {
        if (map[w] < 0) continue;
        if (pat.has_arc(u, w) && !host.has_arc(h, map[w])) ok = false;
        if (pat.has_arc(w, u) && !host.has_arc(map[w], h)) ok = false;
      }
      if (!ok) continue;
      map[u] = h;
      used[h] = 1;
      if (rec(idx + 1)) return true;
      map[u] = -1;
      used[h] = 0;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return map;
}

// ---- file format ----
// Line 1: "n m"; next m lines: "u v" (1-based) with optional 0/1 weight.

inline WeightedDigraph parse_digraph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, 1, "missing header line");
  std::istringstream head(line);
  int n, m;
  if (!(head >> n >> m) || n < 0 || m < 0)
    throw ParseError(1, 1, "expected header 'n m'");
  std::string extra;
  if (head >> extra) throw ParseError(1, 3, "trailing tokens in header");
  Digraph d(n);
  std::vector<std::pair<Arc, uint8_t>> weighted;
  for (int i = 0; i < m; ++i) {
    if (!std::getline(in, line)) throw ParseError(i + 2, 1, "missing arc line");
    std::istringstream row(line);
    int u, v;
    if (!(row >> u >> v)) throw ParseError(i + 2, 1, "expected 'u v'");
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(i + 2, 1, "vertex out of range");
    if (u == v) throw ParseError(i + 2, 1, "self-loop not allowed");
    int w = 0;
    if (row >> w && w != 0 && w != 1)
      throw ParseError(i + 2, 3, "weight must be 0 or 1");
    if (row >> extra) throw ParseError(i + 2, 4, "trailing tokens");
    if (d.has_arc(u - 1, v - 1)) throw ParseError(i + 2, 1, "duplicate arc");
    d.add_arc(u - 1, v - 1);
    weighted.push_back({{u - 1, v - 1}, static_cast<uint8_t>(w)});
  }
  WeightedDigraph wd(d);
  for (auto& [arc, w] : weighted)
    wd.weight[static_cast<size_t>(d.arc_index(arc.first, arc.second))] = w;
  return wd;
}

inline WeightedDigraph parse_digraph(const std::string& text) {
  std::istringstream in(text);
  return parse_digraph(in);
}

inline void write_digraph(std::ostream& out, const Digraph& d) {
  out << d.order() << ' ' << d.arc_count() << '\n';
  for (const Arc& a : d.arcs()) out << a.first + 1 << ' ' << a.second + 1 << '\n';
}

inline void write_digraph(std::ostream& out, const WeightedDigraph& wd) {
  out << wd.base.order() << ' ' << wd.base.arc_count() << '\n';
  for (int i = 0; i < wd.base.arc_count(); ++i)
    out << wd.base.arcs()[i].first + 1 << ' ' << wd.base.arcs()[i].second + 1
        << ' ' << int{wd.weight[static_cast<size_t>(i)]} << '\n';
}

inline void write_graph(std::ostream& out, const UndirectedGraph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const Arc& e : g.edges()) out << e.first + 1 << ' ' << e.second + 1 << '\n';
}

inline UndirectedGraph parse_graph(std::istream& in) {
  WeightedDigraph wd = parse_digraph(in);
  UndirectedGraph g(wd.base.order());
  for (const Arc& a : wd.base.arcs()) g.add_edge(a.first, a.second);
  return g;
}

inline UndirectedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

}  // namespace noneven
