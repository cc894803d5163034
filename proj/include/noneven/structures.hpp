#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "noneven/cycles.hpp"
#include "noneven/digraph.hpp"
#include "noneven/parity.hpp"

namespace noneven {

struct NotTwoConnected : std::invalid_argument {
  NotTwoConnected() : std::invalid_argument("graph is not 2-connected") {}
};

// ---- C4-cockades ----

// Each step names an existing edge (u, v); the step attaches u', v' with
// edges (u,u'), (u',v'), (v',v). Step 0 starts from C4 on vertices 0..3.
struct CockadeSpec {
  std::vector<Arc> steps;
};

inline UndirectedGraph build_cockade(const CockadeSpec& spec) {
  UndirectedGraph g = UndirectedGraph::cycle(4);
  for (size_t t = 0; t < spec.steps.size(); ++t) {
    auto [u, v] = spec.steps[t];
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v))
      throw std::invalid_argument("build_cockade: step " + std::to_string(t) +
                                  " names a missing edge");
    UndirectedGraph next(g.order() + 2);
    for (const Arc& e : g.edges()) next.add_edge(e.first, e.second);
    int up = g.order(), vp = g.order() + 1;
    next.add_edge(u, up);
    next.add_edge(up, vp);
    next.add_edge(vp, v);
    g = next;
  }
  return g;
}

// ---- reduced cycles ----

// Cycles whose vertex set induces no chord.
inline std::vector<std::vector<int>> reduced_cycles(const UndirectedGraph& g) {
  std::vector<std::vector<int>> out;
  for (const auto& cyc : enumerate_undirected_cycles(g)) {
    int k = static_cast<int>(cyc.size());
    bool chord = false;
    for (int i = 0; i < k && !chord; ++i)
      for (int j = i + 1; j < k && !chord; ++j) {
        bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
        if (!consecutive && g.has_edge(cyc[static_cast<size_t>(i)], cyc[static_cast<size_t>(j)]))
          chord = true;
      }
    if (!chord) out.push_back(cyc);
  }
  return out;
}

// ---- the odd-cycle / three-paths evenness criterion ----

struct EvenGraphWitness {
  bool odd_cycle = false;                // G itself is C_n, n odd
  std::pair<int, int> endpoints{-1, -1};
  std::vector<std::vector<int>> paths;   // three internally disjoint paths
};

namespace detail {

// All simple a-b paths, reduced to one representative per
// (internal-vertex set, length parity).
struct PathRep {
  uint32_t internal_mask;
  int parity;  // length mod 2
  std::vector<int> verts;
};

inline std::vector<PathRep> path_reps(const UndirectedGraph& g, int a, int b) {
  std::vector<PathRep> reps;
  std::unordered_set<uint64_t> seen;
  std::vector<int> path{a};
  std::vector<char> used(g.order(), 0);
  used[a] = 1;
  std::function<void(int)> dfs = [&](int u) {
    for (int w : g.neighbors(u)) {
      if (w == b) {
        uint32_t mask = 0;
        for (size_t i = 1; i < path.size(); ++i) mask |= 1u << path[i];
        int parity = static_cast<int>(path.size()) % 2;  // length = path.size()
        if (seen.insert((uint64_t{mask} << 1) | static_cast<unsigned>(parity)).second) {
          PathRep r{mask, parity, path};
          r.verts.push_back(b);
          reps.push_back(std::move(r));
        }
      } else if (!used[w]) {
        used[w] = 1;
        path.push_back(w);
        dfs(w);
        path.pop_back();
        used[w] = 0;
      }
    }
  };
  dfs(a);
  return reps;
}

}  // namespace detail

// Proposition-style evenness test for 2-connected graphs: G is an odd cycle,
// or two vertices are joined by three internally disjoint paths, one of even
// length.
inline std::optional<EvenGraphWitness> is_even_2connected_graph(const UndirectedGraph& g) {
  if (!is_biconnected(g)) throw NotTwoConnected{};
  int n = g.order();
  // odd cycle graph
  if (g.edge_count() == n && n % 2 == 1) {
    bool two_regular = true;
    for (int v = 0; v < n; ++v)
      if (static_cast<int>(g.neighbors(v).size()) != 2) two_regular = false;
    if (two_regular && is_connected(g)) {
      EvenGraphWitness w;
      w.odd_cycle = true;
      return w;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      auto reps = detail::path_reps(g, a, b);
      size_t r = reps.size();
      for (size_t i = 0; i < r; ++i)
        for (size_t j = i + 1; j < r; ++j) {
          if (reps[i].internal_mask & reps[j].internal_mask) continue;
          for (size_t l = j + 1; l < r; ++l) {
            if ((reps[l].internal_mask & reps[i].internal_mask) ||
                (reps[l].internal_mask & reps[j].internal_mask))
              continue;
            if (reps[i].parity == 0 || reps[j].parity == 0 || reps[l].parity == 0) {
              EvenGraphWitness w;
              w.endpoints = {a, b};
              w.paths = {reps[i].verts, reps[j].verts, reps[l].verts};
              return w;
            }
          }
        }
    }
  return std::nullopt;
}

inline bool is_cockade_subgraph(const UndirectedGraph& g) {
  return !is_even_2connected_graph(g).has_value();
}

inline bool is_cockade(const UndirectedGraph& g) {
  if (!is_cockade_subgraph(g)) return false;
  for (const auto& c : reduced_cycles(g))
    if (c.size() != 4) return false;
  return true;
}

// ---- extended caterpillars ----

// Backbone path x_1..x_k; blossoms[j] counts pendants at backbone position
// j+2 (positions 2..k-1).
struct CaterpillarSpec {
  int k = 2;
  std::vector<int> blossoms;

  int total_vertices() const {
    int n = k;
    for (int b : blossoms) n += b;
    return n;
  }
};

inline Digraph build_extended_caterpillar(const CaterpillarSpec& spec) {
  if (spec.k < 2) throw std::invalid_argument("caterpillar: backbone length >= 2");
  int interior = std::max(0, spec.k - 2);
  if (static_cast<int>(spec.blossoms.size()) > interior)
    throw std::invalid_argument("caterpillar: blossom list longer than interior backbone");
  for (int b : spec.blossoms)
    if (b < 0) throw std::invalid_argument("caterpillar: negative blossom count");

  int n = spec.total_vertices();
  // backbone x_j -> vertex j-1; pendants appended in blossom order
  std::vector<int> pos(n, 0);  // backbone position, 1-based
  for (int j = 0; j < spec.k; ++j) pos[j] = j + 1;
  int next = spec.k;
  for (size_t bi = 0; bi < spec.blossoms.size(); ++bi)
    for (int c = 0; c < spec.blossoms[bi]; ++c) pos[next++] = static_cast<int>(bi) + 2;

  Digraph d(n);
  // symmetric tree arcs
  for (int j = 0; j + 1 < spec.k; ++j) {
    d.add_arc(j, j + 1);
    d.add_arc(j + 1, j);
  }
  for (int v = spec.k; v < n; ++v) {
    int xj = pos[v] - 1;
    d.add_arc(v, xj);
    d.add_arc(xj, v);
  }
  // descending arcs across blossom positions
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (pos[u] > pos[v] && !d.has_arc(u, v)) d.add_arc(u, v);
  // transitive tournament among pendants of one blossom, higher index wins
  for (int u = spec.k; u < n; ++u)
    for (int v = spec.k; v < u; ++v)
      if (pos[u] == pos[v]) d.add_arc(u, v);
  return d;
}

// One representative per isomorphism class of extended caterpillars on n
// vertices.
inline std::vector<Digraph> all_extended_caterpillars(int n) {
  if (n < 2) throw std::invalid_argument("all_extended_caterpillars: n >= 2");
  std::vector<Digraph> out;
  std::unordered_set<uint64_t> seen;
  for (int k = 2; k <= n; ++k) {
    int interior = std::max(0, k - 2);
    int pendants = n - k;
    if (pendants > 0 && interior == 0) continue;
    std::vector<int> blossoms(static_cast<size_t>(interior), 0);
    std::function<void(int, int)> rec = [&](int idx, int left) {
      if (idx == interior) {
        if (left != 0) return;
        Digraph d = build_extended_caterpillar({k, blossoms});
        if (seen.insert(canonical_id(d)).second) out.push_back(d);
        return;
      }
      for (int c = 0; c <= left; ++c) {
        blossoms[static_cast<size_t>(idx)] = c;
        rec(idx + 1, left - c);
      }
      blossoms[static_cast<size_t>(idx)] = 0;
    };
    rec(0, pendants);
  }
  return out;
}

inline bool is_extended_caterpillar(const Digraph& d) {
  if (d.order() < 2 || d.order() > 7)
    throw std::invalid_argument("is_extended_caterpillar: supported for 2 <= n <= 7");
  for (const Digraph& c : all_extended_caterpillars(d.order()))
    if (isomorphic(d, c)) return true;
  return false;
}

inline bool is_extended_caterpillar_subdigraph(const Digraph& d) {
  if (d.order() > 7)
    throw std::invalid_argument("is_extended_caterpillar_subdigraph: n > 7 unsupported");
  if (d.order() < 2) return d.order() == 1;
  for (const Digraph& c : all_extended_caterpillars(d.order()))
    if (find_embedding(d, c)) return true;
  return false;
}

// ---- W4 ----

// The unique 4-vertex semi-complete, strongly 2-connected, noneven digraph
// with eight arcs and all in/out degrees two; located by enumeration.
inline const Digraph& w4() {
  static const Digraph instance = [] {
    std::vector<Arc> slots;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) slots.push_back({i, j});
    std::optional<Digraph> found;
    for (uint32_t mask = 0; mask < (1u << 12); ++mask) {
      if (__builtin_popcount(mask) != 8) continue;
      Digraph d(4);
      for (size_t s = 0; s < slots.size(); ++s)
        if (mask & (1u << s)) d.add_arc(slots[s].first, slots[s].second);
      auto in = d.indegrees(), out = d.outdegrees();
      bool deg_ok = true;
      for (int v = 0; v < 4; ++v)
        if (in[v] != 2 || out[v] != 2) deg_ok = false;
      if (!deg_ok || !is_semi_complete(d) || !is_strongly_2connected(d)) continue;
      if (!find_noneven_weighting(d)) continue;
      if (found && !isomorphic(*found, d))
        throw std::logic_error("w4: candidate not unique");
      if (!found) found = d;
    }
    if (!found) throw std::logic_error("w4: no candidate found");
    return *found;
  }();
  return instance;
}

}  // namespace noneven
