#pragma once

#include <functional>
#include <vector>

#include "noneven/digraph.hpp"

namespace noneven {

// A simple directed cycle as a vertex sequence v0 -> v1 -> ... -> v0,
// normalized to start at its smallest vertex.
struct Cycle {
  std::vector<int> verts;
  int length() const { return static_cast<int>(verts.size()); }
};

// Enumerates every simple directed cycle exactly once: backtracking from each
// start vertex s, visiting only vertices >= s.
inline void for_each_cycle(const Digraph& d, const std::function<void(const Cycle&)>& f) {
  int n = d.order();
  std::vector<std::vector<int>> adj(n);
  for (const Arc& a : d.arcs()) adj[a.first].push_back(a.second);

  std::vector<char> on_path(n, 0);
  std::vector<int> path;
  int start = 0;
  std::function<void(int)> dfs = [&](int u) {
    for (int w : adj[u]) {
      if (w == start && path.size() >= 2) {
        f(Cycle{path});
      } else if (w > start && !on_path[w]) {
        on_path[w] = 1;
        path.push_back(w);
        dfs(w);
        path.pop_back();
        on_path[w] = 0;
      }
    }
  };
  for (start = 0; start < n; ++start) {
    on_path[start] = 1;
    path = {start};
    dfs(start);
    on_path[start] = 0;
  }
}

inline std::vector<Cycle> enumerate_cycles(const Digraph& d) {
  std::vector<Cycle> r;
  for_each_cycle(d, [&](const Cycle& c) { r.push_back(c); });
  return r;
}

// Arc-index lists per cycle, for fast parity evaluation under a weighting.
inline std::vector<std::vector<int>> cycle_arc_indices(const Digraph& d,
                                                       const std::vector<Cycle>& cycles) {
  std::vector<std::vector<int>> r;
  r.reserve(cycles.size());
  for (const Cycle& c : cycles) {
    std::vector<int> idx;
    int k = c.length();
    idx.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
      idx.push_back(d.arc_index(c.verts[static_cast<size_t>(i)],
                                c.verts[static_cast<size_t>((i + 1) % k)]));
    r.push_back(std::move(idx));
  }
  return r;
}

// Simple undirected cycles (length >= 3), each emitted once; traversal
// direction fixed by requiring the second vertex to be smaller than the last.
inline std::vector<std::vector<int>> enumerate_undirected_cycles(const UndirectedGraph& g) {
  int n = g.order();
  std::vector<std::vector<int>> adj(n);
  for (const Arc& e : g.edges()) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<std::vector<int>> out;
  std::vector<char> on_path(n, 0);
  std::vector<int> path;
  int start = 0;
  std::function<void(int)> dfs = [&](int u) {
    for (int w : adj[u]) {
      if (w == start && path.size() >= 3) {
        if (path[1] < path.back()) out.push_back(path);
      } else if (w > start && !on_path[w]) {
        on_path[w] = 1;
        path.push_back(w);
        dfs(w);
        path.pop_back();
        on_path[w] = 0;
      }
    }
  };
  for (start = 0; start < n; ++start) {
    on_path[start] = 1;
    path = {start};
    dfs(start);
    on_path[start] = 0;
  }
  return out;
}

}  // namespace noneven
