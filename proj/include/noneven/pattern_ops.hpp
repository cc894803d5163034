#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "noneven/digraph.hpp"
#include "noneven/sign.hpp"

namespace noneven {

// Weighted digraph D(H): arc (i,j) for every off-diagonal nonzero, weight 1
// on negative entries.
inline WeightedDigraph digraph_of(const SignPattern& h) {
  Digraph d(h.order());
  for (int i = 0; i < h.order(); ++i)
    for (int j = 0; j < h.order(); ++j)
      if (i != j && h.at(i, j) != 0) d.add_arc(i, j);
  WeightedDigraph wd(d);
  for (int idx = 0; idx < d.arc_count(); ++idx) {
    const Arc& a = d.arcs()[static_cast<size_t>(idx)];
    wd.weight[static_cast<size_t>(idx)] = h.at(a.first, a.second) < 0 ? 1 : 0;
  }
  return wd;
}

// Inverse lifting: weight 0 -> +1, weight 1 -> -1, fixed diagonal value.
inline SignPattern pattern_of(const WeightedDigraph& wd, int diagonal = -1) {
  SignPattern h(wd.base.order());
  for (int v = 0; v < wd.base.order(); ++v) h.set(v, v, diagonal);
  for (int idx = 0; idx < wd.base.arc_count(); ++idx) {
    const Arc& a = wd.base.arcs()[static_cast<size_t>(idx)];
    h.set(a.first, a.second, wd.weight[static_cast<size_t>(idx)] ? -1 : 1);
  }
  return h;
}

// Row/column negations followed by row/column permutations.
// apply(H)(i,j) = row_sign[i] * col_sign[j] * H(row_perm[i], col_perm[j]),
// where row_perm[i] names the source row landing in target row i.
struct SignTransform {
  std::vector<int> row_perm, col_perm;
  std::vector<int> row_sign, col_sign;  // entries +1 / -1

  static SignTransform identity(int n) {
    SignTransform t;
    t.row_perm.resize(n);
    t.col_perm.resize(n);
    for (int i = 0; i < n; ++i) t.row_perm[i] = t.col_perm[i] = i;
    t.row_sign.assign(n, 1);
    t.col_sign.assign(n, 1);
    return t;
  }

  SignPattern apply(const SignPattern& h) const {
    int n = h.order();
    SignPattern r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        r.set(i, j, row_sign[i] * col_sign[j] * h.at(row_perm[i], col_perm[j]));
    return r;
  }
};

namespace detail {

// Kuhn's augmenting-path matching on the nonzero support; match[c] = row.
// An optional partial matching seeds the search (augmenting paths may still
// reroute it, but matched pairs are only displaced when necessary).
inline std::optional<std::vector<int>> support_matching(
    int n, const std::function<bool(int, int)>& admissible,
    std::vector<int> seed = {}) {
  std::vector<int> match_col = seed.empty() ? std::vector<int>(static_cast<size_t>(n), -1)
                                            : std::move(seed);  // column -> row
  std::vector<char> matched_row(static_cast<size_t>(n), 0);
  for (int c = 0; c < n; ++c)
    if (match_col[static_cast<size_t>(c)] >= 0)
      matched_row[static_cast<size_t>(match_col[static_cast<size_t>(c)])] = 1;
  for (int r = 0; r < n; ++r) {
    if (matched_row[static_cast<size_t>(r)]) continue;
    std::vector<char> seen(n, 0);
    std::function<bool(int)> aug = [&](int row) {
      for (int c = 0; c < n; ++c) {
        if (seen[c] || !admissible(row, c)) continue;
        seen[c] = 1;
        if (match_col[c] < 0 || aug(match_col[c])) {
          match_col[c] = row;
          return true;
        }
      }
      return false;
    };
    if (!aug(r)) return std::nullopt;
  }
  return match_col;
}

}  // namespace detail

// True iff no permutation hits an all-nonzero diagonal.
inline bool is_combinatorially_singular(const SignPattern& h) {
  return !detail::support_matching(
      h.order(), [&](int r, int c) { return h.at(r, c) != 0; });
}

struct NormalizedPattern {
  SignPattern pattern;       // all-(-1) diagonal
  SignTransform transform;   // transform.apply(input) == pattern
};

// Sign-equivalent negative-diagonal form, or nullopt when combinatorially
// singular.
inline std::optional<NormalizedPattern> negative_diagonal_normalize(const SignPattern& h) {
  int n = h.order();
  // Seed the matching with the nonzero diagonal so that an already
  // negative-diagonal pattern normalizes to itself.
  std::vector<int> seed(static_cast<size_t>(n), -1);
  for (int c = 0; c < n; ++c)
    if (h.at(c, c) != 0) seed[static_cast<size_t>(c)] = c;
  auto match = detail::support_matching(
      n, [&](int r, int c) { return h.at(r, c) != 0; }, std::move(seed));
  if (!match) return std::nullopt;
  SignTransform t = SignTransform::identity(n);
  for (int c = 0; c < n; ++c) t.row_perm[c] = (*match)[c];  // row (*match)[c] -> position c
  for (int i = 0; i < n; ++i)
    t.row_sign[i] = h.at(t.row_perm[i], i) > 0 ? -1 : 1;
  return NormalizedPattern{t.apply(h), t};
}

// Decides G ~ H by brute force: all row permutations and row sign vectors,
// then a column matching on exact (+/-) column equality.
inline std::optional<SignTransform> sign_equivalent(const SignPattern& g,
                                                    const SignPattern& h) {
  if (g.order() != h.order()) throw std::invalid_argument("sign_equivalent: orders differ");
  int n = g.order();
  std::optional<SignTransform> found;
  detail::permutations(n, [&](const std::vector<int>& rp) {
    if (found) return;
    for (unsigned smask = 0; smask < (1u << n) && !found; ++smask) {
      std::vector<int> rs(n);
      for (int i = 0; i < n; ++i) rs[i] = (smask >> i) & 1 ? -1 : 1;
      // transformed row i = rs[i] * G(rp[i], *); match its columns to H's
      auto col_fits = [&](int src_col, int dst_col, int cs) {
        for (int i = 0; i < n; ++i)
          if (rs[i] * cs * g.at(rp[i], src_col) != h.at(i, dst_col)) return false;
        return true;
      };
      auto match = detail::support_matching(n, [&](int dst_col, int src_col) {
        return col_fits(src_col, dst_col, 1) || col_fits(src_col, dst_col, -1);
      });
      if (!match) continue;
      SignTransform t = SignTransform::identity(n);
      t.row_perm = rp;
      t.row_sign = rs;
      for (int src = 0; src < n; ++src) {
        int dst = (*match)[src];
        t.col_perm[dst] = src;
        t.col_sign[dst] = col_fits(src, dst, 1) ? 1 : -1;
      }
      if (t.apply(g) == h) found = t;
    }
  });
  return found;
}

}  // namespace noneven
