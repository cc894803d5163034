#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "noneven/digraph.hpp"
#include "noneven/parity.hpp"
#include "noneven/pattern_ops.hpp"
#include "noneven/sign.hpp"

namespace noneven {

struct NotSNS : std::invalid_argument {
  NotSNS() : std::invalid_argument("pattern is not sign-nonsingular") {}
};
struct NotNoneven : std::invalid_argument {
  NotNoneven() : std::invalid_argument("digraph is not noneven") {}
};

// ---- signed row overlap numbers ----

struct OverlapNumbers {
  int i, j;
  int n_plus, n_minus;
};

inline OverlapNumbers overlap_numbers(const SignPattern& h, int i, int j) {
  if (i == j) throw std::invalid_argument("overlap_numbers: indices must differ");
  OverlapNumbers o{i, j, 0, 0};
  for (int k = 0; k < h.order(); ++k) {
    int p = h.at(i, k) * h.at(j, k);
    if (p > 0) ++o.n_plus;
    if (p < 0) ++o.n_minus;
  }
  return o;
}

struct Prop31Result {
  bool pass = true;
  int i = -1, j = -1;  // failing row pair when !pass
};

// Necessary condition: no distinct row pair may have exactly one of
// N+, N- equal to zero.
inline Prop31Result prop31_check(const SignPattern& h) {
  for (int i = 0; i < h.order(); ++i)
    for (int j = i + 1; j < h.order(); ++j) {
      OverlapNumbers o = overlap_numbers(h, i, j);
      if ((o.n_plus == 0) != (o.n_minus == 0)) return {false, i, j};
    }
  return {};
}

// Digraphical route: vertices dominated by both v and w, partitioned by the
// parity of the two arc weights. Self-arcs stand in for the diagonal; a
// negative diagonal entry contributes a unit-weight self-arc.
inline Prop31Result prop31_digraph_check(const WeightedDigraph& wd,
                                         const std::vector<int>& diagonal) {
  int n = wd.base.order();
  if (static_cast<int>(diagonal.size()) != n)
    throw std::invalid_argument("prop31_digraph_check: diagonal size mismatch");
  auto dominates = [&](int v, int u) {
    if (v == u) return diagonal[v] != 0;
    return wd.base.has_arc(v, u);
  };
  auto arc_weight = [&](int v, int u) {
    if (v == u) return diagonal[v] < 0 ? 1 : 0;
    return wd.weight_of(v, u);
  };
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) {
      int even_cnt = 0, odd_cnt = 0;
      for (int u = 0; u < n; ++u) {
        if (!dominates(v, u) || !dominates(w, u)) continue;
        ((arc_weight(v, u) + arc_weight(w, u)) % 2 == 0 ? even_cnt : odd_cnt)++;
      }
      if ((even_cnt == 0) != (odd_cnt == 0)) return {false, v, w};
    }
  return {};
}

// ---- minor-based condition (sign-nonsingular patterns only) ----

inline SignPattern minor_pattern(const SignPattern& h, int i, int j) {
  int n = h.order();
  if (n < 2) throw std::invalid_argument("minor_pattern: order must be >= 2");
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw std::invalid_argument("minor_pattern: index out of range");
  SignPattern m(n - 1);
  for (int r = 0, mr = 0; r < n; ++r) {
    if (r == i) continue;
    for (int c = 0, mc = 0; c < n; ++c) {
      if (c == j) continue;
      m.set(mr, mc, h.at(r, c));
      ++mc;
    }
    ++mr;
  }
  return m;
}

struct Prop61Result {
  bool pass = true;
  int i = -1, j = -1;
  int condition = 0;  // 1: zero entry with SNS minor, 2: nonzero with non-SNS minor
};

inline Prop61Result prop61_check(const SignPattern& h) {
  if (!is_sns(h)) throw NotSNS{};
  int n = h.order();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool minor_sns = n == 1 ? true : is_sns(minor_pattern(h, i, j));
      if (h.at(i, j) == 0 && minor_sns) return {false, i, j, 1};
      if (h.at(i, j) != 0 && !minor_sns) return {false, i, j, 2};
    }
  return {};
}

// ---- maximality / irreducibility ----

inline bool is_maximal_noneven(const Digraph& d) {
  if (!find_noneven_weighting(d)) throw NotNoneven{};
  for (int u = 0; u < d.order(); ++u)
    for (int v = 0; v < d.order(); ++v) {
      if (u == v || d.has_arc(u, v)) continue;
      Digraph e = d;
      e.add_arc(u, v);
      if (find_noneven_weighting(e)) return false;  // still noneven
    }
  return true;
}

inline bool is_irreducible(const SignPattern& h) {
  return is_strong(digraph_of(h).base);
}

// ---- numerical symplectic-pair witness search ----

struct WitnessPair {
  RealMatrix A, D;
  double residual;  // max-norm of A^T D - I
};

struct WitnessOptions {
  int budget = 200;
  double tol = 1e-9;
  uint64_t seed = 20260823;
  bool orthogonal = false;   // constrain D == A
  double floor_search = 1e-3;
  double floor_final = 1e-2;
  double hinge_weight = 10.0;
  int adam_iters = 400;
  int polish_sweeps = 400;
};

struct WitnessSearchResult {
  std::optional<WitnessPair> witness;
  double best_residual = std::numeric_limits<double>::infinity();
};

namespace detail {

inline std::vector<std::pair<int, int>> nonzero_positions(const SignPattern& h) {
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < h.order(); ++i)
    for (int j = 0; j < h.order(); ++j)
      if (h.at(i, j) != 0) p.push_back({i, j});
  return p;
}

inline void unpack(const SignPattern& h, std::span<const double> x, bool orthogonal,
                   RealMatrix& a, RealMatrix& d) {
  auto pos = nonzero_positions(h);
  a = RealMatrix(h.order());
  for (size_t v = 0; v < pos.size(); ++v) a.at(pos[v].first, pos[v].second) = x[v];
  if (orthogonal) {
    d = a;
  } else {
    d = RealMatrix(h.order());
    for (size_t v = 0; v < pos.size(); ++v)
      d.at(pos[v].first, pos[v].second) = x[pos.size() + v];
  }
}

inline RealMatrix residual_matrix(const RealMatrix& a, const RealMatrix& d) {
  int n = a.n;
  RealMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0;
      for (int k = 0; k < n; ++k) s += a.at(k, i) * d.at(k, j);
      r.at(i, j) = s - (i == j ? 1.0 : 0.0);
    }
  return r;
}

inline double max_norm(const RealMatrix& r) {
  double m = 0;
  for (double v : r.a) m = std::max(m, std::abs(v));
  return m;
}

// Solves the small SPD-ish system (M^T M + eps I) x = M^T b in `nv` unknowns.
inline std::vector<double> solve_normal(const std::vector<std::vector<double>>& m,
                                        const std::vector<double>& b, double eps = 1e-12) {
  size_t rows = m.size(), nv = rows ? m[0].size() : 0;
  std::vector<std::vector<double>> g(nv, std::vector<double>(nv + 1, 0.0));
  for (size_t i = 0; i < nv; ++i) {
    for (size_t j = 0; j < nv; ++j) {
      double s = 0;
      for (size_t r = 0; r < rows; ++r) s += m[r][i] * m[r][j];
      g[i][j] = s + (i == j ? eps : 0.0);
    }
    double s = 0;
    for (size_t r = 0; r < rows; ++r) s += m[r][i] * b[r];
    g[i][nv] = s;
  }
  // Gaussian elimination with partial pivoting
  for (size_t col = 0; col < nv; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < nv; ++r)
      if (std::abs(g[r][col]) > std::abs(g[piv][col])) piv = r;
    std::swap(g[col], g[piv]);
    if (std::abs(g[col][col]) < 1e-300) continue;
    for (size_t r = 0; r < nv; ++r) {
      if (r == col) continue;
      double f = g[r][col] / g[col][col];
      for (size_t c = col; c <= nv; ++c) g[r][c] -= f * g[col][c];
    }
  }
  std::vector<double> x(nv, 0.0);
  for (size_t i = 0; i < nv; ++i)
    if (std::abs(g[i][i]) > 1e-300) x[i] = g[i][nv] / g[i][i];
  return x;
}

}  // namespace detail

// Penalized least-squares objective over the packed nonzero entries:
// squared Frobenius norm of A^T D - I plus a hinge keeping every nonzero on
// its required side of the magnitude floor. Writes the analytic gradient
// into `grad` when non-null.
inline double witness_objective(const SignPattern& h, std::span<const double> x,
                                std::span<double> grad, bool orthogonal,
                                double floor_mag, double hinge_weight) {
  auto pos = detail::nonzero_positions(h);
  size_t nv = orthogonal ? pos.size() : 2 * pos.size();
  if (x.size() != nv) throw std::invalid_argument("witness_objective: bad size");
  RealMatrix a, d;
  detail::unpack(h, x, orthogonal, a, d);
  RealMatrix r = detail::residual_matrix(a, d);
  double f = 0;
  for (double v : r.a) f += v * v;

  if (!grad.empty()) {
    int n = h.order();
    RealMatrix ga(n), gd(n);
    if (orthogonal) {
      // grad_A = 2 A (R + R^T)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double s = 0;
          for (int j = 0; j < n; ++j) s += a.at(k, j) * (r.at(j, l) + r.at(l, j));
          ga.at(k, l) = 2 * s;
        }
    } else {
      // grad_A = 2 D R^T, grad_D = 2 A R
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double sa = 0, sd = 0;
          for (int j = 0; j < n; ++j) {
            sa += d.at(k, j) * r.at(l, j);
            sd += a.at(k, j) * r.at(j, l);
          }
          ga.at(k, l) = 2 * sa;
          gd.at(k, l) = 2 * sd;
        }
    }
    for (size_t v = 0; v < pos.size(); ++v) grad[v] = ga.at(pos[v].first, pos[v].second);
    if (!orthogonal)
      for (size_t v = 0; v < pos.size(); ++v)
        grad[pos.size() + v] = gd.at(pos[v].first, pos[v].second);
  }

  for (size_t v = 0; v < nv; ++v) {
    int s = h.at(pos[v % pos.size()].first, pos[v % pos.size()].second);
    double pen = floor_mag - s * x[v];
    if (pen > 0) {
      f += hinge_weight * pen * pen;
      if (!grad.empty()) grad[v] += -2 * hinge_weight * pen * s;
    }
  }
  return f;
}

namespace detail {

inline void adam_descend(const SignPattern& h, std::vector<double>& x, bool orthogonal,
                         const WitnessOptions& opt) {
  size_t nv = x.size();
  std::vector<double> g(nv), m(nv, 0.0), v2(nv, 0.0);
  double lr = 0.05, b1 = 0.9, b2 = 0.999;
  double b1t = 1.0, b2t = 1.0;
  double window_best = std::numeric_limits<double>::infinity();
  double prev_window_best = std::numeric_limits<double>::infinity();
  for (int t = 1; t <= opt.adam_iters; ++t) {
    double f = witness_objective(h, x, g, orthogonal, opt.floor_search,
                                 opt.hinge_weight);
    window_best = std::min(window_best, f);
    if (t % 25 == 0) {  // stalled descent: hand off to the polish stage
      if (window_best > 0.99 * prev_window_best) break;
      prev_window_best = window_best;
      window_best = std::numeric_limits<double>::infinity();
    }
    b1t *= b1;
    b2t *= b2;
    double c1 = 1.0 / (1 - b1t), c2 = 1.0 / (1 - b2t);
    for (size_t i = 0; i < nv; ++i) {
      m[i] = b1 * m[i] + (1 - b1) * g[i];
      v2[i] = b2 * v2[i] + (1 - b2) * g[i] * g[i];
      x[i] -= lr * (m[i] * c1) / (std::sqrt(v2[i] * c2) + 1e-12);
    }
  }
}

// Alternating exact least squares on the bilinear residual; columns of D and
// columns of A decouple.
inline void als_polish(const SignPattern& h, RealMatrix& a, RealMatrix& d,
                       int sweeps) {
  int n = h.order();
  double last_checked = std::numeric_limits<double>::infinity();
  for (int s = 0; s < sweeps; ++s) {
    for (int j = 0; j < n; ++j) {  // solve D column j
      std::vector<int> rows;
      for (int k = 0; k < n; ++k)
        if (h.at(k, j) != 0) rows.push_back(k);
      if (rows.empty()) continue;
      std::vector<std::vector<double>> m(n, std::vector<double>(rows.size()));
      std::vector<double> b(n, 0.0);
      for (int i = 0; i < n; ++i) {
        for (size_t f = 0; f < rows.size(); ++f) m[i][f] = a.at(rows[f], i);
        b[i] = i == j ? 1.0 : 0.0;
      }
      auto x = solve_normal(m, b);
      for (size_t f = 0; f < rows.size(); ++f) d.at(rows[f], j) = x[f];
    }
    for (int i = 0; i < n; ++i) {  // solve A column i
      std::vector<int> rows;
      for (int k = 0; k < n; ++k)
        if (h.at(k, i) != 0) rows.push_back(k);
      if (rows.empty()) continue;
      std::vector<std::vector<double>> m(n, std::vector<double>(rows.size()));
      std::vector<double> b(n, 0.0);
      for (int j = 0; j < n; ++j) {
        for (size_t f = 0; f < rows.size(); ++f) m[j][f] = d.at(rows[f], j);
        b[j] = i == j ? 1.0 : 0.0;
      }
      auto x = solve_normal(m, b);
      for (size_t f = 0; f < rows.size(); ++f) a.at(rows[f], i) = x[f];
    }
    double res = max_norm(residual_matrix(a, d));
    if (res < 1e-14) break;
    if (s % 10 == 9) {  // stalled at a local minimum
      if (res > 0.99 * last_checked) break;
      last_checked = res;
    }
  }
}

// Levenberg-Marquardt on vec(A^T A - I) for the orthogonality-constrained
// search (D == A).
inline void lm_polish_orthogonal(const SignPattern& h, RealMatrix& a, int iters) {
  int n = h.order();
  auto pos = nonzero_positions(h);
  size_t nv = pos.size();
  double mu = 1e-3;
  for (int it = 0; it < iters; ++it) {
    RealMatrix r = residual_matrix(a, a);
    double f0 = 0;
    for (double v : r.a) f0 += v * v;
    if (max_norm(r) < 1e-15) break;
    std::vector<std::vector<double>> jac(static_cast<size_t>(n) * n,
                                         std::vector<double>(nv, 0.0));
    std::vector<double> rhs(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        size_t row = static_cast<size_t>(i) * n + j;
        rhs[row] = -r.at(i, j);
        for (size_t v = 0; v < nv; ++v) {
          auto [k, l] = pos[v];
          double der = 0;
          if (j == l) der += a.at(k, i);
          if (i == l) der += a.at(k, j);
          jac[row][v] = der;
        }
      }
    auto step = solve_normal(jac, rhs, mu);
    RealMatrix trial = a;
    for (size_t v = 0; v < nv; ++v) trial.at(pos[v].first, pos[v].second) += step[v];
    RealMatrix rt = residual_matrix(trial, trial);
    double f1 = 0;
    for (double v : rt.a) f1 += v * v;
    if (f1 < f0) {
      a = trial;
      mu = std::max(mu * 0.3, 1e-12);
    } else {
      mu *= 10;
      if (mu > 1e8) break;
    }
  }
}

inline bool sign_feasible(const RealMatrix& a, const SignPattern& h, double floor_mag) {
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      int s = h.at(i, j);
      if (s == 0) {
        if (a.at(i, j) != 0.0) return false;  // zeros are structural
      } else if (s * a.at(i, j) < floor_mag) {
        return false;
      }
    }
  return true;
}

inline double min_nonzero_mag(const RealMatrix& a, const SignPattern& h) {
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      if (h.at(i, j) != 0) m = std::min(m, std::abs(a.at(i, j)));
  return m;
}

}  // namespace detail

// Random-restart local search for (A, D) with A, D in Q(H) and A^T D = I up
// to `tol` in max-norm. NotFound (empty witness) is not a nonexistence proof;
// best_residual distinguishes a tight budget from a hopeless pattern.
inline WitnessSearchResult find_symplectic_pair(const SignPattern& h,
                                               WitnessOptions opt = {}) {
  auto pos = detail::nonzero_positions(h);
  WitnessSearchResult result;
  if (pos.empty()) return result;
  size_t nv = opt.orthogonal ? pos.size() : 2 * pos.size();
  for (int restart = 0; restart < opt.budget; ++restart) {
    std::mt19937_64 rng(opt.seed + static_cast<uint64_t>(restart) * 0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> mag(0.3, 1.2);
    std::vector<double> x(nv);
    for (size_t v = 0; v < nv; ++v) {
      int s = h.at(pos[v % pos.size()].first, pos[v % pos.size()].second);
      x[v] = s * mag(rng);
    }
    detail::adam_descend(h, x, opt.orthogonal, opt);
    RealMatrix a, d;
    detail::unpack(h, x, opt.orthogonal, a, d);
    if (opt.orthogonal) {
      detail::lm_polish_orthogonal(h, a, 200);
      d = a;
    } else {
      detail::als_polish(h, a, d, opt.polish_sweeps);
    }
    double res = detail::max_norm(detail::residual_matrix(a, d));
    result.best_residual = std::min(result.best_residual, res);
    if (res > opt.tol) continue;
    if (!detail::sign_feasible(a, h, opt.floor_search) ||
        !detail::sign_feasible(d, h, opt.floor_search))
      continue;
    if (!opt.orthogonal) {
      double c = std::sqrt(detail::min_nonzero_mag(d, h) / detail::min_nonzero_mag(a, h));
      for (double& v : a.a) v *= c;
      for (double& v : d.a) v /= c;
    }
    if (detail::min_nonzero_mag(a, h) < opt.floor_final ||
        detail::min_nonzero_mag(d, h) < opt.floor_final)
      continue;
    res = detail::max_norm(detail::residual_matrix(a, d));
    if (res > opt.tol) continue;
    result.witness = WitnessPair{std::move(a), std::move(d), res};
    return result;
  }
  return result;
}

// Samples A in Q(H) with log-uniform magnitudes on [1e-2, 1e2], forms the
// unique D with A^T D = I, and reports the fraction of trials with D in Q(H).
inline double requires_symplectic_sampling(const SignPattern& h, int trials,
                                           uint64_t seed = 20260823) {
  if (!is_sns(h)) throw NotSNS{};
  int n = h.order();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> exp10(-2.0, 2.0);
  int hits = 0;
  for (int t = 0; t < trials; ++t) {
    // D solves A^T D = I; resample on a near-singular draw
    RealMatrix d(n);
    for (;;) {
      RealMatrix at(n);  // A^T
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          at.at(j, i) = h.at(i, j) * std::pow(10.0, exp10(rng));
      // Gauss-Jordan on [A^T | I]
      std::vector<std::vector<double>> g(n, std::vector<double>(2 * n, 0.0));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) g[i][j] = at.at(i, j);
        g[i][n + i] = 1.0;
      }
      bool singular = false;
      for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
          if (std::abs(g[r][col]) > std::abs(g[piv][col])) piv = r;
        std::swap(g[col], g[piv]);
        if (std::abs(g[col][col]) < 1e-12) {
          singular = true;
          break;
        }
        for (int r = 0; r < n; ++r) {
          if (r == col) continue;
          double f = g[r][col] / g[col][col];
          for (int c = col; c < 2 * n; ++c) g[r][c] -= f * g[col][c];
        }
      }
      if (singular) continue;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d.at(i, j) = g[i][n + j] / g[i][i];
      break;
    }
    double scale = detail::max_norm(d);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        double v = d.at(i, j);
        int s = std::abs(v) < 1e-10 * scale ? 0 : sgn(v);
        if (s != h.at(i, j)) ok = false;
      }
    if (ok) ++hits;
  }
  return static_cast<double>(hits) / trials;
}

}  // namespace noneven
