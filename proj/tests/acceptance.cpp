// Acceptance suite: twelve end-to-end criteria, one PASS/FAIL line each.
// Exits nonzero if any criterion fails. Criteria 1-5 drive the CLI binary;
// the rest call the library directly.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "fixtures.hpp"
#include "noneven/noneven.hpp"

using namespace noneven;
using fixtures::contains;
using fixtures::run_cli;
using fixtures::temp_path;
using fixtures::write_file;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string pattern_file(const std::string& name, const SignPattern& h) {
  std::ostringstream out;
  write_pattern(out, h);
  std::string path = temp_path(name);
  write_file(path, out.str());
  return path;
}

double max_residual(const RealMatrix& a, const RealMatrix& d) {
  double m = 0;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      double s = 0;
      for (int k = 0; k < a.n; ++k) s += a.at(k, i) * d.at(k, j);
      m = std::max(m, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  return m;
}

long count_of(const VerificationReport& rep, const std::string& key) {
  for (const auto& [k, v] : rep.counts)
    if (k == key) return v;
  return -1;
}

int catalog_records(const std::string& filter, std::vector<std::string>* lines = nullptr) {
  auto r = run_cli("catalog --n 4 --filter \"" + filter + "\"");
  if (r.exit_code != 0) return -1;
  int records = 0;
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') {
      ++records;
      if (lines) lines->push_back(line);
    }
  return records;
}

std::vector<ArcWeighting> all_noneven_weightings(const Digraph& d) {
  auto cycles = enumerate_cycles(d);
  auto carcs = cycle_arc_indices(d, cycles);
  int m = d.arc_count();
  std::vector<ArcWeighting> good;
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    ArcWeighting w(static_cast<size_t>(m));
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
    if (all_odd) good.push_back(std::move(w));
  }
  return good;
}

// ---- criteria ----

void criterion_1(Check& c) {  // Figure 1 reproduction
  std::string fig = pattern_file("acc_fig1.pat", fixtures::figure1_pattern());
  auto cls = run_cli("classify " + fig + " --kind pattern");
  c.require(cls.exit_code == 0, "classify exit code");
  c.require(contains(cls.out, "sns=true"), "classify sns flag");
  c.require(contains(cls.out, "prop31=fail"), "classify prop31 verdict");
  auto wit = run_cli("witness " + fig);
  c.require(wit.exit_code == 1, "witness exit code");
  c.require(contains(wit.out, "NOT-FOUND"), "witness NOT-FOUND line");
}

void criterion_2(Check& c) {  // C2* witness and sampling
  std::string c2 = pattern_file("acc_c2.pat", fixtures::c2star_pattern());
  auto wit = run_cli("witness " + c2);
  c.require(wit.exit_code == 0, "witness exit code");
  std::istringstream in(wit.out);
  std::string tok;
  double residual = 1.0;
  while (in >> tok)
    if (tok == "residual") in >> residual;
  c.require(residual <= 1e-9, "witness residual above 1e-9");
  double frac = requires_symplectic_sampling(fixtures::c2star_pattern(), 10000);
  c.require(frac == 1.0, "sampling fraction not exactly 1.0");
}

void criterion_3(Check& c) {  // C4* witness and orthogonality
  std::string c4 = pattern_file("acc_c4.pat", fixtures::c4star_pattern());
  auto wit = run_cli("witness " + c4);
  c.require(wit.exit_code == 0, "witness exit code");
  WitnessOptions opt;
  opt.orthogonal = true;
  auto res = find_symplectic_pair(fixtures::c4star_pattern(), opt);
  c.require(res.witness.has_value(), "no orthogonal witness");
  if (res.witness) {
    c.require(in_sign_class(res.witness->A, fixtures::c4star_pattern()),
              "orthogonal witness leaves the sign class");
    c.require(max_residual(res.witness->A, res.witness->A) <= 1e-9,
              "orthogonality residual above 1e-9");
  }
}

void criterion_4(Check& c) {  // uniqueness at n = 4 via the catalog
  c.require(catalog_records("strongly_2connected & noneven") == 2,
            "expected exactly 2 strongly-2-connected noneven classes");
  std::vector<std::string> lines;
  c.require(catalog_records("strongly_2connected & noneven & semi_complete", &lines) == 1,
            "expected exactly 1 semi-complete class");
  if (lines.size() == 1) {
    std::istringstream in(lines[0]);
    std::string canon, flags, indeg, outdeg;
    int n, m;
    in >> canon >> n >> m >> flags >> indeg >> outdeg;
    c.require(m == 8, "semi-complete class arc count");
    c.require(indeg == "2,2,2,2" && outdeg == "2,2,2,2",
              "semi-complete class degree multisets");
  }
}

void criterion_5(Check& c) {  // emptiness at n = 5
  for (const char* id : {"t51", "t52"}) {
    auto r = run_cli(std::string("verify ") + id + " --n 5");
    c.require(r.exit_code == 0, std::string(id) + " exit code");
    c.require(contains(r.out, "result\tPASS"), std::string(id) + " verdict");
    c.require(contains(r.out, "classes_n5\t0"), std::string(id) + " n=5 class count");
  }
}

void criterion_6(Check& c) {  // W4 ~ C4* sign-equivalence over all weightings
  auto ws = all_noneven_weightings(w4());
  auto cs = all_noneven_weightings(double_cycle(4));
  c.require(!ws.empty() && !cs.empty(), "missing noneven weightings");
  for (const auto& w : ws)
    for (const auto& v : cs) {
      SignPattern hw = pattern_of(WeightedDigraph(w4(), w), -1);
      SignPattern hc = pattern_of(WeightedDigraph(double_cycle(4), v), -1);
      if (!sign_equivalent(hw, hc)) {
        c.require(false, "a weighting pair is not sign-equivalent");
        return;
      }
    }
}

void criterion_7(Check& c) {  // decider equivalence
  auto rep = verify_seymour_thomassen(5);
  c.require(rep.ok(), "decider disagreement found");
  c.require(count_of(rep, "checked") >= 10000, "too few digraphs checked");
}

void criterion_8(Check& c) {  // Prop 4.1 cross-check
  auto rep = verify_prop_4_1(6);
  c.require(rep.ok(), "Prop 4.1 disagreement found");
  c.require(count_of(rep, "checked") > 0, "empty universe");
}

void criterion_9(Check& c) {  // caterpillar degree law
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> expected;
    for (int v = 1; v < n; ++v) expected.push_back(v);
    expected.push_back(n - 1);
    std::sort(expected.begin(), expected.end());
    for (int k = 2; k <= n; ++k) {
      int interior = std::max(0, k - 2);
      int pendants = n - k;
      if (pendants > 0 && interior == 0) continue;
      std::vector<int> blossoms(static_cast<size_t>(interior), 0);
      std::function<void(int, int)> rec = [&](int idx, int left) {
        if (!c.ok) return;
        if (idx == interior) {
          if (left != 0) return;
          auto seq = degree_sequences(build_extended_caterpillar({k, blossoms}));
          c.require(seq.in == expected && seq.out == expected,
                    "degree multiset mismatch at n=" + std::to_string(n));
          return;
        }
        for (int cnt = 0; cnt <= left; ++cnt) {
          blossoms[static_cast<size_t>(idx)] = cnt;
          rec(idx + 1, left - cnt);
        }
      };
      rec(0, pendants);
    }
  }
}

void criterion_10(Check& c) {  // Theorem 6.3 desk scale
  std::unordered_set<uint64_t> seen;
  for (int n = 2; n <= 5 && c.ok; ++n)
    for (const Digraph& cat : all_extended_caterpillars(n)) {
      SignPattern h = pattern_of(WeightedDigraph(cat, *find_noneven_weighting(cat)), -1);
      auto res = find_symplectic_pair(h);
      c.require(res.witness.has_value(),
                "caterpillar without witness at n=" + std::to_string(n));
      int m = cat.arc_count();
      for (uint32_t mask = 0; mask + 1 < (1u << m) && c.ok; ++mask) {
        Digraph d(n);
        for (int i = 0; i < m; ++i)
          if (mask & (1u << i)) d.add_arc(cat.arcs()[i].first, cat.arcs()[i].second);
        if (!is_strong(d)) continue;
        if (!seen.insert((canonical_id(d) << 3) | static_cast<uint64_t>(n)).second)
          continue;
        c.require(!is_maximal_noneven(d), "strong proper subdigraph is maximal");
        SignPattern hs = pattern_of(WeightedDigraph(d, *find_noneven_weighting(d)), -1);
        c.require(!find_symplectic_pair(hs).witness.has_value(),
                  "strong proper subdigraph yielded a witness");
      }
    }
}

void criterion_11(Check& c) {  // gradient check
  std::mt19937_64 rng(20260823);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  int points = 0;
  while (points < 100 && c.ok) {
    int n = 2 + static_cast<int>(rng() % 4);  // 2..5
    SignPattern h = fixtures::random_pattern(n, rng, 0.3);
    int nz = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (h.at(i, j) != 0) ++nz;
    if (nz == 0) continue;
    bool orth = rng() % 2;
    size_t nv = orth ? static_cast<size_t>(nz) : 2 * static_cast<size_t>(nz);
    std::vector<double> x(nv), g(nv);
    for (double& v : x) v = u(rng);
    witness_objective(h, x, g, orth, 1e-3, 10.0);
    double eps = 1e-6;
    for (size_t i = 0; i < nv && c.ok; ++i) {
      std::vector<double> xp = x, xm = x;
      xp[i] += eps;
      xm[i] -= eps;
      double fp = witness_objective(h, xp, std::span<double>{}, orth, 1e-3, 10.0);
      double fm = witness_objective(h, xm, std::span<double>{}, orth, 1e-3, 10.0);
      double num = (fp - fm) / (2 * eps);
      double denom = std::max({std::abs(num), std::abs(g[i]), 1e-6});
      c.require(std::abs(num - g[i]) / denom < 1e-5, "gradient mismatch");
    }
    ++points;
  }
  c.require(points == 100, "fewer than 100 points tested");
}

void criterion_12(Check& c) {  // no strongly 3-connected noneven digraph
  auto rep = emergent_3connected_check(5);
  c.require(rep.ok(), "strongly-3-connected noneven digraph found");
  c.require(count_of(rep, "strongly_3connected_classes") > 0, "empty universe");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"figure-1 reproduction", criterion_1},
      {"C2* witness and requires-sampling", criterion_2},
      {"C4* witness and orthogonality", criterion_3},
      {"n=4 catalog uniqueness", criterion_4},
      {"n=5 emptiness (theorems 5.1, 5.2)", criterion_5},
      {"W4 ~ C4* sign-equivalence", criterion_6},
      {"decider equivalence", criterion_7},
      {"prop 4.1 cross-check (n <= 6)", criterion_8},
      {"caterpillar degree law (n <= 6)", criterion_9},
      {"theorem 6.3 desk scale (n <= 5)", criterion_10},
      {"optimizer gradient check", criterion_11},
      {"no strongly-3-connected noneven (n <= 5)", criterion_12},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu [%s]: %s (%.1fs)%s%s\n", i + 1, criteria[i].name,
                c.ok ? "PASS" : "FAIL", secs, c.ok ? "" : " — ",
                c.ok ? "" : c.detail.c_str());
    std::fflush(stdout);
    if (!c.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
