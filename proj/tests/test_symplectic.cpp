#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "noneven/noneven.hpp"

using namespace noneven;

namespace {

double residual_max_norm(const RealMatrix& a, const RealMatrix& d) {
  double m = 0;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      double s = 0;
      for (int k = 0; k < a.n; ++k) s += a.at(k, i) * d.at(k, j);
      m = std::max(m, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  return m;
}

SignPattern negative_diagonal_random(int n, std::mt19937_64& rng) {
  SignPattern h = fixtures::random_pattern(n, rng, 0.35);
  for (int i = 0; i < n; ++i) h.set(i, i, -1);
  return h;
}

}  // namespace

TEST_CASE("overlap_numbers") {
  SignPattern h = fixtures::figure1_pattern();
  auto o01 = overlap_numbers(h, 0, 1);
  CHECK(o01.n_plus == 0);
  CHECK(o01.n_minus == 2);
  auto o12 = overlap_numbers(h, 1, 2);
  CHECK(o12.n_plus == 2);
  CHECK(o12.n_minus == 0);
  auto o2 = overlap_numbers(fixtures::c2star_pattern(), 0, 1);
  CHECK(o2.n_plus == 1);
  CHECK(o2.n_minus == 1);
  CHECK_THROWS_AS(overlap_numbers(h, 1, 1), std::invalid_argument);
}

TEST_CASE("prop31_check") {
  auto fig = prop31_check(fixtures::figure1_pattern());
  CHECK(!fig.pass);
  CHECK(prop31_check(fixtures::c2star_pattern()).pass);
  SignPattern diag(3);
  for (int i = 0; i < 3; ++i) diag.set(i, i, -1);
  CHECK(prop31_check(diag).pass);
}

TEST_CASE("prop31_digraph_check") {
  SignPattern h = fixtures::figure1_pattern();
  std::vector<int> diag(4, -1);
  auto digr = prop31_digraph_check(digraph_of(h), diag);
  CHECK(!digr.pass);
  CHECK(digr.pass == prop31_check(h).pass);

  CHECK(prop31_digraph_check(WeightedDigraph(Digraph(3)), {-1, -1, -1}).pass);
  CHECK(prop31_digraph_check(digraph_of(fixtures::c2star_pattern()), {-1, -1}).pass);
  CHECK_THROWS_AS(prop31_digraph_check(WeightedDigraph(Digraph(3)), {-1}),
                  std::invalid_argument);
}

TEST_CASE("prop31 formulations agree on negative-diagonal patterns") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 200; ++t) {
    SignPattern h = negative_diagonal_random(4, rng);
    std::vector<int> diag(4);
    for (int i = 0; i < 4; ++i) diag[i] = h.at(i, i);
    CHECK(prop31_check(h).pass == prop31_digraph_check(digraph_of(h), diag).pass);
  }
  // patterns with few off-diagonal nonzeros, arbitrary diagonal, exhaustively
  // positioned nonzeros on a 3x3 grid
  for (int mask = 0; mask < 64; ++mask) {
    SignPattern h(3);
    int slot = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        if (mask & (1 << slot)) h.set(i, j, slot % 2 ? 1 : -1);
        ++slot;
      }
    h.set(0, 0, -1);
    h.set(2, 2, 1);
    std::vector<int> diag = {-1, 0, 1};
    CHECK(prop31_check(h).pass == prop31_digraph_check(digraph_of(h), diag).pass);
  }
}

TEST_CASE("minor_pattern") {
  SignPattern h2(2, {-1, 1, -1, -1});
  SignPattern m = minor_pattern(h2, 0, 1);
  CHECK(m.order() == 1);
  CHECK(m.at(0, 0) == -1);  // H_21

  SignPattern fig = minor_pattern(fixtures::figure1_pattern(), 1, 0);
  CHECK(fig == SignPattern(3, {1, 0, -1, -1, -1, 1, -1, 0, -1}));

  SignPattern diag(3);
  for (int i = 0; i < 3; ++i) diag.set(i, i, -1);
  SignPattern dm = minor_pattern(diag, 1, 1);
  CHECK(dm == SignPattern(2, {-1, 0, 0, -1}));

  CHECK_THROWS_AS(minor_pattern(h2, 2, 0), std::invalid_argument);
}

TEST_CASE("prop61_check") {
  SignPattern fig = fixtures::figure1_pattern();
  CHECK(!prop61_check(fig).pass);
  // the printed violation: H_21 = 0 while the (2,1) minor is sign-nonsingular
  CHECK(fig.at(1, 0) == 0);
  CHECK(is_sns(minor_pattern(fig, 1, 0)));

  CHECK(prop61_check(fixtures::c2star_pattern()).pass);
  CHECK(prop61_check(fixtures::c4star_pattern()).pass);
  CHECK_THROWS_AS(prop61_check(SignPattern(2, {1, 1, 1, 1})), NotSNS);
}

TEST_CASE("is_maximal_noneven") {
  for (int n = 2; n <= 5; ++n)
    for (const Digraph& cat : all_extended_caterpillars(n))
      CHECK(is_maximal_noneven(cat));

  CHECK(!is_maximal_noneven(Digraph(2, {{0, 1}})));

  Digraph sub = build_extended_caterpillar({4, {}});
  sub.remove_arc(3, 0);
  CHECK(is_strong(sub));
  CHECK(!is_maximal_noneven(sub));

  CHECK_THROWS_AS(is_maximal_noneven(double_cycle(3)), NotNoneven);
}

TEST_CASE("is_irreducible") {
  CHECK(is_irreducible(fixtures::c2star_pattern()));
  CHECK(!is_irreducible(fixtures::figure1_pattern()));
  SignPattern diag(3);
  for (int i = 0; i < 3; ++i) diag.set(i, i, -1);
  CHECK(!is_irreducible(diag));
}

TEST_CASE("find_symplectic_pair on C2*") {
  SignPattern h = fixtures::c2star_pattern();
  // closed form: (1/sqrt 2) H paired with itself is exact
  RealMatrix a = to_real(h);
  for (double& v : a.a) v /= std::sqrt(2.0);
  CHECK(residual_max_norm(a, a) < 1e-15);

  auto res = find_symplectic_pair(h);
  REQUIRE(res.witness.has_value());
  CHECK(in_sign_class(res.witness->A, h));
  CHECK(in_sign_class(res.witness->D, h));
  CHECK(residual_max_norm(res.witness->A, res.witness->D) <= 1e-9);
  CHECK(res.witness->residual <= 1e-9);
}

TEST_CASE("find_symplectic_pair rejects the figure-1 pattern") {
  WitnessOptions opt;
  opt.budget = 25;
  auto res = find_symplectic_pair(fixtures::figure1_pattern(), opt);
  CHECK(!res.witness.has_value());
  CHECK(res.best_residual > 0);
  CHECK(std::isfinite(res.best_residual));
}

TEST_CASE("scaling invariance of witnesses") {
  auto res = find_symplectic_pair(fixtures::c2star_pattern());
  REQUIRE(res.witness.has_value());
  RealMatrix a = res.witness->A, d = res.witness->D;
  for (double& v : a.a) v *= 3.0;
  for (double& v : d.a) v /= 3.0;
  CHECK(residual_max_norm(a, d) <= 1e-9);
  CHECK(in_sign_class(a, fixtures::c2star_pattern()));
  CHECK(in_sign_class(d, fixtures::c2star_pattern()));
}

TEST_CASE("orthogonal witness on the C4* pattern") {
  SignPattern h = fixtures::c4star_pattern();
  // (1/sqrt 3) H is exactly orthogonal
  RealMatrix a = to_real(h);
  for (double& v : a.a) v /= std::sqrt(3.0);
  CHECK(residual_max_norm(a, a) < 1e-14);

  WitnessOptions opt;
  opt.orthogonal = true;
  auto res = find_symplectic_pair(h, opt);
  REQUIRE(res.witness.has_value());
  CHECK(in_sign_class(res.witness->A, h));
  CHECK(residual_max_norm(res.witness->A, res.witness->A) <= 1e-9);
}

TEST_CASE("gradient check against central differences") {
  std::mt19937_64 rng(131);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  int points = 0;
  while (points < 30) {
    int n = 2 + static_cast<int>(rng() % 3);
    SignPattern h = fixtures::random_pattern(n, rng, 0.3);
    auto count_nonzeros = [&] {
      int c = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (h.at(i, j) != 0) ++c;
      return c;
    };
    int nz = count_nonzeros();
    if (nz == 0) continue;
    bool orth = rng() % 2;
    size_t nv = orth ? nz : 2 * static_cast<size_t>(nz);
    std::vector<double> x(nv), g(nv), none;
    for (double& v : x) v = u(rng);
    witness_objective(h, x, g, orth, 1e-3, 10.0);
    double eps = 1e-6;
    for (size_t i = 0; i < nv; ++i) {
      std::vector<double> xp = x, xm = x;
      xp[i] += eps;
      xm[i] -= eps;
      double fp = witness_objective(h, xp, std::span<double>{}, orth, 1e-3, 10.0);
      double fm = witness_objective(h, xm, std::span<double>{}, orth, 1e-3, 10.0);
      double num = (fp - fm) / (2 * eps);
      double denom = std::max({std::abs(num), std::abs(g[i]), 1e-6});
      CHECK(std::abs(num - g[i]) / denom < 1e-5);
    }
    ++points;
  }
}

TEST_CASE("filter soundness and Prop 6.2 implication") {
  std::mt19937_64 rng(151);
  WitnessOptions opt;
  opt.budget = 12;
  int witnessed = 0;
  for (int t = 0; t < 60; ++t) {
    SignPattern h = negative_diagonal_random(3, rng);
    if (!is_sns(h)) continue;
    auto res = find_symplectic_pair(h, opt);
    if (!res.witness) continue;
    ++witnessed;
    // independent re-verification
    CHECK(in_sign_class(res.witness->A, h));
    CHECK(in_sign_class(res.witness->D, h));
    CHECK(residual_max_norm(res.witness->A, res.witness->D) <= 1e-9);
    // necessary conditions must pass
    CHECK(prop31_check(h).pass);
    CHECK(prop61_check(h).pass);
    // maximality iff irreducibility for patterns that allow symplectic pairs
    CHECK(is_maximal_noneven(digraph_of(h).base) == is_irreducible(h));
  }
  CHECK(witnessed > 0);
}

TEST_CASE("requires_symplectic_sampling") {
  CHECK(requires_symplectic_sampling(fixtures::c2star_pattern(), 1000) == 1.0);
  CHECK(requires_symplectic_sampling(fixtures::figure1_pattern(), 200) == 0.0);
  SignPattern diag(2);
  diag.set(0, 0, -1);
  diag.set(1, 1, -1);
  CHECK(requires_symplectic_sampling(diag, 200) == 1.0);
  CHECK_THROWS_AS(requires_symplectic_sampling(SignPattern(2, {1, 1, 1, 1}), 10),
                  NotSNS);
}
