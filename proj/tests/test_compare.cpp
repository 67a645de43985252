#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "btq/compare.hpp"
#include "btq/error.hpp"
#include "btq/spectra.hpp"
#include "btq/symbol.hpp"
#include "oracles.hpp"

using namespace btq;

TEST_CASE("match_spectra examples") {
  const std::vector<cplx> a{-0.5, 0.0, 0.5};
  const auto same = match_spectra(a, a);
  CHECK(same.max_error == 0.0);
  CHECK(same.mean_error == 0.0);
  CHECK(same.pairs.size() == 3);

  const auto forced = match_spectra({0.0, 1.0}, {1.1, 0.05});
  REQUIRE(forced.pairs.size() == 2);
  CHECK(forced.pairs[0].exact == cplx(0.0));
  CHECK(forced.pairs[0].approx == cplx(0.05));
  CHECK(forced.pairs[1].exact == cplx(1.0));
  CHECK(forced.pairs[1].approx == cplx(1.1));
  CHECK(forced.max_error == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(forced.mean_error == doctest::Approx(0.075).epsilon(1e-14));
}

TEST_CASE("match_spectra errors") {
  try {
    match_spectra({0.0, 1.0, 2.0}, {0.0, 1.0});
    FAIL("expected CountMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CountMismatch);
  }
  CHECK_THROWS_AS(match_spectra({}, {1.0}), Error);
  CHECK_THROWS_AS(match_spectra({1.0}, {}), Error);
}

TEST_CASE("matching a list with itself is exact") {
  std::mt19937 rng(23);
  std::normal_distribution<double> g;
  for (int n : {1, 4, 17, 60}) {
    std::vector<cplx> a(static_cast<std::size_t>(n));
    for (auto& v : a) v = cplx(g(rng), g(rng));
    CHECK(match_spectra(a, a).max_error == 0.0);
  }
}

TEST_CASE("assignment is optimal on small instances") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + trial % 5;
    const std::size_t cols = rows + (trial / 5) % 3;
    std::vector<std::vector<double>> cost(rows, std::vector<double>(cols));
    for (auto& row : cost)
      for (auto& c : row) c = u(rng);
    const auto choice = min_cost_assignment(cost);
    REQUIRE(choice.size() == rows);
    double total = 0.0;
    std::vector<bool> used(cols, false);
    for (std::size_t i = 0; i < rows; ++i) {
      const auto c = static_cast<std::size_t>(choice[i]);
      CHECK(!used[c]);
      used[c] = true;
      total += cost[i][c];
    }
    CHECK(total == doctest::Approx(oracle::brute_force_assignment_cost(cost)).epsilon(1e-12));
  }
}

TEST_CASE("match_spectra against brute force on complex points") {
  std::mt19937 rng(31);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 5;
    std::vector<cplx> exact(n), approx(n + trial % 2);
    for (auto& v : exact) v = cplx(g(rng), g(rng));
    for (auto& v : approx) v = cplx(g(rng), g(rng));
    const auto report = match_spectra(exact, approx);
    std::vector<std::vector<double>> cost(n, std::vector<double>(approx.size()));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < approx.size(); ++j) cost[i][j] = std::abs(exact[i] - approx[j]);
    double total = 0.0;
    for (const auto& p : report.pairs) total += p.distance;
    CHECK(total == doctest::Approx(oracle::brute_force_assignment_cost(cost)).epsilon(1e-12));
    CHECK(report.mean_error == doctest::Approx(total / n).epsilon(1e-12));
  }
}

TEST_CASE("fit_loglog_slope") {
  CHECK(fit_loglog_slope({{10, 1e-1}, {100, 1e-2}, {1000, 1e-3}}) ==
        doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(fit_loglog_slope({{20, 4.0}, {40, 1.0}, {80, 0.25}}) ==
        doctest::Approx(-2.0).epsilon(1e-14));
  CHECK_THROWS_AS(fit_loglog_slope({{10, 1.0}}), Error);
  CHECK_THROWS_AS(fit_loglog_slope({{10, 1.0}, {20, 0.0}}), Error);
}

TEST_CASE("compare_spectra at eps = 0 is exact") {
  const auto report = compare_spectra(20, 0.0, Variant::Principal);
  CHECK(report.max_error <= 1e-10);
  CHECK(report.exact_count_in_window == 17);
  CHECK(report.bs_count_in_window == 17);
  CHECK(report.exact_spectrum.size() == 21);
  CHECK(report.k == 20);
  CHECK(report.window == 0.8);
}

TEST_CASE("counting: exact eigenvalues and principal solutions in the window") {
  for (int k : {20, 100}) {
    CAPTURE(k);
    const auto t = eigenvalues(operator_matrix(OperatorFamily::T, k, 0.2)).eigenvalues;
    int exact = 0;
    for (const auto& v : t) exact += std::abs(v.real()) <= 0.8;
    int solutions = 0;
    for (const auto& s : bs_spectrum(k, 0.2, Variant::Principal, 0.8 * 1.05)) {
      solutions += !s.failure && std::abs(s.lambda.real()) <= 0.8;
    }
    CHECK(exact == solutions);
    const auto report = compare_spectra(k, 0.2, Variant::Principal);
    CHECK(report.exact_count_in_window == exact);
    CHECK(report.bs_count_in_window == solutions);
  }
}

TEST_CASE("convergence_study preconditions") {
  CHECK_THROWS_AS(convergence_study({20, 40}, 0.2, Variant::Principal), Error);
  CHECK_THROWS_AS(convergence_study({20, 40, 40}, 0.2, Variant::Principal), Error);
  CHECK_THROWS_AS(convergence_study({40, 20, 80}, 0.2, Variant::Principal), Error);
}

TEST_CASE("convergence_study orders on small ks") {
  const auto half = convergence_study({20, 40, 80}, 0.2, Variant::HalfForm);
  REQUIRE(half.table.size() == 3);
  CHECK(half.table[0].k == 20);
  CHECK(half.slope <= -1.5);
  CHECK(half.slope >= -2.5);
  const auto principal = convergence_study({20, 40, 80}, 0.2, Variant::Principal);
  CHECK(principal.slope <= -0.5);
  CHECK(principal.slope >= -1.5);
}
