#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/QR>

#include "btq/error.hpp"
#include "btq/spectra.hpp"
#include "btq/symbol.hpp"
#include "oracles.hpp"

using namespace btq;

namespace {

double max_pairwise(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  REQUIRE(a.size() == b.size());
  double err = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) err = std::max(err, std::abs(a[i] - b[i]));
  return err;
}

// Each value of `a` to its nearest value in `b`.
double max_nearest(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double err = 0.0;
  for (const auto& x : a) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& y : b) best = std::min(best, std::abs(x - y));
    err = std::max(err, best);
  }
  return err;
}

}  // namespace

TEST_CASE("eigenvalues of the diagonal T(k, 0)") {
  const auto s = eigenvalues(operator_matrix(OperatorFamily::T, 4, 0.0));
  CHECK(max_pairwise(s.eigenvalues, {-1.0, -0.5, 0.0, 0.5, 1.0}) < 1e-15);
  CHECK(s.k == 4);
}

TEST_CASE("eigenvalues of T(2, 0.2) from the parity blocks by hand") {
  // Even block [[-1, 0.2i], [0.2i, 1]]: λ² - 1 - (0.2i)² = 0, so λ = ±sqrt(0.96).
  // The odd block is the scalar 0.2i.
  const auto even = oracle::quadratic_roots(1.0, 0.0, -(1.0 - 0.04));
  std::vector<cplx> expected{even[0], even[1], cplx{0.0, 0.2}};
  std::sort(expected.begin(), expected.end(), canonical_less);
  const auto s = eigenvalues(operator_matrix(OperatorFamily::T, 2, 0.2));
  CHECK(max_pairwise(s.eigenvalues, expected) < 1e-14);
  CHECK(std::abs(s.eigenvalues.front() + std::sqrt(0.96)) < 1e-14);
}

TEST_CASE("eigenvalues of the identity and canonical order") {
  const auto s = eigenvalues(CMatrix::Identity(5, 5));
  CHECK(max_pairwise(s, std::vector<cplx>(5, 1.0)) == 0.0);

  CMatrix d = CMatrix::Zero(4, 4);
  d.diagonal() << cplx{0.5, 1.0}, cplx{-1.0, 0.0}, cplx{0.5, -1.0}, cplx{0.0, 3.0};
  const auto sorted = eigenvalues(d);
  CHECK(max_pairwise(sorted, {cplx{-1, 0}, cplx{0, 3}, cplx{0.5, -1}, cplx{0.5, 1}}) < 1e-15);

  CHECK_THROWS_AS(eigenvalues(CMatrix::Zero(2, 3)), Error);
}

TEST_CASE("Hermitian input yields real eigenvalues") {
  for (int k : {5, 40, 120}) {
    const auto s = eigenvalues(toeplitz_matrix(build_symbol(SymbolName::X1Sq), k));
    for (const auto& ev : s.eigenvalues) CHECK(std::abs(ev.imag()) <= 1e-12);
  }
}

TEST_CASE("parity_blocks") {
  const auto t = operator_matrix(OperatorFamily::T, 2, 0.2);
  const auto blocks = parity_blocks(t);
  CMatrix even(2, 2);
  even << -1.0, cplx(0, 0.2), cplx(0, 0.2), 1.0;
  CHECK((blocks.even - even).cwiseAbs().maxCoeff() < 1e-15);
  REQUIRE(blocks.odd.rows() == 1);
  CHECK(std::abs(blocks.odd(0, 0) - cplx(0, 0.2)) < 1e-15);

  const auto diag = parity_blocks(toeplitz_matrix(build_symbol(SymbolName::X3), 3));
  CHECK(diag.even.rows() == 2);
  CHECK(diag.odd.rows() == 2);
  CHECK(diag.even(0, 1) == cplx(0.0));
  CHECK(diag.odd(1, 0) == cplx(0.0));

  try {
    parity_blocks(toeplitz_matrix(build_symbol(SymbolName::Ladder), 5));
    FAIL("expected NotParityPreserving");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotParityPreserving);
  }
}

TEST_CASE("parity consistency: block spectra equal the full spectrum") {
  for (int k : {2, 7, 20, 61}) {
    for (double eps : {0.0, 0.2, 0.45}) {
      for (auto family : {OperatorFamily::T, OperatorFamily::S}) {
        if (family == OperatorFamily::S && k < 3) continue;
        CAPTURE(k);
        CAPTURE(eps);
        const auto m = operator_matrix(family, k, eps);
        const auto full = eigenvalues(m).eigenvalues;
        const auto blocks = eigenvalues_by_parity(m).eigenvalues;
        REQUIRE(full.size() == blocks.size());
        CHECK(max_nearest(full, blocks) < 1e-10);
        CHECK(max_nearest(blocks, full) < 1e-10);
      }
    }
  }
}

TEST_CASE("resolvent_norm") {
  CMatrix d = CMatrix::Zero(3, 3);
  d.diagonal() << -1.0, 0.0, 1.0;
  CHECK(resolvent_norm(d, 5.0) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(std::isinf(resolvent_norm(CMatrix::Identity(3, 3), 1.0)));

  // Normal matrices: resolvent norm is 1 / dist(λ, spectrum).
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  CMatrix diag = CMatrix::Zero(6, 6);
  for (int i = 0; i < 6; ++i) diag(i, i) = cplx(u(rng), u(rng));
  for (int trial = 0; trial < 25; ++trial) {
    const cplx lambda(u(rng), u(rng));
    double dist = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 6; ++i) dist = std::min(dist, std::abs(diag(i, i) - lambda));
    CHECK(resolvent_norm(diag, lambda) * dist == doctest::Approx(1.0).epsilon(1e-12));
  }

  // Shifted nilpotent ladder: σ_min is tiny although 0.3 is far from {0}.
  const auto ladder = operator_matrix(OperatorFamily::Ladder, 20, 0.0);
  CHECK(resolvent_norm(ladder, 0.3) >= 1e6);
}

TEST_CASE("power_norm") {
  const auto ladder = operator_matrix(OperatorFamily::Ladder, 10, 0.0);
  CHECK(power_norm(ladder, 11) == 0.0);
  CHECK(power_norm(ladder, 10) > 0.0);
  CHECK(power_norm(CMatrix::Identity(4, 4), 7) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(power_norm(CMatrix::Identity(2, 2), 9), Error);
  CHECK_THROWS_AS(power_norm(CMatrix::Identity(2, 2), 0), Error);
}

TEST_CASE("spectral stability in eps") {
  const auto a = eigenvalues(operator_matrix(OperatorFamily::T, 20, 0.0)).eigenvalues;
  const auto b = eigenvalues(operator_matrix(OperatorFamily::T, 20, 1e-6)).eigenvalues;
  CHECK(max_nearest(a, b) <= 1e-4);
  CHECK(max_nearest(b, a) <= 1e-4);
}

TEST_CASE("ladder: exact nilpotency and pseudospectral instability") {
  const auto ladder = operator_matrix(OperatorFamily::Ladder, 100, 0.0);
  CHECK(power_norm(ladder, 101) == 0.0);
  CHECK(resolvent_norm(ladder, 0.3) >= 1e6);

  // The stored matrix is exactly bidiagonal, so the QR iteration deflates to
  // exact zeros.
  const auto exact = eigenvalues(ladder).eigenvalues;
  double radius = 0.0;
  for (const auto& ev : exact) radius = std::max(radius, std::abs(ev));
  CHECK(radius == 0.0);

  // The same operator written in another orthonormal basis: rounding in the
  // change of basis is enough to scatter the computed eigenvalues far from 0.
  std::mt19937 rng(11);
  std::normal_distribution<double> g;
  CMatrix random(101, 101);
  for (Eigen::Index i = 0; i < random.size(); ++i) random(i) = cplx(g(rng), g(rng));
  const CMatrix q = Eigen::HouseholderQR<CMatrix>(random).householderQ();
  const CMatrix rotated = q * ladder.entries * q.adjoint();
  const auto scattered = eigenvalues(rotated);
  double rotated_radius = 0.0;
  for (const auto& ev : scattered) rotated_radius = std::max(rotated_radius, std::abs(ev));
  CHECK(rotated_radius > 0.1);
  CHECK(power_norm(rotated, 101) < 1e-10);
}
