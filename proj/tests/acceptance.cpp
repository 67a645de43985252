// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/QR>

#include "btq/action.hpp"
#include "btq/bs.hpp"
#include "btq/cli.hpp"
#include "btq/compare.hpp"
#include "btq/error.hpp"
#include "btq/spectra.hpp"
#include "btq/symbol.hpp"

using namespace btq;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

Verdict exact_diagonal_spectrum() {
  const auto s = eigenvalues(operator_matrix(OperatorFamily::T, 100, 0.0)).eigenvalues;
  double worst = 0.0;
  for (int l = 0; l <= 100; ++l) {
    worst = std::max(worst, std::abs(s[static_cast<std::size_t>(l)] - cplx((2.0 * l - 100) / 100)));
  }
  return {worst <= 1e-12, fmt("max deviation %.3e", worst)};
}

Verdict oracle_equivalence() {
  double worst = 0.0;
  for (auto name : {SymbolName::X3, SymbolName::X1Sq, SymbolName::Ladder, SymbolName::One}) {
    const auto expr = build_symbol(name);
    for (int k = 2; k <= 8; ++k) {
      const auto closed = toeplitz_matrix(expr, k);
      const auto quad = toeplitz_quadrature_oracle(expr, k);
      worst = std::max(worst, (closed.entries - quad.entries).cwiseAbs().maxCoeff());
    }
  }
  return {worst <= 1e-8, fmt("max entry difference %.3e", worst)};
}

Verdict action_law() {
  double law = 0.0;
  for (double lambda : {-0.6, -0.3, 0.0, 0.3, 0.6}) {
    law = std::max(law, std::abs(action_integral(lambda, 0.0).value -
                                 std::numbers::pi * (1.0 + lambda)));
  }
  double invariance = 0.0;
  auto probe = [&](double lambda, double eps) {
    const cplx base = action_integral(lambda, eps).value;
    for (double r : {0.85, 1.2}) {
      ActionOptions opts;
      opts.radius_scale = r;
      invariance = std::max(invariance, std::abs(action_integral(lambda, eps, opts).value - base));
    }
  };
  for (double lambda : {-0.6, -0.3, 0.0, 0.3, 0.6}) probe(lambda, 0.0);
  for (double lambda : {0.0, 0.4}) probe(lambda, 0.2);
  return {law <= 1e-10 && invariance <= 1e-10,
          fmt("law error %.3e, contour change %.3e", law, invariance)};
}

Verdict bs_exactness() {
  double worst = 0.0;
  for (int k : {10, 20, 50, 100}) {
    for (auto variant : {Variant::Principal, Variant::HalfForm}) {
      worst = std::max(worst, compare_spectra(k, 0.0, variant).max_error);
    }
  }
  return {worst <= 1e-10, fmt("max error %.3e", worst)};
}

Verdict convergence_orders() {
  const std::vector<int> ks{20, 40, 80, 160};
  const auto half = convergence_study(ks, 0.2, Variant::HalfForm);
  const auto principal = convergence_study(ks, 0.2, Variant::Principal);
  const double e_half = half.table.back().max_error;
  const double e_principal = principal.table.back().max_error;
  const bool pass = half.slope >= -2.5 && half.slope <= -1.5 && principal.slope >= -1.5 &&
                    principal.slope <= -0.5 && e_half < e_principal / 5.0;
  return {pass, fmt("halfform slope %.3f, principal slope %.3f, k=160 errors %.3e vs %.3e",
                    half.slope, principal.slope, e_half, e_principal)};
}

Verdict counting() {
  bool pass = true;
  std::string detail;
  for (int k : {20, 100}) {
    int exact = 0;
    for (const auto& v : eigenvalues(operator_matrix(OperatorFamily::T, k, 0.2)).eigenvalues) {
      exact += std::abs(v.real()) <= 0.8;
    }
    const int bs = compare_spectra(k, 0.2, Variant::Principal).bs_count_in_window;
    pass = pass && exact == bs;
    detail += fmt("%sk=%d: %d exact, %d BS", detail.empty() ? "" : "; ", k, exact, bs);
  }
  return {pass, detail};
}

Verdict jordan_demo() {
  const auto ladder = operator_matrix(OperatorFamily::Ladder, 100, 0.0);
  const double power = power_norm(ladder, 101);
  const double resolvent = resolvent_norm(ladder, 0.3);
  double radius = 0.0;
  for (const auto& ev : eigenvalues(ladder).eigenvalues) radius = std::max(radius, std::abs(ev));
  const bool pass = power == 0.0 && resolvent >= 1e6 && radius > 0.1;

  // Not part of the verdict: the same operator in a random orthonormal basis.
  std::mt19937 rng(11);
  std::normal_distribution<double> g;
  CMatrix random(101, 101);
  for (Eigen::Index i = 0; i < random.size(); ++i) random(i) = cplx(g(rng), g(rng));
  const CMatrix q = Eigen::HouseholderQR<CMatrix>(random).householderQ();
  double rotated = 0.0;
  for (const auto& ev : eigenvalues(CMatrix(q * ladder.entries * q.adjoint()))) {
    rotated = std::max(rotated, std::abs(ev));
  }
  return {pass, fmt("||L^101|| = %g, ||(L-0.3)^-1|| = %.3e, max |eigenvalue| = %.3e "
                    "(%.3f after a random unitary change of basis)",
                    power, resolvent, radius, rotated)};
}

Verdict determinism() {
  auto once = [] {
    std::ostringstream out;
    std::ostringstream err;
    const int status = cli::run(
        {"btq", "compare", "--k", "100", "--eps", "0.2", "--variant", "halfform"}, out, err);
    return std::make_pair(status, out.str());
  };
  const auto a = once();
  const auto b = once();
  const bool pass = a.first == 0 && b.first == 0 && !a.second.empty() && a.second == b.second;
  return {pass, fmt("%zu and %zu bytes, %s", a.second.size(), b.second.size(),
                    a.second == b.second ? "identical" : "different")};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 when no runtime bound applies
  std::function<Verdict()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exact diagonal spectrum", 1.0, exact_diagonal_spectrum},
      {2, "oracle equivalence", 30.0, oracle_equivalence},
      {3, "eps=0 action law", 0.0, action_law},
      {4, "eps=0 Bohr-Sommerfeld exactness", 0.0, bs_exactness},
      {5, "convergence orders", 60.0, convergence_orders},
      {6, "counting", 0.0, counting},
      {7, "Jordan block and pseudospectrum", 0.0, jordan_demo},
      {8, "determinism", 0.0, determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("threw ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0.0 && seconds >= c.budget_seconds) {
      v.pass = false;
      v.detail += fmt(" (over the %.0f s budget)", c.budget_seconds);
    }
    failed += !v.pass;
    std::printf("criterion %d %-34s %s  %.2fs  %s\n", c.id, c.name, v.pass ? "PASS" : "FAIL",
                seconds, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed),
              criteria.size());
  return failed == 0 ? 0 : 1;
}
