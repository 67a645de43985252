#include "btq/compare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "btq/error.hpp"
#include "btq/spectra.hpp"
#include "btq/symbol.hpp"
#include "parallel.hpp"

namespace btq {

std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  if (n == 0) return {};
  const std::size_t m = cost.front().size();
  if (n > m) throw Error(ErrorKind::CountMismatch, "assignment needs rows <= columns");
  for (const auto& row : cost) {
    if (row.size() != m) throw Error(ErrorKind::InvalidArgument, "assignment: ragged cost matrix");
  }

  // 1-based potentials u (rows) and v (columns); owner[j] is the row matched to
  // column j, 0 while the column is free.
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> owner(m + 1, 0), way(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    owner[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(m + 1, inf);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = owner[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double reduced = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (reduced < minv[j]) {
          minv[j] = reduced;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[owner[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (owner[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      owner[j0] = owner[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> assignment(n, -1);
  for (std::size_t j = 1; j <= m; ++j) {
    if (owner[j] != 0) assignment[owner[j] - 1] = static_cast<int>(j - 1);
  }
  return assignment;
}

ComparisonReport match_spectra(std::vector<cplx> exact, const std::vector<cplx>& approx) {
  if (exact.empty() || approx.empty()) {
    throw Error(ErrorKind::InvalidArgument, "match_spectra: both lists must be nonempty");
  }
  if (exact.size() > approx.size()) {
    throw Error(ErrorKind::CountMismatch,
                "match_spectra: " + std::to_string(exact.size()) + " exact values but only " +
                    std::to_string(approx.size()) + " approximations");
  }
  std::sort(exact.begin(), exact.end(), canonical_less);

  std::vector<std::vector<double>> cost(exact.size(), std::vector<double>(approx.size()));
  for (std::size_t i = 0; i < exact.size(); ++i) {
    for (std::size_t j = 0; j < approx.size(); ++j) cost[i][j] = std::abs(exact[i] - approx[j]);
  }
  const auto assignment = min_cost_assignment(cost);

  ComparisonReport report;
  double sum = 0.0;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const auto j = static_cast<std::size_t>(assignment[i]);
    const double d = cost[i][j];
    report.pairs.push_back({exact[i], approx[j], d});
    report.max_error = std::max(report.max_error, d);
    sum += d;
  }
  report.mean_error = sum / static_cast<double>(exact.size());
  report.exact_count_in_window = static_cast<int>(exact.size());
  report.bs_count_in_window = static_cast<int>(approx.size());
  return report;
}

ComparisonReport compare_spectra(int k, double eps, Variant variant, double window,
                                 const ActionOptions& opts) {
  if (!(window > 0.0) || window > kSeedWindow) {
    throw Error(ErrorKind::InvalidArgument, "compare: window must lie in (0, 0.9]");
  }
  const auto family = variant == Variant::Principal ? OperatorFamily::T : OperatorFamily::S;
  const auto spectrum = eigenvalues(operator_matrix(family, k, eps));

  const double wide = std::min(1.05 * window, kSeedWindow);
  auto solutions = bs_spectrum(k, eps, variant, wide, opts);

  std::vector<cplx> exact_in;
  for (const auto& ev : spectrum.eigenvalues) {
    if (std::abs(ev.real()) <= window) exact_in.push_back(ev);
  }
  std::vector<cplx> approx;
  int bs_in_window = 0;
  for (const auto& s : solutions) {
    if (s.failure) continue;
    approx.push_back(s.lambda);
    if (std::abs(s.lambda.real()) <= window) ++bs_in_window;
  }

  ComparisonReport report = match_spectra(exact_in, approx);
  report.bs_count_in_window = bs_in_window;
  report.k = k;
  report.eps = eps;
  report.variant = variant;
  report.window = window;
  report.exact_spectrum = spectrum.eigenvalues;
  report.bs_solutions = std::move(solutions);
  return report;
}

double fit_loglog_slope(const std::vector<ConvergenceRow>& table) {
  if (table.size() < 2) throw Error(ErrorKind::InvalidArgument, "slope fit needs >= 2 rows");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& row : table) {
    if (row.k <= 0 || !(row.max_error > 0.0)) {
      throw Error(ErrorKind::InvalidArgument, "slope fit needs positive k and errors");
    }
    const double x = std::log(static_cast<double>(row.k));
    const double y = std::log(row.max_error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(table.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ConvergenceStudy convergence_study(const std::vector<int>& ks, double eps, Variant variant,
                                   double window, const ActionOptions& opts) {
  if (ks.size() < 3) throw Error(ErrorKind::InvalidArgument, "convergence_study needs >= 3 ks");
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 3 || (i > 0 && ks[i] <= ks[i - 1])) {
      throw Error(ErrorKind::InvalidArgument,
                  "convergence_study: ks must be strictly increasing and >= 3");
    }
  }
  ConvergenceStudy study;
  study.table.resize(ks.size());
  detail::parallel_for(ks.size(), [&](std::size_t i) {
    study.table[i] = {ks[i], compare_spectra(ks[i], eps, variant, window, opts).max_error};
  });
  study.slope = fit_loglog_slope(study.table);
  return study;
}

}  // namespace btq
