#pragma once

#include <vector>

#include "btq/action.hpp"
#include "btq/bs.hpp"
#include "btq/types.hpp"

namespace btq {

struct MatchedPair {
  cplx exact;
  cplx approx;
  double distance = 0.0;
};

struct ComparisonReport {
  std::vector<MatchedPair> pairs;  // in canonical order of `exact`
  double max_error = 0.0;
  double mean_error = 0.0;
  int exact_count_in_window = 0;
  int bs_count_in_window = 0;
  int k = 0;
  double eps = 0.0;
  Variant variant = Variant::Principal;
  double window = 0.0;
  /// Full operator spectrum and all Bohr-Sommerfeld solutions, for plotting.
  std::vector<cplx> exact_spectrum;
  std::vector<BSSolution> bs_solutions;
};

/// Minimum-cost assignment of rows to distinct columns (rows <= cols), by the
/// Hungarian method with potentials. Returns the column chosen for each row.
std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost);

/// Optimal one-to-one matching of every exact eigenvalue to a distinct
/// approximation, minimizing the summed complex distance. Throws CountMismatch
/// when there are fewer approximations than exact values, InvalidArgument when
/// either list is empty.
ComparisonReport match_spectra(std::vector<cplx> exact, const std::vector<cplx>& approx);

/// Full pipeline at one k: exact spectrum of T (principal) or S (halfform),
/// Bohr-Sommerfeld solutions on a 5% wider window, matching of the exact
/// eigenvalues with |Re λ| <= window.
ComparisonReport compare_spectra(int k, double eps, Variant variant, double window = 0.8,
                                 const ActionOptions& opts = {});

struct ConvergenceRow {
  int k = 0;
  double max_error = 0.0;
};

struct ConvergenceStudy {
  std::vector<ConvergenceRow> table;
  double slope = 0.0;
};

/// Least-squares slope of log(max_error) against log(k).
double fit_loglog_slope(const std::vector<ConvergenceRow>& table);

/// compare_spectra for each k (run concurrently) and the fitted order.
/// Requires ks strictly increasing with at least three entries.
ConvergenceStudy convergence_study(const std::vector<int>& ks, double eps, Variant variant,
                                   double window = 0.8, const ActionOptions& opts = {});

}  // namespace btq
