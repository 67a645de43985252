#include "btq/bs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "parallel.hpp"

namespace btq {

namespace {

constexpr double kBoundarySlack = 1e-9;

// Numerator of the seed over k: λ₀ = seed_numerator / k.
int seed_numerator(int k, int j, Variant variant) {
  return variant == Variant::Principal ? 2 * j - k : 2 * j - 1 - k;
}

}  // namespace

std::string_view to_string(Variant variant) noexcept {
  return variant == Variant::Principal ? "principal" : "halfform";
}

Variant parse_variant(std::string_view text) {
  if (text == "principal") return Variant::Principal;
  if (text == "halfform") return Variant::HalfForm;
  throw Error(ErrorKind::InvalidArgument, "unknown variant '" + std::string(text) + "'");
}

double bs_target(int k, int j, Variant variant) {
  const double pi = std::numbers::pi;
  return variant == Variant::Principal ? 2.0 * pi * j / k : (2.0 * j - 1.0) * pi / k;
}

double bs_seed(int k, int j, Variant variant) {
  return static_cast<double>(seed_numerator(k, j, variant)) / k;
}

BSSolution bs_solve(int k, double eps, int j, Variant variant, const ActionOptions& opts) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "bs_solve: k must be positive");
  if (!std::isfinite(eps)) throw Error(ErrorKind::InvalidArgument, "bs_solve: eps must be finite");
  const double seed = bs_seed(k, j, variant);
  if (std::abs(seed) > kSeedWindow + kBoundarySlack) {
    throw Error(ErrorKind::WindowViolation,
                "bs_solve: seed " + std::to_string(seed) + " for j=" + std::to_string(j) +
                    " lies outside |lambda| <= 0.9");
  }

  BSSolution sol;
  sol.j = j;
  sol.variant = variant;
  sol.k = k;
  sol.eps = eps;
  sol.lambda = seed;
  const double target = bs_target(k, j, variant);

  for (int stage = 1; stage <= kEpsContinuationSteps; ++stage) {
    const double eps_s = eps * stage / kEpsContinuationSteps;
    bool converged = false;
    try {
      for (int it = 0; it <= kMaxNewtonIterations; ++it) {
        const cplx residual = action_integral(sol.lambda, eps_s, opts).value - target;
        sol.final_residual = std::abs(residual);
        if (sol.final_residual <= kBsResidualTol) {
          converged = true;
          break;
        }
        if (it == kMaxNewtonIterations) break;
        const cplx derivative = action_derivative(sol.lambda, eps_s, opts);
        if (derivative == cplx{0.0, 0.0} || !std::isfinite(std::abs(derivative))) break;
        sol.lambda -= residual / derivative;
        ++sol.iterations;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::WindowViolation) throw;
      throw Error(ErrorKind::NonConvergence,
                  "bs_solve: Newton iterate left the window (j=" + std::to_string(j) + ")");
    }
    if (!converged) {
      throw Error(ErrorKind::NonConvergence,
                  "bs_solve: j=" + std::to_string(j) + " residual " +
                      std::to_string(sol.final_residual) + " at eps=" + std::to_string(eps_s));
    }
  }
  return sol;
}

std::vector<BSSolution> bs_spectrum(int k, double eps, Variant variant, double window_half_width,
                                    const ActionOptions& opts) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "bs_spectrum: k must be positive");
  if (!(window_half_width > 0.0) || window_half_width > kSeedWindow + kBoundarySlack) {
    throw Error(ErrorKind::InvalidArgument, "bs_spectrum: window must lie in (0, 0.9]");
  }
  std::vector<int> js;
  for (int j = 0; j <= k + 1; ++j) {
    if (std::abs(seed_numerator(k, j, variant)) <= window_half_width * k + kBoundarySlack) {
      js.push_back(j);
    }
  }

  std::vector<BSSolution> out(js.size());
  detail::parallel_for(js.size(), [&](std::size_t i) {
    const int j = js[i];
    try {
      out[i] = bs_solve(k, eps, j, variant, opts);
    } catch (const Error& e) {
      BSSolution failed;
      failed.j = j;
      failed.variant = variant;
      failed.k = k;
      failed.eps = eps;
      failed.lambda = bs_seed(k, j, variant);
      failed.failure = e.kind();
      out[i] = failed;
    }
    out[i].outside_window = std::abs(out[i].lambda.real()) > 1.05 * window_half_width;
  });

  std::sort(out.begin(), out.end(), [](const BSSolution& a, const BSSolution& b) {
    if (a.lambda.real() != b.lambda.real()) return a.lambda.real() < b.lambda.real();
    return a.j < b.j;
  });
  return out;
}

}  // namespace btq
