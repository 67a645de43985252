#pragma once

// Bohr-Sommerfeld conditions for p_ε = x3 + iε x1² on the sphere:
//   principal:  I(λ, ε) = 2π j / k
//   halfform:   I(λ, ε) + π / k = 2π j / k, i.e. I = (2j - 1) π / k,
// solved by Newton iteration on the holomorphic action, continued in ε from
// the exact ε = 0 solutions λ₀ = (2j - k)/k and (2j - 1 - k)/k.

#include <optional>
#include <string_view>
#include <vector>

#include "btq/action.hpp"
#include "btq/error.hpp"
#include "btq/types.hpp"

namespace btq {

enum class Variant { Principal, HalfForm };

std::string_view to_string(Variant variant) noexcept;
Variant parse_variant(std::string_view text);

inline constexpr int kEpsContinuationSteps = 4;
inline constexpr int kMaxNewtonIterations = 50;
inline constexpr double kBsResidualTol = 1e-10;
inline constexpr double kSeedWindow = 0.9;

struct BSSolution {
  int j = 0;
  Variant variant = Variant::Principal;
  cplx lambda;
  int iterations = 0;  // Newton steps summed over the continuation stages
  double final_residual = 0.0;
  int k = 0;
  double eps = 0.0;
  int continuation_steps = kEpsContinuationSteps;
  /// Set by bs_spectrum when Re λ left 1.05 × the requested window.
  bool outside_window = false;
  /// Set by bs_spectrum when this j failed; lambda then holds the seed.
  std::optional<ErrorKind> failure;
};

/// Target value of the action for quantum number j.
double bs_target(int k, int j, Variant variant);

/// The ε = 0 solution, used as the Newton seed.
double bs_seed(int k, int j, Variant variant);

/// Throws WindowViolation if |seed| > 0.9, NonConvergence if Newton stalls,
/// and propagates action errors.
BSSolution bs_solve(int k, double eps, int j, Variant variant, const ActionOptions& opts = {});

/// bs_solve for every j with |seed| <= window_half_width, in parallel, sorted
/// by Re λ. Per-j failures are reported in BSSolution::failure.
std::vector<BSSolution> bs_spectrum(int k, double eps, Variant variant,
                                    double window_half_width = 0.8,
                                    const ActionOptions& opts = {});

}  // namespace btq
