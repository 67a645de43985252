#pragma once

// The complexified action of p_ε = x3 + iε x1² on the sphere.
//
// In the chart (z, w̄) the extended symbol is
//   p̃_ε(z, w̄) = (z w̄ - 1)/(1 + z w̄) + iε (z + w̄)²/(1 + z w̄)²,
// and p̃_ε = λ is equivalent (away from 1 + z w̄ = 0) to the quadratic
//   A(z) w̄² + B(z) w̄ + C(z) = 0,
//   A = (1-λ) z² + iε,  B = 2z(iε - λ),  C = iε z² - 1 - λ.
// The action is the integral of α̃ = i(z dw̄ - w̄ dz) / (2(1 + z w̄)) over the
// cycle z = ρ e^{iθ}, w̄ = w̄₊(z), ρ = sqrt((1 + Re λ)/(1 - Re λ)).

#include <array>
#include <optional>

#include "btq/types.hpp"

namespace btq {

struct LevelQuadratic {
  cplx lambda;
  double eps = 0.0;

  cplx a(cplx z) const { return (1.0 - lambda) * z * z + cplx{0.0, eps}; }
  cplx b(cplx z) const { return 2.0 * z * (cplx{0.0, eps} - lambda); }
  cplx c(cplx z) const { return cplx{0.0, eps} * z * z - 1.0 - lambda; }
  cplx da(cplx z) const { return 2.0 * (1.0 - lambda) * z; }
  cplx db(cplx) const { return 2.0 * (cplx{0.0, eps} - lambda); }
  cplx dc(cplx z) const { return 2.0 * cplx{0.0, eps} * z; }

  /// Both roots in w̄. Throws RootAtInfinity when A(z) vanishes and
  /// BranchPinch when the roots collide.
  std::array<cplx, 2> roots(cplx z) const;

  /// dw̄/dz along the level set, by implicit differentiation.
  cplx slope(cplx z, cplx wbar) const;
};

/// p̃_ε(z, w̄) - λ from the rational expression. Throws PoleOnLocus when
/// |1 + z w̄| < 1e-14.
cplx level_residual(cplx z, cplx wbar, cplx lambda, double eps);

/// Number of equal steps in the ε-homotopy that seeds w̄₊.
inline constexpr int kSeedHomotopySteps = 16;

/// The root w̄₊(z). With a hint, the root nearest the hint; otherwise the
/// root reached by continuation in ε from the ε = 0 root w̄ = (1+λ)/((1-λ) z),
/// which is conj(z) on the real cycle.
cplx wbar_plus(cplx z, cplx lambda, double eps, std::optional<cplx> hint = std::nullopt);

struct ActionOptions {
  double tol = 1e-12;
  double radius_scale = 1.0;
  int min_nodes = 64;
  int max_nodes = 65536;
};

struct ActionResult {
  cplx value;
  int nodes_used = 0;
  double last_delta = 0.0;
  double contour_radius = 0.0;
  int seed_steps = kSeedHomotopySteps;
};

/// Periodic trapezoid rule with node doubling. Throws WindowViolation when
/// |Re λ| >= 1, QuadratureNotConverged at the node cap, and BranchPinch when
/// the tracked root does not close up around the cycle.
ActionResult action_integral(cplx lambda, double eps, const ActionOptions& opts = {});

/// Central difference (I(λ+h) - I(λ-h)) / 2h with h = 1e-6 (1 + |λ|).
cplx action_derivative(cplx lambda, double eps, const ActionOptions& opts = {});

}  // namespace btq
