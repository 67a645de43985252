#include "btq/action.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "btq/error.hpp"

namespace btq {

namespace {

constexpr double kLeadingTol = 1e-13;
constexpr double kPinchTol = 1e-13;
constexpr double kPoleTol = 1e-14;

cplx nearest(const std::array<cplx, 2>& roots, cplx target) {
  return std::abs(roots[0] - target) <= std::abs(roots[1] - target) ? roots[0] : roots[1];
}

// Pullback of α̃ to the cycle, per unit θ: with dz = i z dθ,
//   α̃ = i (z w̄' - w̄) i z dθ / (2(1 + z w̄)) = -z (z w̄' - w̄) / (2(1 + z w̄)) dθ.
cplx integrand(const LevelQuadratic& level, cplx z, cplx wbar) {
  const cplx q = 1.0 + z * wbar;
  if (std::abs(q) < kPoleTol) {
    throw Error(ErrorKind::PoleOnLocus, "action_integral: cycle meets 1 + z w = 0");
  }
  const cplx slope = level.slope(z, wbar);
  return -z * (z * slope - wbar) / (2.0 * q);
}

}  // namespace

std::array<cplx, 2> LevelQuadratic::roots(cplx z) const {
  const cplx qa = a(z);
  const cplx qb = b(z);
  const cplx qc = c(z);
  if (std::abs(qa) <= kLeadingTol) {
    throw Error(ErrorKind::RootAtInfinity, "leading coefficient of the level quadratic vanishes");
  }
  const cplx disc = qb * qb - 4.0 * qa * qc;
  const double scale = std::norm(qa) + std::norm(qb) + std::norm(qc);
  if (std::abs(disc) <= kPinchTol * scale) {
    throw Error(ErrorKind::BranchPinch, "the two sheets of the level set collide");
  }
  cplx sq = std::sqrt(disc);
  // Pick the sign that avoids cancellation in -b ± sqrt(disc).
  if (std::real(std::conj(qb) * sq) < 0.0) sq = -sq;
  const cplx q = -0.5 * (qb + sq);
  return {q / qa, qc / q};
}

cplx LevelQuadratic::slope(cplx z, cplx wbar) const {
  const cplx num = da(z) * wbar * wbar + db(z) * wbar + dc(z);
  const cplx den = 2.0 * a(z) * wbar + b(z);
  return -num / den;
}

cplx level_residual(cplx z, cplx wbar, cplx lambda, double eps) {
  const cplx q = 1.0 + z * wbar;
  if (std::abs(q) < kPoleTol) {
    throw Error(ErrorKind::PoleOnLocus, "level_residual: 1 + z w vanishes");
  }
  const cplx s = z + wbar;
  const cplx value = (z * wbar - 1.0) / q + cplx{0.0, eps} * s * s / (q * q);
  return value - lambda;
}

cplx wbar_plus(cplx z, cplx lambda, double eps, std::optional<cplx> hint) {
  if (hint) return nearest(LevelQuadratic{lambda, eps}.roots(z), *hint);

  // At ε = 0 the roots are w̄ z = (1+λ)/(1-λ) and the spurious w̄ z = -1.
  cplx current = (1.0 + lambda) / ((1.0 - lambda) * z);
  const int steps = eps == 0.0 ? 1 : kSeedHomotopySteps;
  for (int s = 1; s <= steps; ++s) {
    const double eps_s = eps * s / steps;
    current = nearest(LevelQuadratic{lambda, eps_s}.roots(z), current);
  }
  return current;
}

ActionResult action_integral(cplx lambda, double eps, const ActionOptions& opts) {
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()) || !std::isfinite(eps)) {
    throw Error(ErrorKind::InvalidArgument, "action_integral: non-finite input");
  }
  if (std::abs(lambda.real()) >= 1.0) {
    throw Error(ErrorKind::WindowViolation, "action_integral: |Re lambda| must be < 1");
  }
  if (!(opts.radius_scale > 0.0) || opts.min_nodes < 2 || opts.max_nodes < opts.min_nodes) {
    throw Error(ErrorKind::InvalidArgument, "action_integral: bad options");
  }

  const LevelQuadratic level{lambda, eps};
  const double rho =
      opts.radius_scale * std::sqrt((1.0 + lambda.real()) / (1.0 - lambda.real()));
  auto node = [rho](int j, int n) { return std::polar(rho, 2.0 * std::numbers::pi * j / n); };

  ActionResult result;
  result.contour_radius = rho;

  // Root tracked along θ, one entry per node of the current rule.
  int n = opts.min_nodes;
  std::vector<cplx> wbar(static_cast<std::size_t>(n));
  wbar[0] = wbar_plus(node(0, n), lambda, eps);
  cplx raw_sum = integrand(level, node(0, n), wbar[0]);
  for (int j = 1; j < n; ++j) {
    const cplx z = node(j, n);
    wbar[static_cast<std::size_t>(j)] = wbar_plus(z, lambda, eps, wbar[static_cast<std::size_t>(j - 1)]);
    raw_sum += integrand(level, z, wbar[static_cast<std::size_t>(j)]);
  }
  // Closing the loop must land back on the seed sheet.
  const auto closing = level.roots(node(0, n));
  if (nearest(closing, wbar.back()) != nearest(closing, wbar[0])) {
    throw Error(ErrorKind::BranchPinch, "action_integral: tracked root does not close up");
  }
  cplx value = raw_sum * (2.0 * std::numbers::pi / n);

  while (2 * n <= opts.max_nodes) {
    const int m = 2 * n;
    std::vector<cplx> refined(static_cast<std::size_t>(m));
    cplx added{0.0, 0.0};
    for (int j = 0; j < n; ++j) {
      refined[static_cast<std::size_t>(2 * j)] = wbar[static_cast<std::size_t>(j)];
      const cplx z = node(2 * j + 1, m);
      const cplx w = wbar_plus(z, lambda, eps, wbar[static_cast<std::size_t>(j)]);
      refined[static_cast<std::size_t>(2 * j + 1)] = w;
      added += integrand(level, z, w);
    }
    raw_sum += added;
    const cplx next = raw_sum * (2.0 * std::numbers::pi / m);
    result.last_delta = std::abs(next - value);
    value = next;
    wbar = std::move(refined);
    n = m;
    if (result.last_delta <= opts.tol) {
      result.value = value;
      result.nodes_used = n;
      return result;
    }
  }
  throw Error(ErrorKind::QuadratureNotConverged,
              "action_integral: refinement delta " + std::to_string(result.last_delta) +
                  " above tolerance at " + std::to_string(n) + " nodes");
}

cplx action_derivative(cplx lambda, double eps, const ActionOptions& opts) {
  const double h = 1e-6 * (1.0 + std::abs(lambda));
  const cplx up = action_integral(lambda + h, eps, opts).value;
  const cplx down = action_integral(lambda - h, eps, opts).value;
  return (up - down) / (2.0 * h);
}

}  // namespace btq
