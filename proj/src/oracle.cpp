// Direct quadrature of the Bergman integral
//
//   (T f) z^l = (k+1)/2π ∫_C f̃(z, w̄) (1 + z w̄)^k w^l (1 + |w|²)^-(k+2) |dw ∧ dw̄|
//
// with w = sqrt(t) e^{iψ}, so |dw ∧ dw̄| = dt dψ. The ψ-integrand is a
// trigonometric polynomial and the trapezoid rule is exact for it; the
// t-integral runs over geometric panels with Gauss-Legendre nodes. The
// resulting polynomial in z is sampled on the unit circle and its coefficients
// recovered by a discrete Fourier transform.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "btq/error.hpp"
#include "btq/symbol.hpp"

namespace btq {

namespace {

constexpr double kTailBound = 1e-12;

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

GaussRule gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

cplx ipow(cplx x, int n) {
  cplx r{1.0, 0.0};
  while (n > 0) {
    if (n & 1) r *= x;
    x *= x;
    n >>= 1;
  }
  return r;
}

double binomial(int n, int r) {
  if (r < 0 || r > n) return 0.0;
  double out = 1.0;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// Upper limit in t beyond which every term's contribution is below kTailBound.
// For t >= 1 and |z| = 1 the integrand of a term is bounded by
// |c| 2^(k-m) t^q with q = (l + b + k - m)/2 - k - 2.
double auto_cutoff(const SymbolExpr& expr, int k) {
  double cutoff = 1.0;
  for (const auto& t : expr.terms) {
    const double decay = -((k + t.b + k - t.m) / 2.0 - k - 2.0) - 1.0;
    if (decay <= 0.0) {
      throw Error(ErrorKind::DivergentIntegral, "toeplitz_quadrature_oracle: divergent term");
    }
    const double scale = 2.0 * std::numbers::pi * std::abs(t.coeff) * std::pow(2.0, k - t.m) /
                         (decay * kTailBound);
    cutoff = std::max(cutoff, std::pow(scale, 1.0 / decay));
  }
  return cutoff;
}

CMatrix integrate(const SymbolExpr& expr, int k, double cutoff, int gauss_nodes) {
  const int n_angle = 2 * k + 8;
  const int n_z = 2 * k + 8;
  const GaussRule rule = gauss_legendre(gauss_nodes);

  // Radial nodes over [0,1], [1,2], [2,4], ... up to the cutoff.
  std::vector<double> t_nodes;
  std::vector<double> t_weights;
  double lo = 0.0;
  double hi = 1.0;
  while (lo < cutoff) {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      t_nodes.push_back(mid + half * rule.nodes[i]);
      t_weights.push_back(half * rule.weights[i]);
    }
    lo = hi;
    hi *= 2.0;
  }

  std::vector<cplx> angle_phase(static_cast<std::size_t>(n_angle));
  for (int j = 0; j < n_angle; ++j) {
    angle_phase[static_cast<std::size_t>(j)] = std::polar(1.0, 2.0 * std::numbers::pi * j / n_angle);
  }
  const double angle_weight = 2.0 * std::numbers::pi / n_angle;

  CMatrix out = CMatrix::Zero(k + 1, k + 1);
  for (int col = 0; col <= k; ++col) {
    // Samples of the polynomial (T z^col)(z) on the unit circle.
    std::vector<cplx> samples(static_cast<std::size_t>(n_z));
    for (int s = 0; s < n_z; ++s) {
      const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * s / n_z);
      cplx total{0.0, 0.0};
      for (std::size_t it = 0; it < t_nodes.size(); ++it) {
        const double t = t_nodes[it];
        const double r = std::sqrt(t);
        const double radial = std::pow(1.0 + t, -(k + 2));
        cplx ring{0.0, 0.0};
        for (const auto& phase : angle_phase) {
          const cplx w = r * phase;
          const cplx wbar = std::conj(w);
          const cplx q = 1.0 + z * wbar;
          cplx f{0.0, 0.0};
          for (const auto& term : expr.terms) {
            f += term.coeff * ipow(z, term.a) * ipow(wbar, term.b) * ipow(q, k - term.m);
          }
          ring += f * ipow(w, col);
        }
        total += t_weights[it] * radial * angle_weight * ring;
      }
      samples[static_cast<std::size_t>(s)] = (k + 1) / (2.0 * std::numbers::pi) * total;
    }
    for (int row = 0; row <= k; ++row) {
      cplx coeff{0.0, 0.0};
      for (int s = 0; s < n_z; ++s) {
        coeff += samples[static_cast<std::size_t>(s)] *
                 std::polar(1.0, -2.0 * std::numbers::pi * row * s / n_z);
      }
      coeff /= static_cast<double>(n_z);
      out(row, col) = coeff * std::sqrt(binomial(k, col) / binomial(k, row));
    }
  }
  return out;
}

}  // namespace

ToeplitzMatrix toeplitz_quadrature_oracle(const SymbolExpr& expr, int k, const OracleOptions& opts) {
  if (k < 1 || k > 16) {
    throw Error(ErrorKind::InvalidArgument, "toeplitz_quadrature_oracle: needs 1 <= k <= 16");
  }
  const SymbolExpr canon = expr.canonical();
  if (k < canon.max_pole_order()) {
    throw Error(ErrorKind::DegreeTooSmall, "toeplitz_quadrature_oracle: k below pole order");
  }
  const double cutoff = opts.radial_cutoff > 0.0 ? opts.radial_cutoff : auto_cutoff(canon, k);
  int nodes = opts.nodes > 0 ? opts.nodes : 8;

  CMatrix previous = integrate(canon, k, cutoff, nodes);
  double delta = 0.0;
  while (nodes * 2 <= opts.max_nodes) {
    nodes *= 2;
    CMatrix current = integrate(canon, k, cutoff, nodes);
    delta = (current - previous).cwiseAbs().maxCoeff();
    previous = std::move(current);
    if (delta <= opts.tol) {
      ToeplitzMatrix out;
      out.k = k;
      out.entries = std::move(previous);
      out.label = "oracle";
      out.shift_set = nonzero_shifts(out.entries, 1e-8);
      return out;
    }
  }
  throw Error(ErrorKind::QuadratureNotConverged,
              "toeplitz_quadrature_oracle: refinement delta " + std::to_string(delta));
}

}  // namespace btq
