#include "btq/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

#include "btq/error.hpp"
#include "scaled.hpp"

namespace btq {

namespace {

using detail::FactorialTable;
using detail::Scaled;

struct ScaledIntegral {
  Scaled coefficient{0.0, 0};
  int zpower = 0;
  bool nonzero = false;
};

void check_integral_args(int alpha, int beta, int gamma, int delta) {
  if (alpha < 0 || beta < 0 || gamma < 0 || delta < 0) {
    throw Error(ErrorKind::InvalidArgument, "closed_form_integral: negative exponent");
  }
  if (static_cast<long>(alpha) + beta + gamma >= 2L * (delta - 1)) {
    throw Error(ErrorKind::DivergentIntegral,
                "closed_form_integral: alpha+beta+gamma must be < 2(delta-1)");
  }
}

// Same value as closed_form_integral, kept in scaled form; `table` must cover
// max(gamma, delta - 1).
ScaledIntegral closed_form_scaled(int alpha, int beta, int gamma, int delta,
                                  const FactorialTable& table) {
  check_integral_args(alpha, beta, gamma, delta);
  if (alpha < beta || alpha > beta + gamma) return {};
  const int p = alpha - beta;
  Scaled value = Scaled::from(2.0 * std::numbers::pi) * table.binomial(gamma, p) *
                 table.factorial(alpha) * table.factorial(delta - alpha - 2) /
                 table.factorial(delta - 1);
  return {value, p, true};
}

}  // namespace

SymbolExpr SymbolExpr::canonical() const {
  std::map<std::tuple<int, int, int>, cplx> merged;
  for (const auto& t : terms) merged[{t.m, t.a, t.b}] += t.coeff;
  SymbolExpr out;
  for (const auto& [key, c] : merged) {
    if (c == cplx{0.0, 0.0}) continue;
    const auto& [m, a, b] = key;
    out.terms.push_back({c, a, b, m});
  }
  return out;
}

int SymbolExpr::max_pole_order() const {
  int m = 0;
  for (const auto& t : terms) m = std::max(m, t.m);
  return m;
}

SymbolExpr SymbolExpr::conjugate() const {
  SymbolExpr out;
  out.terms.reserve(terms.size());
  for (const auto& t : terms) out.terms.push_back({std::conj(t.coeff), t.b, t.a, t.m});
  return out;
}

bool SymbolExpr::is_real() const { return canonical() == conjugate().canonical(); }

cplx SymbolExpr::evaluate(cplx z, cplx wbar) const {
  cplx sum{0.0, 0.0};
  const cplx q = 1.0 + z * wbar;
  for (const auto& t : terms) {
    sum += t.coeff * std::pow(z, t.a) * std::pow(wbar, t.b) / std::pow(q, t.m);
  }
  return sum;
}

SymbolExpr operator+(const SymbolExpr& f, const SymbolExpr& g) {
  SymbolExpr out = f;
  out.terms.insert(out.terms.end(), g.terms.begin(), g.terms.end());
  return out.canonical();
}

SymbolExpr operator*(cplx scale, const SymbolExpr& f) {
  SymbolExpr out = f;
  for (auto& t : out.terms) t.coeff *= scale;
  return out.canonical();
}

std::string_view to_string(SymbolName name) noexcept {
  switch (name) {
    case SymbolName::X3: return "x3";
    case SymbolName::X1Sq: return "x1sq";
    case SymbolName::Ladder: return "ladder";
    case SymbolName::One: return "one";
  }
  return "?";
}

SymbolName parse_symbol_name(std::string_view text) {
  for (auto n : {SymbolName::X3, SymbolName::X1Sq, SymbolName::Ladder, SymbolName::One}) {
    if (text == to_string(n)) return n;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown symbol '" + std::string(text) + "'");
}

SymbolExpr build_symbol(SymbolName name) {
  switch (name) {
    case SymbolName::X3:
      return SymbolExpr{{{1.0, 1, 1, 1}, {-1.0, 0, 0, 1}}};
    case SymbolName::X1Sq:
      return SymbolExpr{{{1.0, 2, 0, 2}, {2.0, 1, 1, 2}, {1.0, 0, 2, 2}}};
    case SymbolName::Ladder:
      return SymbolExpr{{{2.0, 1, 0, 1}}};
    case SymbolName::One:
      return SymbolExpr{{{1.0, 0, 0, 0}}};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown symbol");
}

MonomialIntegral closed_form_integral(int alpha, int beta, int gamma, int delta) {
  check_integral_args(alpha, beta, gamma, delta);
  const FactorialTable table(std::max(gamma, delta - 1));
  const auto r = closed_form_scaled(alpha, beta, gamma, delta, table);
  if (!r.nonzero) return {0.0, 0};
  return {r.coefficient.value(), r.zpower};
}

std::set<int> nonzero_shifts(const CMatrix& m, double threshold) {
  std::set<int> shifts;
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    for (Eigen::Index row = 0; row < m.rows(); ++row) {
      if (std::abs(m(row, col)) > threshold) shifts.insert(static_cast<int>(row - col));
    }
  }
  return shifts;
}

ToeplitzMatrix toeplitz_matrix(const SymbolExpr& expr, int k, std::string label) {
  if (k < 1) throw Error(ErrorKind::DegreeTooSmall, "toeplitz_matrix: k must be >= 1");
  const SymbolExpr canon = expr.canonical();
  if (k < canon.max_pole_order()) {
    throw Error(ErrorKind::DegreeTooSmall,
                "toeplitz_matrix: k=" + std::to_string(k) + " is below the pole order " +
                    std::to_string(canon.max_pole_order()));
  }

  const FactorialTable table(k + 1);
  const int delta = k + 2;
  const Scaled prefactor = Scaled::from((k + 1) / (2.0 * std::numbers::pi));

  ToeplitzMatrix out;
  out.k = k;
  out.label = std::move(label);
  out.entries = CMatrix::Zero(k + 1, k + 1);

  for (const auto& term : canon.terms) {
    const int gamma = k - term.m;
    for (int col = 0; col <= k; ++col) {
      const auto integral = closed_form_scaled(col, term.b, gamma, delta, table);
      if (!integral.nonzero) continue;
      const int row = term.a + integral.zpower;
      if (row < 0 || row > k) continue;
      // z^col = e_col / N_col and z^row = e_row / N_row.
      const Scaled basis_ratio = sqrt(table.binomial(k, col) / table.binomial(k, row));
      const double magnitude = (prefactor * integral.coefficient * basis_ratio).value();
      out.entries(row, col) += term.coeff * magnitude;
    }
  }
  out.shift_set = nonzero_shifts(out.entries);
  return out;
}

std::string_view to_string(OperatorFamily family) noexcept {
  switch (family) {
    case OperatorFamily::T: return "T";
    case OperatorFamily::S: return "S";
    case OperatorFamily::Ladder: return "ladder";
  }
  return "?";
}

OperatorFamily parse_operator_family(std::string_view text) {
  for (auto f : {OperatorFamily::T, OperatorFamily::S, OperatorFamily::Ladder}) {
    if (text == to_string(f)) return f;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown operator family '" + std::string(text) + "'");
}

ToeplitzMatrix operator_matrix(OperatorFamily family, int k, double eps) {
  if (!std::isfinite(eps)) throw Error(ErrorKind::InvalidArgument, "eps must be finite");
  const cplx ieps{0.0, eps};
  const auto x3 = build_symbol(SymbolName::X3);
  const auto x1sq = build_symbol(SymbolName::X1Sq);

  ToeplitzMatrix out;
  switch (family) {
    case OperatorFamily::T: {
      if (k < 2) throw Error(ErrorKind::DegreeTooSmall, "family T needs k >= 2");
      out.k = k;
      out.entries = toeplitz_matrix(x3, k).entries + ieps * toeplitz_matrix(x1sq, k).entries;
      break;
    }
    case OperatorFamily::S: {
      if (k < 3) throw Error(ErrorKind::DegreeTooSmall, "family S needs k >= 3");
      const double kd = k;
      out.k = k;
      out.entries = (1.0 - 1.0 / kd) * toeplitz_matrix(x3, k - 1).entries +
                    ieps * (1.0 - 3.0 / kd) * toeplitz_matrix(x1sq, k - 1).entries;
      out.entries.diagonal().array() += ieps / kd;
      break;
    }
    case OperatorFamily::Ladder: {
      if (k < 2) throw Error(ErrorKind::DegreeTooSmall, "family ladder needs k >= 2");
      out = toeplitz_matrix(build_symbol(SymbolName::Ladder), k);
      break;
    }
  }
  out.label = std::string(to_string(family));
  if (family != OperatorFamily::Ladder) out.label += "(eps=" + std::to_string(eps) + ")";
  out.shift_set = nonzero_shifts(out.entries);
  return out;
}

}  // namespace btq
