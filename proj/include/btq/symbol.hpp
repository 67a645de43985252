#pragma once

// Symbols on the sphere, written in the stereographic chart as finite sums of
// rational monomials in the holomorphically extended variables (z, w̄), and
// their covariant Toeplitz matrices in the orthonormal monomial basis
//
//   e_l = sqrt((k+1) binom(k,l) / 2π) z^l,   0 <= l <= k.

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "btq/types.hpp"

namespace btq {

/// coeff * z^a * w̄^b * (1 + z w̄)^(-m)
struct SymbolTerm {
  cplx coeff{1.0, 0.0};
  int a = 0;
  int b = 0;
  int m = 0;

  friend bool operator==(const SymbolTerm&, const SymbolTerm&) = default;
};

struct SymbolExpr {
  std::vector<SymbolTerm> terms;

  /// Merges equal (a,b,m) triples, drops zero coefficients and sorts by
  /// (m, a, b).
  SymbolExpr canonical() const;

  /// Largest denominator power; 0 for the zero symbol.
  int max_pole_order() const;

  /// The conjugate symbol: (coeff, a, b) -> (conj(coeff), b, a).
  SymbolExpr conjugate() const;

  /// Real-valued on the sphere iff invariant under conjugate().
  bool is_real() const;

  /// Evaluates the extension at a point (z, w̄); restrict to w̄ = conj(z) for the
  /// symbol itself.
  cplx evaluate(cplx z, cplx wbar) const;

  friend SymbolExpr operator+(const SymbolExpr& f, const SymbolExpr& g);
  friend SymbolExpr operator*(cplx scale, const SymbolExpr& f);
  friend bool operator==(const SymbolExpr&, const SymbolExpr&) = default;
};

enum class SymbolName { X3, X1Sq, Ladder, One };

std::string_view to_string(SymbolName name) noexcept;
SymbolName parse_symbol_name(std::string_view text);

/// x3 = (z w̄ - 1)/(1 + z w̄), x1^2 = (z + w̄)^2/(1 + z w̄)^2, ladder = 2z/(1 + z w̄),
/// one = 1.
SymbolExpr build_symbol(SymbolName name);

struct MonomialIntegral {
  double coefficient = 0.0;
  int zpower = 0;

  friend bool operator==(const MonomialIntegral&, const MonomialIntegral&) = default;
};

/// ∫_C w^α w̄^β (1 + z w̄)^γ (1 + |w|²)^(-δ) |dw ∧ dw̄| = coefficient * z^zpower.
///
/// Nonzero only when β <= α <= β + γ, where it equals
/// 2π binom(γ, α-β) α! (δ-α-2)! / (δ-1)!. Requires α + β + γ < 2(δ - 1);
/// throws DivergentIntegral otherwise and InvalidArgument on negative input.
MonomialIntegral closed_form_integral(int alpha, int beta, int gamma, int delta);

struct ToeplitzMatrix {
  int k = 0;
  CMatrix entries;
  std::string label;
  /// Every d with some nonzero entries(l + d, l).
  std::set<int> shift_set;

  Eigen::Index size() const { return entries.rows(); }
};

/// Shifts d such that some entry (l + d, l) is nonzero, or exceeds `threshold`
/// in modulus.
std::set<int> nonzero_shifts(const CMatrix& m, double threshold = 0.0);

/// Covariant Toeplitz quantization of `expr` at degree k, from the closed-form
/// Bergman integrals. Throws DegreeTooSmall when k < 1 or k < m for a term.
ToeplitzMatrix toeplitz_matrix(const SymbolExpr& expr, int k, std::string label = {});

struct OracleOptions {
  /// Upper limit of the radial variable t = |w|²; <= 0 picks one whose
  /// analytic tail bound is below 1e-12.
  double radial_cutoff = 0.0;
  /// Initial Gauss-Legendre nodes per radial panel; <= 0 means 8.
  int nodes = 0;
  double tol = 1e-8;
  int max_nodes = 256;
};

/// Builds the same matrix as toeplitz_matrix by direct numerical quadrature of
/// the Bergman integral (periodic trapezoid in both angles, Gauss-Legendre on
/// geometric panels in t = |w|²). Intended as a test oracle; requires k <= 16.
ToeplitzMatrix toeplitz_quadrature_oracle(const SymbolExpr& expr, int k,
                                          const OracleOptions& opts = {});

enum class OperatorFamily { T, S, Ladder };

std::string_view to_string(OperatorFamily family) noexcept;
OperatorFamily parse_operator_family(std::string_view text);

/// T(k,ε) = Tcov(x3) + iε Tcov(x1²) of size k+1;
/// S(k,ε) = (1-1/k) Tcov_{k-1}(x3) + iε(1-3/k) Tcov_{k-1}(x1²) + (iε/k) Id of size k,
///          the operator with vanishing normalised subprincipal symbol;
/// Ladder = Tcov(2z/(1+z w̄)), nilpotent.
ToeplitzMatrix operator_matrix(OperatorFamily family, int k, double eps);

}  // namespace btq
