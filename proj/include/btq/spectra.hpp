#pragma once

#include <string>
#include <utility>
#include <vector>

#include "btq/symbol.hpp"
#include "btq/types.hpp"

namespace btq {

struct Spectrum {
  std::vector<cplx> eigenvalues;  // canonical order
  int k = 0;
  std::string label;
};

/// All eigenvalues of a dense complex matrix (complex Schur form), sorted
/// canonically. Throws NumericalFailure if the QR iteration does not converge.
Spectrum eigenvalues(const ToeplitzMatrix& mat);
std::vector<cplx> eigenvalues(const CMatrix& mat);

struct ParityBlocks {
  CMatrix even;  // rows/columns l = 0, 2, 4, ...
  CMatrix odd;   // rows/columns l = 1, 3, 5, ...
};

/// Restriction to the invariant even-l and odd-l subspaces. Throws
/// NotParityPreserving if the matrix couples indices of different parity.
ParityBlocks parity_blocks(const ToeplitzMatrix& mat);

/// Eigenvalues through parity_blocks when the matrix allows it, otherwise from
/// the full matrix.
Spectrum eigenvalues_by_parity(const ToeplitzMatrix& mat);

/// 1 / σ_min(mat - λ Id); +infinity when σ_min is zero or underflows.
double resolvent_norm(const CMatrix& mat, cplx lambda);
inline double resolvent_norm(const ToeplitzMatrix& mat, cplx lambda) {
  return resolvent_norm(mat.entries, lambda);
}

/// Frobenius norm of mat^p by repeated multiplication; 1 <= p <= 4 * size.
double power_norm(const CMatrix& mat, int p);
inline double power_norm(const ToeplitzMatrix& mat, int p) { return power_norm(mat.entries, p); }

}  // namespace btq
