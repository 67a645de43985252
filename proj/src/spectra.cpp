#include "btq/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "btq/error.hpp"

namespace btq {

std::vector<cplx> eigenvalues(const CMatrix& mat) {
  if (mat.rows() != mat.cols()) {
    throw Error(ErrorKind::InvalidArgument, "eigenvalues: matrix must be square");
  }
  if (!mat.allFinite()) {
    throw Error(ErrorKind::InvalidArgument, "eigenvalues: matrix has non-finite entries");
  }
  std::vector<cplx> out;
  if (mat.rows() == 0) return out;
  Eigen::ComplexEigenSolver<CMatrix> solver(mat, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NumericalFailure, "eigenvalues: QR iteration did not converge");
  }
  const auto& ev = solver.eigenvalues();
  out.assign(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Spectrum eigenvalues(const ToeplitzMatrix& mat) {
  return Spectrum{eigenvalues(mat.entries), mat.k, mat.label};
}

ParityBlocks parity_blocks(const ToeplitzMatrix& mat) {
  for (int d : mat.shift_set) {
    if (d % 2 != 0) {
      throw Error(ErrorKind::NotParityPreserving,
                  "parity_blocks: shift " + std::to_string(d) + " couples even and odd indices");
    }
  }
  const Eigen::Index n = mat.size();
  const Eigen::Index n_even = (n + 1) / 2;
  const Eigen::Index n_odd = n / 2;
  ParityBlocks out{CMatrix(n_even, n_even), CMatrix(n_odd, n_odd)};
  for (Eigen::Index i = 0; i < n_even; ++i) {
    for (Eigen::Index j = 0; j < n_even; ++j) out.even(i, j) = mat.entries(2 * i, 2 * j);
  }
  for (Eigen::Index i = 0; i < n_odd; ++i) {
    for (Eigen::Index j = 0; j < n_odd; ++j) out.odd(i, j) = mat.entries(2 * i + 1, 2 * j + 1);
  }
  return out;
}

Spectrum eigenvalues_by_parity(const ToeplitzMatrix& mat) {
  const bool even_only =
      std::all_of(mat.shift_set.begin(), mat.shift_set.end(), [](int d) { return d % 2 == 0; });
  if (!even_only) return eigenvalues(mat);
  const auto blocks = parity_blocks(mat);
  auto values = eigenvalues(blocks.even);
  const auto odd = eigenvalues(blocks.odd);
  values.insert(values.end(), odd.begin(), odd.end());
  std::sort(values.begin(), values.end(), canonical_less);
  return Spectrum{std::move(values), mat.k, mat.label};
}

double resolvent_norm(const CMatrix& mat, cplx lambda) {
  if (mat.rows() != mat.cols()) {
    throw Error(ErrorKind::InvalidArgument, "resolvent_norm: matrix must be square");
  }
  CMatrix shifted = mat;
  shifted.diagonal().array() -= lambda;
  Eigen::JacobiSVD<CMatrix> svd(shifted);
  const auto& sv = svd.singularValues();
  const double sigma_min = sv.size() == 0 ? 0.0 : sv(sv.size() - 1);
  if (!(sigma_min > std::numeric_limits<double>::min())) {
    return std::numeric_limits<double>::infinity();
  }
  return 1.0 / sigma_min;
}

double power_norm(const CMatrix& mat, int p) {
  if (mat.rows() != mat.cols()) {
    throw Error(ErrorKind::InvalidArgument, "power_norm: matrix must be square");
  }
  if (p < 1 || p > 4 * std::max<Eigen::Index>(mat.rows(), 1)) {
    throw Error(ErrorKind::InvalidArgument, "power_norm: p must be in [1, 4*size]");
  }
  CMatrix acc = mat;
  for (int i = 1; i < p; ++i) acc = acc * mat;
  return acc.norm();
}

}  // namespace btq
