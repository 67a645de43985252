#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

namespace btq {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Canonical eigenvalue order: real part, then imaginary part.
inline bool canonical_less(const cplx& a, const cplx& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace btq
