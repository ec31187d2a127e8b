#pragma once

// Small dense linear-algebra helpers shared across modules.

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

#include "fgn/rng.hpp"

namespace fgn {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline double spectral_norm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  if (a.rows() == 1 && a.cols() == 1) return std::abs(a(0, 0));
  return a.jacobiSvd().singularValues()(0);
}

// Largest eigenvalue of a Hermitian positive semidefinite matrix.
inline double lambda_max_psd(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("lambda_max_psd: eigensolver failed");
  double l = es.eigenvalues().maxCoeff();
  return l > 0.0 ? l : 0.0;
}

// (A + eps I)^{-1/2} for Hermitian PSD A.
inline CMatrix inverse_sqrt_psd(const CMatrix& a, double eps) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("inverse_sqrt_psd: eigensolver failed");
  Eigen::VectorXd d = es.eigenvalues();
  for (int i = 0; i < d.size(); ++i)
    d(i) = 1.0 / std::sqrt((d(i) > 0.0 ? d(i) : 0.0) + eps);
  return es.eigenvectors() * d.asDiagonal() *
         es.eigenvectors().adjoint();
}

inline CMatrix gaussian_matrix(std::mt19937_64& rng, int rows, int cols) {
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = complex_gaussian(rng);
  return m;
}

inline CVector gaussian_vector(std::mt19937_64& rng, Eigen::Index n) {
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = complex_gaussian(rng);
  return v;
}

}  // namespace fgn
