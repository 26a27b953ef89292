#include "linalg.hpp"

#include <stdexcept>

namespace sqz::linalg {

Eigen::MatrixXcd expm_antihermitian(const Eigen::MatrixXcd& k) {
  if (k.rows() != k.cols()) throw std::invalid_argument("square matrix required");
  const Eigen::MatrixXcd h = Complex(0.0, 1.0) * k;
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + h.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("generator is not anti-Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");
  const Eigen::VectorXd lam = es.eigenvalues();
  Eigen::VectorXcd phase(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i)
    phase(i) = std::exp(Complex(0.0, -lam(i)));
  return es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
}

Eigen::MatrixXd expm_antisymmetric_tridiagonal(const Eigen::VectorXd& offdiag) {
  const Eigen::Index n = offdiag.size() + 1;
  // K = D (-i T) D^{-1} with D = diag(i^j) and T real symmetric tridiagonal
  // sharing K's off-diagonal, so exp(K) = D V exp(-i Lambda) V^T D^{-1}.
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j + 1 < n; ++j) {
    t(j + 1, j) = offdiag(j);
    t(j, j + 1) = offdiag(j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");
  const Eigen::MatrixXd& v = es.eigenvectors();
  const Eigen::VectorXd& lam = es.eigenvalues();
  const Eigen::MatrixXd cmat =
      v * lam.array().cos().matrix().asDiagonal() * v.transpose();
  const Eigen::MatrixXd smat =
      v * lam.array().sin().matrix().asDiagonal() * v.transpose();
  Eigen::MatrixXd out(n, n);
  // exp(K)[p][q] = i^{p-q} (cmat - i smat)[p][q]; the result is real, so only
  // the matching real/imaginary component of the phase survives.
  for (Eigen::Index p = 0; p < n; ++p)
    for (Eigen::Index q = 0; q < n; ++q) {
      switch (((p - q) % 4 + 4) % 4) {
        case 0: out(p, q) = cmat(p, q); break;
        case 1: out(p, q) = smat(p, q); break;
        case 2: out(p, q) = -cmat(p, q); break;
        default: out(p, q) = -smat(p, q); break;
      }
    }
  return out;
}

}  // namespace sqz::linalg
