#ifndef SQUEEZE_LINALG_HPP
#define SQUEEZE_LINALG_HPP

#include <Eigen/Dense>
#include <complex>

namespace sqz::linalg {

using Complex = std::complex<double>;

// Kronecker product, row-major index convention: (i*cols(b)+k, j*cols(b)+l).
template <typename DA, typename DB>
Eigen::MatrixXcd kron(const Eigen::MatrixBase<DA>& a,
                      const Eigen::MatrixBase<DB>& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          Complex(a(i, j)) * b.template cast<Complex>();
  return out;
}

// exp(K) for anti-Hermitian K, via the Hermitian eigendecomposition of iK.
// The result is unitary to round-off.
Eigen::MatrixXcd expm_antihermitian(const Eigen::MatrixXcd& k);

// exp(K) for the real antisymmetric tridiagonal K with K(j+1, j) = offdiag[j].
// Reduced to a real symmetric tridiagonal eigenproblem by the diagonal
// similarity diag(i^j); the exponential itself is real orthogonal.
Eigen::MatrixXd expm_antisymmetric_tridiagonal(const Eigen::VectorXd& offdiag);

}  // namespace sqz::linalg

#endif
