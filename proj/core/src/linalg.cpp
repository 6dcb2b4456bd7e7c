#include "gme/linalg.hpp"

#include <cmath>

namespace gme {

namespace {

void require_finite(const Matrix& m, const char* who) {
  if (!m.allFinite()) {
    throw InvalidInputError(std::string(who) + ": non-finite entries");
  }
}

}  // namespace

SvdResult svd(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw InvalidInputError("svd: empty matrix");
  }
  require_finite(m, "svd");
  Eigen::JacobiSVD<Matrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

EigResult eig_hermitian(const Matrix& m, double herm_tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InvalidInputError("eig_hermitian: matrix must be square and nonempty");
  }
  require_finite(m, "eig_hermitian");
  double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > herm_tol) {
    throw InvalidInputError("eig_hermitian: matrix not Hermitian (deviation " +
                            std::to_string(dev) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver((m + m.adjoint()) / 2.0);
  const int n = static_cast<int>(m.rows());
  EigResult r;
  r.values.resize(n);
  r.vectors.resize(n, n);
  // Eigen returns ascending order; flip to descending.
  for (int i = 0; i < n; ++i) {
    r.values[i] = solver.eigenvalues()[n - 1 - i];
    r.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return r;
}

PolarResult polar(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw InvalidInputError("polar: matrix must be square");
  }
  SvdResult d = svd(m);
  // u completed through the SVD, valid for rank-deficient input too.
  Matrix u = d.u * d.v.adjoint();
  Matrix p = d.v * d.s.asDiagonal() * d.v.adjoint();
  return {u, p};
}

Matrix sqrt_psd(const Matrix& m) {
  EigResult e = eig_hermitian(m);
  RealVector roots = e.values.cwiseMax(0.0).cwiseSqrt();
  return e.vectors * roots.asDiagonal() * e.vectors.adjoint();
}

Matrix random_ginibre(int rows, int cols, RandomSource& rng) {
  Matrix g(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      g(i, j) = rng.complex_gaussian();
    }
  }
  return g;
}

Matrix random_unitary(int dim, RandomSource& rng) {
  if (dim < 1) throw InvalidInputError("random_unitary: dim must be >= 1");
  Matrix g = random_ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity so the distribution is Haar.
  for (int i = 0; i < dim; ++i) {
    Complex d = r(i, i);
    double a = std::abs(d);
    q.col(i) *= (a > 0) ? d / a : Complex(1, 0);
  }
  return q;
}

std::vector<Matrix> random_instrument(int dim, int n_outcomes, RandomSource& rng) {
  if (dim < 1 || n_outcomes < 1) {
    throw InvalidInputError("random_instrument: dim and n_outcomes must be >= 1");
  }
  // Draw random positive Q_i, conjugate by S^{-1/2} with S = sum Q_i so the
  // effects P_i sum to the identity, then dress with random unitaries.
  std::vector<Matrix> qs;
  Matrix s = Matrix::Zero(dim, dim);
  for (int i = 0; i < n_outcomes; ++i) {
    Matrix g = random_ginibre(dim, dim, rng);
    qs.push_back(g * g.adjoint());
    s += qs.back();
  }
  EigResult es = eig_hermitian(s);
  RealVector inv_roots(dim);
  for (int i = 0; i < dim; ++i) {
    inv_roots[i] = 1.0 / std::sqrt(std::max(es.values[i], 1e-300));
  }
  Matrix s_inv_half = es.vectors * inv_roots.asDiagonal() * es.vectors.adjoint();

  std::vector<Matrix> ms;
  ms.reserve(n_outcomes);
  for (int i = 0; i < n_outcomes; ++i) {
    Matrix p = s_inv_half * qs[i] * s_inv_half;
    Matrix v = random_unitary(dim, rng);
    ms.push_back(v * sqrt_psd((p + p.adjoint()) / 2.0));
  }
  return ms;
}

}  // namespace gme
