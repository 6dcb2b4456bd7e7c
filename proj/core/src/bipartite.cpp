#include "gme/bipartite.hpp"

#include <algorithm>
#include <cmath>

namespace gme {

std::vector<int> cut_complement(const Cut& cut, int n_parties) {
  std::vector<int> left = cut.left;
  std::sort(left.begin(), left.end());
  std::vector<int> right;
  for (int j = 0; j < n_parties; ++j) {
    if (!std::binary_search(left.begin(), left.end(), j)) right.push_back(j);
  }
  return right;
}

void validate_cut(const Cut& cut, int n_parties) {
  if (cut.left.empty()) throw ShapeError("cut: left side empty");
  std::vector<int> l = cut.left;
  std::sort(l.begin(), l.end());
  if (std::adjacent_find(l.begin(), l.end()) != l.end()) {
    throw ShapeError("cut: duplicate party");
  }
  if (l.front() < 0 || l.back() >= n_parties) {
    throw ShapeError("cut: party index out of range");
  }
  if (static_cast<int>(l.size()) == n_parties) {
    throw ShapeError("cut: left side must be a proper subset");
  }
}

SchmidtDecomposition schmidt(const PureState& s, const Cut& cut) {
  validate_cut(cut, s.n_parties());
  SvdResult d = svd(to_matrix(s, cut.left));
  SchmidtDecomposition sd;
  sd.lambdas = d.s.cwiseProduct(d.s);
  sd.left_basis = d.u;
  sd.right_basis = d.v;
  return sd;
}

int schmidt_rank(const SchmidtDecomposition& sd, double tol) {
  int r = 0;
  for (int i = 0; i < sd.lambdas.size(); ++i) {
    if (sd.lambdas[i] > tol) ++r;
  }
  return r;
}

double e_rank_k(const PureState& s, const Cut& cut, int k) {
  if (k < 1) throw DomainError("e_rank_k: k must be >= 1");
  SchmidtDecomposition sd = schmidt(s, cut);
  double sum = 0;
  for (int i = 0; i < std::min<long>(k, sd.lambdas.size()); ++i) {
    sum += sd.lambdas[i];
  }
  return std::clamp(1.0 - sum, 0.0, 1.0);
}

PureState closest_rank_k(const PureState& s, const Cut& cut, int k) {
  if (k < 1) throw DomainError("closest_rank_k: k must be >= 1");
  SchmidtDecomposition sd = schmidt(s, cut);
  const int kk = static_cast<int>(std::min<long>(k, sd.lambdas.size()));
  double sum = 0;
  for (int i = 0; i < kk; ++i) sum += sd.lambdas[i];
  if (sum <= 0) throw DomainError("closest_rank_k: degenerate state");
  // Ties lambda_k = lambda_{k+1} resolve to the SVD's order, which keeps the
  // lowest original Schmidt index first.
  Matrix m = Matrix::Zero(sd.left_basis.rows(), sd.right_basis.rows());
  for (int i = 0; i < kk; ++i) {
    m += std::sqrt(sd.lambdas[i]) * sd.left_basis.col(i) *
         sd.right_basis.col(i).adjoint();
  }
  m /= std::sqrt(sum);
  return from_matrix(m, s.dims, cut.left);
}

double d_from_e(double e) {
  if (e < 0.0 || e > 1.0) throw DomainError("d_from_e: E outside [0,1]");
  return std::sqrt(2.0 * (1.0 - std::sqrt(1.0 - e)));
}

double e_from_d(double d) {
  if (d < 0.0 || d > std::sqrt(2.0) + 1e-15) {
    throw DomainError("e_from_d: d outside [0,sqrt(2)]");
  }
  double t = 1.0 - d * d / 2.0;
  return 1.0 - t * t;
}

}  // namespace gme
