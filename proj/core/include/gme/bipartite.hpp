#pragma once

#include <vector>

#include "gme/state.hpp"

namespace gme {

/// A bipartition of the parties; `left` must be a nonempty proper subset.
struct Cut {
  std::vector<int> left;
};

std::vector<int> cut_complement(const Cut& cut, int n_parties);
void validate_cut(const Cut& cut, int n_parties);

struct SchmidtDecomposition {
  RealVector lambdas;  // descending, sum 1
  Matrix left_basis;   // columns orthonormal
  Matrix right_basis;  // columns orthonormal
};

SchmidtDecomposition schmidt(const PureState& s, const Cut& cut);

/// Number of Schmidt coefficients above tol.
int schmidt_rank(const SchmidtDecomposition& sd, double tol = 1e-8);

/// E(psi, S_k) = 1 - (lambda_1 + ... + lambda_k), lambdas descending.
double e_rank_k(const PureState& s, const Cut& cut, int k);

/// The optimal Schmidt-rank-<=k state: truncated, renormalized decomposition.
PureState closest_rank_k(const PureState& s, const Cut& cut, int k);

/// d = sqrt(2 (1 - sqrt(1 - E))), monotone increasing on [0,1].
double d_from_e(double e);
double e_from_d(double d);

}  // namespace gme
