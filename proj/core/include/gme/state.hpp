#pragma once

#include <vector>

#include "gme/linalg.hpp"

namespace gme {

/// Dense multipartite pure state. Amplitudes are stored row-major over the
/// tensor index with party 0 slowest, i.e. for dims (d0,...,dp-1) the
/// amplitude of |i0 i1 ... ip-1> sits at i0*d1*...*dp-1 + ... + ip-1.
struct PureState {
  std::vector<int> dims;
  Vector amps;

  PureState() = default;
  PureState(std::vector<int> dims_, Vector amps_);

  int n_parties() const { return static_cast<int>(dims.size()); }
  long total_dim() const;
  double norm() const { return amps.norm(); }
};

struct MeasurementOutcome {
  double probability = 0.0;
  PureState state;
};

/// Unit-norm copy. Throws DomainError when the norm is below 1e-14.
PureState normalize(const PureState& s);

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const PureState& a, const PureState& b);

/// Contract a d x d operator into one party's axis; result is unnormalized.
PureState apply_local(const PureState& s, int party, const Matrix& m);

/// Reduced density matrix of the given (nonempty, proper) party subset.
/// Row/column ordering follows ascending party index.
Matrix reduced_density(const PureState& s, const std::vector<int>& parties);

/// Tensor product of local vectors; factors are normalized by construction.
PureState product_state(const std::vector<Vector>& factors);

/// Reshape amplitudes into a matrix: rows enumerate the multi-index of
/// `left` parties (ascending), columns the complementary parties (ascending).
Matrix to_matrix(const PureState& s, const std::vector<int>& left);

/// Inverse of to_matrix for the same dims/left pair.
PureState from_matrix(const Matrix& m, const std::vector<int>& dims,
                      const std::vector<int>& left);

/// Haar-uniform random state (normalized complex Gaussian amplitudes).
PureState random_state(const std::vector<int>& dims, RandomSource& rng);

/// Row-major strides for the given local dimensions (party 0 slowest).
std::vector<long> strides(const std::vector<int>& dims);

}  // namespace gme
