#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gme/state.hpp"

namespace gme {

struct OptConfig {
  int n_starts = 32;
  int max_iters = 500;
  double conv_tol = 1e-12;  // change in squared overlap per sweep
  std::uint64_t seed = 1;
};

struct MeasureResult {
  double e_value = 0.0;
  double d_value = 0.0;
  PureState witness;        // the optimizing state in the target set
  int starts_agreeing = 0;  // starts within 1e-9 of the best value
  int iterations = 0;       // sweeps used by the best start
  bool converged = true;
};

/// E(psi, S_product) by multi-start alternating optimization over product
/// states. Each sweep replaces party j's factor by the normalized contraction
/// of psi against all other factors, so the squared overlap never decreases.
/// The reported value is an upper bound on the true measure.
MeasureResult nearest_product(const PureState& s, const OptConfig& cfg);

/// One alternating pass over all parties. Returns the updated factors and the
/// squared overlap afterwards. A factor whose contraction vanishes is
/// restarted at random from `rng`.
std::pair<std::vector<Vector>, double> sweep_once(const PureState& s,
                                                  std::vector<Vector> factors,
                                                  RandomSource& rng);

}  // namespace gme
