#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "gme/state.hpp"

namespace gme {

/// Apply a measurement instrument {M_i} to one party.
/// p_i = <psi| M_i^dag M_i (x) 1 ... |psi>, psi_i = (M_i (x) 1 ...) psi / sqrt(p_i).
/// Outcomes with p_i < 1e-14 are omitted. Throws InvalidInputError when the
/// completeness relation sum_i M_i^dag M_i = 1 fails beyond 1e-8.
std::vector<MeasurementOutcome> apply_instrument(const PureState& s, int party,
                                                 const std::vector<Matrix>& ms);

/// Normalized (A_1 (x) ... (x) A_p) psi. Throws DomainError when the result is
/// annihilated (norm < 1e-14).
PureState slocc_apply(const PureState& s, const std::vector<Matrix>& ops);

using MeasureFn = std::function<double(const PureState&)>;

struct FuzzReport {
  int trials = 0;
  int violations = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::vector<std::uint64_t> flagged;  // trial indices that needed a retry
};

/// Fuzz the monotonicity inequality E(psi) >= sum_i p_i E(psi_i) over random
/// states and random single-party instruments with 2-4 outcomes. A trial with
/// margin < -tol is re-evaluated with `retry_measure` (meant to run at 4x
/// starts) before it is counted as a violation; retried trials are recorded in
/// `flagged` either way.
FuzzReport monotonicity_fuzz(const MeasureFn& measure,
                             const MeasureFn& retry_measure,
                             const std::vector<int>& dims, int trials,
                             RandomSource rng, double tol);

}  // namespace gme
