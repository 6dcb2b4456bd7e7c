#include "gme/locc.hpp"

#include <cmath>

namespace gme {

std::vector<MeasurementOutcome> apply_instrument(const PureState& s, int party,
                                                 const std::vector<Matrix>& ms) {
  if (party < 0 || party >= s.n_parties()) {
    throw ShapeError("apply_instrument: bad party index");
  }
  const int d = s.dims[party];
  if (ms.empty()) throw InvalidInputError("apply_instrument: empty instrument");
  Matrix completeness = Matrix::Zero(d, d);
  for (const auto& m : ms) {
    if (m.rows() != d || m.cols() != d) {
      throw ShapeError("apply_instrument: operator shape mismatch");
    }
    completeness += m.adjoint() * m;
  }
  double dev = (completeness - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (dev > 1e-8) {
    throw InvalidInputError(
        "apply_instrument: completeness violated (deviation " +
        std::to_string(dev) + ")");
  }

  std::vector<MeasurementOutcome> outcomes;
  for (const auto& m : ms) {
    PureState branch = apply_local(s, party, m);
    double p = branch.amps.squaredNorm();
    if (p < 1e-14) continue;
    outcomes.push_back({p, normalize(branch)});
  }
  return outcomes;
}

PureState slocc_apply(const PureState& s, const std::vector<Matrix>& ops) {
  if (static_cast<int>(ops.size()) != s.n_parties()) {
    throw ShapeError("slocc_apply: one operator per party required");
  }
  PureState out = s;
  for (int j = 0; j < s.n_parties(); ++j) {
    out = apply_local(out, j, ops[j]);
  }
  if (out.norm() < 1e-14) {
    throw DomainError("slocc_apply: state annihilated");
  }
  return normalize(out);
}

FuzzReport monotonicity_fuzz(const MeasureFn& measure,
                             const MeasureFn& retry_measure,
                             const std::vector<int>& dims, int trials,
                             RandomSource rng, double tol) {
  FuzzReport report;
  report.trials = trials;
  const int p = static_cast<int>(dims.size());

  for (int t = 0; t < trials; ++t) {
    RandomSource trial_rng = rng.substream(static_cast<std::uint64_t>(t));
    PureState psi = random_state(dims, trial_rng);
    int party = static_cast<int>(trial_rng.next_u64() % p);
    int n_outcomes = 2 + static_cast<int>(trial_rng.next_u64() % 3);
    auto instrument = random_instrument(dims[party], n_outcomes, trial_rng);
    auto outcomes = apply_instrument(psi, party, instrument);

    auto margin_with = [&](const MeasureFn& fn) {
      double lhs = fn(psi);
      double rhs = 0;
      for (const auto& o : outcomes) rhs += o.probability * fn(o.state);
      return lhs - rhs;
    };

    double margin = margin_with(measure);
    if (margin < -tol) {
      report.flagged.push_back(static_cast<std::uint64_t>(t));
      margin = margin_with(retry_measure);
      if (margin < -tol) ++report.violations;
    }
    report.worst_margin = std::min(report.worst_margin, margin);
  }
  return report;
}

}  // namespace gme
