#pragma once

#include <array>
#include <string>
#include <vector>

#include "gme/bipartite.hpp"
#include "gme/locc.hpp"
#include "gme/product_opt.hpp"

namespace gme {

/// The six SLOCC classes of three qubits.
enum class SloccClass { ABC, A_BC, B_AC, AB_C, W, GHZ };

const char* to_string(SloccClass c);

struct SloccClassification {
  SloccClass label = SloccClass::ABC;
  std::array<int, 3> local_ranks{};
  double tau = 0.0;
  bool borderline = false;  // some reduced eigenvalue or tau within 10x of tol
};

/// Decision table: local reduced ranks (1,1,1) -> A-B-C; (1,2,2) -> A-BC;
/// (2,1,2) -> B-AC; (2,2,1) -> AB-C; (2,2,2) with tau > tau_tol -> GHZ,
/// otherwise W. Borderline states fall to the lower-rank class and are flagged.
SloccClassification slocc_class(const PureState& s, double rank_tol = 1e-8,
                                double tau_tol = 1e-8);

/// Identifier of an SLOCC-invariant set; selects which measure is computed.
struct SISetId {
  enum class Kind { Product, CutSet, RankK, WClosure, GhzClosure, Union };

  Kind kind = Kind::Product;
  Cut cut;              // CutSet / RankK
  int k = 1;            // RankK
  std::vector<SISetId> members;  // Union; nonempty, duplicate-free, non-union

  std::string name() const;

  /// Grammar: product | w | ghz | cut:<left parties, e.g. "0" or "01">
  /// | rank:<left>:<k> | union:<spec>,<spec>,...  (union members not unions).
  static SISetId parse(const std::string& spec, int n_parties);
};

/// Dispatch E(psi, S) over the set kind; unions take the member minimum and
/// inherit the minimizing member's witness.
MeasureResult measure(const PureState& s, const SISetId& set, const OptConfig& cfg);

/// The measure as a plain callable (and its 4x-starts retry variant),
/// for fuzzing.
MeasureFn make_measure_fn(const SISetId& set, const OptConfig& cfg);

struct NestingReport {
  double e_product = 0.0;
  std::array<double, 3> e_cuts{};  // left = {0}, {1}, {2}... see cpp
  double e_w_value = 0.0;
  double slack = 5e-4;
  bool holds = false;
};

/// Checks the inclusion-chain inequalities E(psi,S_product) >= E(psi,S_cut)
/// and E(psi,S_product) >= E(psi,S_W) within optimizer slack.
NestingReport nesting_check(const PureState& s, const OptConfig& cfg);

}  // namespace gme
