#pragma once

#include <array>

#include "gme/product_opt.hpp"
#include "gme/state.hpp"

namespace gme {

/// Three local Bloch directions; b_j = (theta_j, phi_j) fixes the local
/// "excited" direction |1'_j>.
struct WBasisParam {
  std::array<double, 3> theta{};
  std::array<double, 3> phi{};
};

/// E(psi, S_W) for three qubits.
///
/// Every state in the closure of the W set is, in some product basis, supported
/// on the span of {|000>, |100>, |010>, |001>}. The measure is therefore the
/// minimum over three Bloch directions of the weight psi carries on the
/// orthogonal "two or more excitations" span. Given two parties' directions the
/// optimal third is the top eigenvector of a 2x2 positive matrix, so the search
/// alternates exact per-party updates from multiple starts.
/// The witness is the normalized projection of psi onto the optimal
/// at-most-one-excitation span; its three-tangle vanishes.
MeasureResult e_w(const PureState& s, const OptConfig& cfg);

/// E(psi, S_GHZ) is identically zero: the GHZ set is dense in the state space.
double e_ghz_set(const PureState& s);

/// Parameters of the sequence phi(eps) whose limit is a W-class state.
struct GhzSequenceParam {
  double epsilon = 0.0;
  std::array<Vector, 3> alpha;
  std::array<Vector, 3> beta;
};

/// phi(eps) = (|g1 g2 g3> - |a1 a2 a3>) / eps with |g_j> = |a_j> + eps |b_j>,
/// normalized. Generic parameters give a GHZ-class (nonzero-tangle) state.
PureState ghz_eps_state(const GhzSequenceParam& p);

}  // namespace gme
