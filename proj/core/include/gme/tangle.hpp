#pragma once

#include "gme/state.hpp"

namespace gme {

/// Three-tangle of a normalized three-qubit state.
///
/// Computed as tau = 4 |d1 - 2 d2 + 4 d3| where, writing a_ijk for the
/// amplitudes,
///   d1 = a000^2 a111^2 + a001^2 a110^2 + a010^2 a101^2 + a100^2 a011^2
///   d2 = a000 a111 a011 a100 + a000 a111 a101 a010 + a000 a111 a110 a001
///      + a011 a100 a101 a010 + a011 a100 a110 a001 + a101 a010 a110 a001
///   d3 = a000 a110 a101 a011 + a111 a001 a010 a100
/// (the modulus of Cayley's 2x2x2 hyperdeterminant, scaled to [0,1]).
double three_tangle(const PureState& s);

}  // namespace gme
