#pragma once

#include "gme/state.hpp"

namespace gme {

/// (|000> + |111>) / sqrt(2)
PureState ghz_state();

/// (|100> + |010> + |001>) / sqrt(3)
PureState w_state();

/// Phi(z; c1,c2,c3) = (|000> + z |b1 b2 b3>) / sqrt(N) with
/// |b_i> = c_i |0> + sqrt(1 - c_i^2) |1>, 0 <= c_i < 1.
PureState phi_z_state(Complex z, double c1, double c2, double c3);

/// (3|000> + |111>) / sqrt(10)
PureState table1_psi();

/// (|000> - |bbb>) / sqrt(N), |b> = (|0> + 2|1>) / sqrt(5)
PureState table1_phi();

}  // namespace gme
