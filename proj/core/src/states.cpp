#include "gme/states.hpp"

#include <cmath>

namespace gme {

PureState ghz_state() {
  Vector amps = Vector::Zero(8);
  amps[0] = amps[7] = 1.0 / std::sqrt(2.0);
  return {{2, 2, 2}, std::move(amps)};
}

PureState w_state() {
  Vector amps = Vector::Zero(8);
  amps[4] = amps[2] = amps[1] = 1.0 / std::sqrt(3.0);  // |100>, |010>, |001>
  return {{2, 2, 2}, std::move(amps)};
}

PureState phi_z_state(Complex z, double c1, double c2, double c3) {
  for (double c : {c1, c2, c3}) {
    if (c < 0.0 || c >= 1.0) {
      throw DomainError("phi_z_state: c_i must lie in [0,1)");
    }
  }
  auto beta = [](double c) {
    Vector b(2);
    b[0] = c;
    b[1] = std::sqrt(1.0 - c * c);
    return b;
  };
  Vector b1 = beta(c1), b2 = beta(c2), b3 = beta(c3);
  Vector amps = Vector::Zero(8);
  amps[0] = 1.0;
  for (int g = 0; g < 8; ++g) {
    amps[g] += z * b1[(g >> 2) & 1] * b2[(g >> 1) & 1] * b3[g & 1];
  }
  return normalize(PureState{{2, 2, 2}, std::move(amps)});
}

PureState table1_psi() {
  Vector amps = Vector::Zero(8);
  amps[0] = 3.0 / std::sqrt(10.0);
  amps[7] = 1.0 / std::sqrt(10.0);
  return {{2, 2, 2}, std::move(amps)};
}

PureState table1_phi() {
  Vector b(2);
  b[0] = 1.0 / std::sqrt(5.0);
  b[1] = 2.0 / std::sqrt(5.0);
  Vector amps = Vector::Zero(8);
  amps[0] = 1.0;
  for (int g = 0; g < 8; ++g) {
    amps[g] -= b[(g >> 2) & 1] * b[(g >> 1) & 1] * b[g & 1];
  }
  return normalize(PureState{{2, 2, 2}, std::move(amps)});
}

}  // namespace gme
