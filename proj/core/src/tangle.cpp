#include "gme/tangle.hpp"

#include <cmath>

namespace gme {

double three_tangle(const PureState& s) {
  if (s.dims != std::vector<int>{2, 2, 2}) {
    throw ShapeError("three_tangle: requires a three-qubit state");
  }
  const Vector& v = s.amps;
  auto a = [&](int i, int j, int k) { return v[4 * i + 2 * j + k]; };

  Complex d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
               a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
               a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
               a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
  Complex d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) +
               a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
               a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
               a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
               a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
               a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
  Complex d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
               a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);

  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

}  // namespace gme
