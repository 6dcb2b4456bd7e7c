#include "gme/wclass.hpp"

#include <array>
#include <cmath>
#include <iostream>

#include "gme/bipartite.hpp"

namespace gme {

namespace {

using Basis = std::array<Vector, 2>;  // {|0'>, |1'>}

Basis basis_from_angles(double theta, double phi) {
  Vector one(2), zero(2);
  one[0] = std::cos(theta / 2);
  one[1] = std::polar(std::sin(theta / 2), phi);
  zero[0] = -std::polar(std::sin(theta / 2), -phi);
  zero[1] = std::cos(theta / 2);
  return {zero, one};
}

Basis basis_from_zero(const Vector& zero) {
  Vector one(2);
  one[0] = -std::conj(zero[1]);
  one[1] = std::conj(zero[0]);
  return {zero, one};
}

// Coefficients of psi in the product basis |i1' i2' i3'>.
std::array<Complex, 8> primed_coeffs(const PureState& s,
                                     const std::array<Basis, 3>& bases) {
  std::array<Complex, 8> c{};
  for (int idx = 0; idx < 8; ++idx) {
    int i0 = (idx >> 2) & 1, i1 = (idx >> 1) & 1, i2 = idx & 1;
    Complex acc = 0;
    for (int g = 0; g < 8; ++g) {
      int b0 = (g >> 2) & 1, b1 = (g >> 1) & 1, b2 = g & 1;
      acc += std::conj(bases[0][i0][b0] * bases[1][i1][b1] * bases[2][i2][b2]) *
             s.amps[g];
    }
    c[idx] = acc;
  }
  return c;
}

double excitation_weight(const std::array<Complex, 8>& c) {
  double w = 0;
  for (int idx = 0; idx < 8; ++idx) {
    int ones = ((idx >> 2) & 1) + ((idx >> 1) & 1) + (idx & 1);
    if (ones >= 2) w += std::norm(c[idx]);
  }
  return w;
}

// Contraction of psi against the primed vectors of the two parties != j,
// selected by sel (0 or 1 per other party in ascending order).
Vector party_slice(const PureState& s, const std::array<Basis, 3>& bases,
                   int j, int sel_first, int sel_second) {
  std::array<int, 2> others{};
  int n = 0;
  for (int k = 0; k < 3; ++k) {
    if (k != j) others[n++] = k;
  }
  const std::array<int, 2> sel = {sel_first, sel_second};
  Vector v = Vector::Zero(2);
  for (int g = 0; g < 8; ++g) {
    std::array<int, 3> digit = {(g >> 2) & 1, (g >> 1) & 1, g & 1};
    Complex w = s.amps[g];
    for (int t = 0; t < 2; ++t) {
      w *= std::conj(bases[others[t]][sel[t]][digit[others[t]]]);
    }
    v[digit[j]] += w;
  }
  return v;
}

// Exact update of party j's basis: the complement ("at most one excitation")
// weight is const + <0'_j| (u u^+ + w w^+) |0'_j>, maximized by the top
// eigenvector of the 2x2 positive matrix.
void update_party(const PureState& s, std::array<Basis, 3>& bases, int j) {
  Vector u = party_slice(s, bases, j, 1, 0);
  Vector w = party_slice(s, bases, j, 0, 1);
  Matrix m = u * u.adjoint() + w * w.adjoint();
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  bases[j] = basis_from_zero(es.eigenvectors().col(1));
}

}  // namespace

MeasureResult e_w(const PureState& s_in, const OptConfig& cfg) {
  if (s_in.dims != std::vector<int>{2, 2, 2}) {
    throw ShapeError("e_w: requires a three-qubit state");
  }
  if (cfg.n_starts < 1) throw DomainError("e_w: n_starts must be >= 1");
  PureState s = s_in;
  if (std::abs(s.norm() - 1.0) > 1e-6) {
    std::cerr << "gme: e_w: input norm deviates by "
              << std::abs(s.norm() - 1.0) << ", renormalizing\n";
  }
  s = normalize(s);

  // Structured seeds (z, x, y axes on all parties) plus random directions.
  std::vector<std::array<Basis, 3>> seeds;
  {
    Basis z = basis_from_angles(0.0, 0.0);
    Basis x = basis_from_angles(M_PI / 2, 0.0);
    Basis y = basis_from_angles(M_PI / 2, M_PI / 2);
    seeds.push_back({z, z, z});
    seeds.push_back({x, x, x});
    seeds.push_back({y, y, y});
  }
  RandomSource base(cfg.seed);
  for (int start = 0; start < cfg.n_starts; ++start) {
    RandomSource rng = base.substream(start);
    std::array<Basis, 3> b;
    for (int j = 0; j < 3; ++j) {
      double theta = std::acos(1.0 - 2.0 * rng.uniform());
      double phi = 2.0 * M_PI * rng.uniform();
      b[j] = basis_from_angles(theta, phi);
    }
    seeds.push_back(b);
  }

  double best = 2.0;
  std::array<Basis, 3> best_bases = seeds.front();
  int best_iters = 0;
  bool all_converged = true;
  std::vector<double> values;
  values.reserve(seeds.size());

  const double tol = std::max(cfg.conv_tol, 1e-15);
  for (auto& bases : seeds) {
    double prev = excitation_weight(primed_coeffs(s, bases));
    int it = 0;
    bool converged = false;
    for (; it < cfg.max_iters; ++it) {
      for (int j = 0; j < 3; ++j) update_party(s, bases, j);
      double cur = excitation_weight(primed_coeffs(s, bases));
      if (prev - cur < tol) {
        prev = cur;
        converged = true;
        ++it;
        break;
      }
      prev = cur;
    }
    all_converged = all_converged && converged;
    values.push_back(prev);
    if (prev < best) {
      best = prev;
      best_bases = bases;
      best_iters = it;
    }
  }

  // Witness: projection onto the at-most-one-excitation span of the best basis.
  auto c = primed_coeffs(s, best_bases);
  Vector amps = Vector::Zero(8);
  for (int idx = 0; idx < 8; ++idx) {
    int ones = ((idx >> 2) & 1) + ((idx >> 1) & 1) + (idx & 1);
    if (ones >= 2) continue;
    int i0 = (idx >> 2) & 1, i1 = (idx >> 1) & 1, i2 = idx & 1;
    for (int g = 0; g < 8; ++g) {
      int b0 = (g >> 2) & 1, b1 = (g >> 1) & 1, b2 = g & 1;
      amps[g] += c[idx] * best_bases[0][i0][b0] * best_bases[1][i1][b1] *
                 best_bases[2][i2][b2];
    }
  }

  MeasureResult r;
  r.e_value = std::clamp(best, 0.0, 1.0);
  r.d_value = d_from_e(r.e_value);
  r.witness = normalize(PureState{{2, 2, 2}, std::move(amps)});
  r.iterations = best_iters;
  r.converged = all_converged;
  for (double v : values) {
    if (v - best < 1e-9) ++r.starts_agreeing;
  }
  return r;
}

double e_ghz_set(const PureState& s) {
  if (s.dims != std::vector<int>{2, 2, 2}) {
    throw ShapeError("e_ghz_set: requires a three-qubit state");
  }
  // The GHZ set is dense, so the measure vanishes identically.
  return 0.0;
}

PureState ghz_eps_state(const GhzSequenceParam& p) {
  if (!(p.epsilon > 0)) throw DomainError("ghz_eps_state: epsilon must be > 0");
  std::vector<Vector> gammas, alphas;
  for (int j = 0; j < 3; ++j) {
    if (p.alpha[j].size() != 2 || p.beta[j].size() != 2) {
      throw ShapeError("ghz_eps_state: local vectors must be qubits");
    }
    gammas.push_back(p.alpha[j] + p.epsilon * p.beta[j]);
    alphas.push_back(p.alpha[j]);
  }
  // Unnormalized tensor products; product_state would normalize the factors.
  auto tensor3 = [](const std::vector<Vector>& f) {
    Vector amps(8);
    for (int g = 0; g < 8; ++g) {
      amps[g] = f[0][(g >> 2) & 1] * f[1][(g >> 1) & 1] * f[2][g & 1];
    }
    return amps;
  };
  Vector amps = (tensor3(gammas) - tensor3(alphas)) / p.epsilon;
  return normalize(PureState{{2, 2, 2}, std::move(amps)});
}

}  // namespace gme
