#include "gme/product_opt.hpp"

#include <cmath>
#include <iostream>

#include "gme/bipartite.hpp"

namespace gme {

namespace {

Vector random_local_vector(int dim, RandomSource& rng) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.complex_gaussian();
  double n = v.norm();
  if (n <= 1e-14) {
    v.setZero();
    v[0] = 1.0;
    return v;
  }
  return v / n;
}

Complex overlap_with_product(const PureState& s,
                             const std::vector<Vector>& factors) {
  const auto st = strides(s.dims);
  const int p = s.n_parties();
  Complex acc = 0;
  for (long g = 0; g < s.total_dim(); ++g) {
    Complex w = 1.0;
    for (int k = 0; k < p; ++k) {
      w *= std::conj(factors[k][(g / st[k]) % s.dims[k]]);
    }
    acc += w * s.amps[g];
  }
  return acc;  // <product | psi>
}

// Contraction of psi with the conjugates of all factors except party j.
Vector environment_contraction(const PureState& s,
                               const std::vector<Vector>& factors, int j) {
  const auto st = strides(s.dims);
  const int p = s.n_parties();
  Vector v = Vector::Zero(s.dims[j]);
  for (long g = 0; g < s.total_dim(); ++g) {
    Complex w = 1.0;
    for (int k = 0; k < p; ++k) {
      if (k == j) continue;
      w *= std::conj(factors[k][(g / st[k]) % s.dims[k]]);
    }
    v[(g / st[j]) % s.dims[j]] += w * s.amps[g];
  }
  return v;
}

}  // namespace

std::pair<std::vector<Vector>, double> sweep_once(const PureState& s,
                                                  std::vector<Vector> factors,
                                                  RandomSource& rng) {
  const int p = s.n_parties();
  if (static_cast<int>(factors.size()) != p) {
    throw ShapeError("sweep_once: one factor per party required");
  }
  for (int j = 0; j < p; ++j) {
    Vector v = environment_contraction(s, factors, j);
    double n = v.norm();
    if (n <= 1e-14) {
      factors[j] = random_local_vector(s.dims[j], rng);
    } else {
      factors[j] = v / n;
    }
  }
  double o2 = std::norm(overlap_with_product(s, factors));
  return {std::move(factors), o2};
}

MeasureResult nearest_product(const PureState& s_in, const OptConfig& cfg) {
  if (cfg.n_starts < 1) throw DomainError("nearest_product: n_starts must be >= 1");
  PureState s = s_in;
  if (std::abs(s.norm() - 1.0) > 1e-6) {
    std::cerr << "gme: nearest_product: input norm deviates by "
              << std::abs(s.norm() - 1.0) << ", renormalizing\n";
  }
  s = normalize(s);
  const int p = s.n_parties();

  double best = -1.0;
  std::vector<Vector> best_factors;
  int best_iters = 0;
  bool all_converged = true;
  std::vector<double> start_values(cfg.n_starts, 0.0);

  RandomSource base(cfg.seed);
  for (int start = 0; start < cfg.n_starts; ++start) {
    RandomSource rng = base.substream(start);
    std::vector<Vector> factors;
    for (int j = 0; j < p; ++j) factors.push_back(random_local_vector(s.dims[j], rng));
    double prev = std::norm(overlap_with_product(s, factors));
    double cur = prev;
    int it = 0;
    bool converged = false;
    for (; it < cfg.max_iters; ++it) {
      auto [next, o2] = sweep_once(s, std::move(factors), rng);
      factors = std::move(next);
      cur = o2;
      if (cur - prev < cfg.conv_tol) {
        converged = true;
        ++it;
        break;
      }
      prev = cur;
    }
    all_converged = all_converged && converged;
    start_values[start] = cur;
    if (cur > best) {
      best = cur;
      best_factors = factors;
      best_iters = it;
    }
  }

  MeasureResult r;
  r.e_value = std::clamp(1.0 - best, 0.0, 1.0);
  r.d_value = d_from_e(r.e_value);
  r.witness = product_state(best_factors);
  r.iterations = best_iters;
  r.converged = all_converged;
  for (double v : start_values) {
    if (best - v < 1e-9) ++r.starts_agreeing;
  }
  return r;
}

}  // namespace gme
