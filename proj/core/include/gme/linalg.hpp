#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "gme/errors.hpp"

namespace gme {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Deterministic random stream. A (seed, stream) pair fully determines the
/// sequence of draws, and derived streams are independent of each other, so
/// multi-start searches stay reproducible regardless of evaluation order.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {
    std::seed_seq seq{seed, stream, std::uint64_t{0x853c49e6748fea9b}};
    engine_.seed(seq);
  }

  /// Fresh source on an independent stream derived from the same seed.
  RandomSource substream(std::uint64_t index) const {
    return RandomSource(seed_, stream_ * 0x100000001ULL + index + 1);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_; }

  double uniform() {  // [0, 1)
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }
  double gaussian() {
    return std::normal_distribution<double>(0.0, 1.0)(engine_);
  }
  Complex complex_gaussian() {
    double re = gaussian();
    double im = gaussian();
    return {re, im};
  }
  std::uint64_t next_u64() { return engine_(); }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

/// m = u * s.asDiagonal() * v.adjoint(), s sorted descending.
struct SvdResult {
  Matrix u;
  RealVector s;
  Matrix v;
};

/// values sorted descending; m * vectors.col(i) = values[i] * vectors.col(i).
struct EigResult {
  RealVector values;
  Matrix vectors;
};

/// m = u * p with u unitary and p positive semidefinite.
struct PolarResult {
  Matrix u;
  Matrix p;
};

SvdResult svd(const Matrix& m);

EigResult eig_hermitian(const Matrix& m, double herm_tol = 1e-10);

PolarResult polar(const Matrix& m);

/// Principal square root of a positive semidefinite Hermitian matrix.
Matrix sqrt_psd(const Matrix& m);

/// Matrix with i.i.d. standard complex Gaussian entries.
Matrix random_ginibre(int rows, int cols, RandomSource& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix, phases fixed).
Matrix random_unitary(int dim, RandomSource& rng);

/// Random measurement instrument: n_outcomes operators M_i with
/// sum_i M_i^dag M_i = identity (exact up to inversion error).
std::vector<Matrix> random_instrument(int dim, int n_outcomes, RandomSource& rng);

}  // namespace gme
