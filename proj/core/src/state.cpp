#include "gme/state.hpp"

#include <algorithm>
#include <cmath>

namespace gme {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void validate_party_subset(const std::vector<int>& parties, int p,
                           bool proper) {
  if (parties.empty()) throw ShapeError("party subset must be nonempty");
  std::vector<int> u = sorted_unique(parties);
  if (u.size() != parties.size()) throw ShapeError("duplicate party index");
  if (u.front() < 0 || u.back() >= p) throw ShapeError("party index out of range");
  if (proper && static_cast<int>(u.size()) == p) {
    throw ShapeError("party subset must be proper");
  }
}

}  // namespace

PureState::PureState(std::vector<int> dims_, Vector amps_)
    : dims(std::move(dims_)), amps(std::move(amps_)) {
  if (dims.empty()) throw ShapeError("PureState: no parties");
  long n = 1;
  for (int d : dims) {
    if (d < 2) throw ShapeError("PureState: local dimensions must be >= 2");
    n *= d;
  }
  if (amps.size() != n) {
    throw ShapeError("PureState: amplitude length does not match dims");
  }
  if (!amps.allFinite()) {
    throw InvalidInputError("PureState: non-finite amplitudes");
  }
}

long PureState::total_dim() const {
  long n = 1;
  for (int d : dims) n *= d;
  return n;
}

std::vector<long> strides(const std::vector<int>& dims) {
  std::vector<long> st(dims.size(), 1);
  for (int j = static_cast<int>(dims.size()) - 2; j >= 0; --j) {
    st[j] = st[j + 1] * dims[j + 1];
  }
  return st;
}

PureState normalize(const PureState& s) {
  double n = s.norm();
  if (n <= 1e-14) throw DomainError("normalize: zero-norm state");
  return {s.dims, s.amps / n};
}

Complex inner(const PureState& a, const PureState& b) {
  if (a.dims != b.dims) throw ShapeError("inner: dimension mismatch");
  return a.amps.dot(b.amps);  // Eigen's dot conjugates the first argument
}

PureState apply_local(const PureState& s, int party, const Matrix& m) {
  const int p = s.n_parties();
  if (party < 0 || party >= p) throw ShapeError("apply_local: bad party index");
  const int d = s.dims[party];
  if (m.rows() != d || m.cols() != d) {
    throw ShapeError("apply_local: operator shape does not match local dimension");
  }
  const auto st = strides(s.dims);
  const long stride = st[party];
  const long total = s.total_dim();
  Vector out = Vector::Zero(total);
  // Walk blocks where the party's digit is zero and contract along it.
  for (long base = 0; base < total; ++base) {
    if ((base / stride) % d != 0) continue;
    for (int a = 0; a < d; ++a) {
      Complex acc = 0;
      for (int b = 0; b < d; ++b) acc += m(a, b) * s.amps[base + b * stride];
      out[base + a * stride] = acc;
    }
  }
  return {s.dims, std::move(out)};
}

Matrix to_matrix(const PureState& s, const std::vector<int>& left) {
  const int p = s.n_parties();
  validate_party_subset(left, p, /*proper=*/true);
  std::vector<int> l = sorted_unique(left);
  std::vector<int> r;
  for (int j = 0; j < p; ++j) {
    if (!std::binary_search(l.begin(), l.end(), j)) r.push_back(j);
  }
  long rows = 1, cols = 1;
  for (int j : l) rows *= s.dims[j];
  for (int j : r) cols *= s.dims[j];

  const auto st = strides(s.dims);
  Matrix m(rows, cols);
  for (long g = 0; g < s.total_dim(); ++g) {
    long row = 0, col = 0;
    for (int j : l) row = row * s.dims[j] + (g / st[j]) % s.dims[j];
    for (int j : r) col = col * s.dims[j] + (g / st[j]) % s.dims[j];
    m(row, col) = s.amps[g];
  }
  return m;
}

PureState from_matrix(const Matrix& m, const std::vector<int>& dims,
                      const std::vector<int>& left) {
  const int p = static_cast<int>(dims.size());
  validate_party_subset(left, p, /*proper=*/true);
  std::vector<int> l = sorted_unique(left);
  std::vector<int> r;
  for (int j = 0; j < p; ++j) {
    if (!std::binary_search(l.begin(), l.end(), j)) r.push_back(j);
  }
  const auto st = strides(dims);
  long total = 1;
  for (int d : dims) total *= d;
  Vector amps(total);
  for (long g = 0; g < total; ++g) {
    long row = 0, col = 0;
    for (int j : l) row = row * dims[j] + (g / st[j]) % dims[j];
    for (int j : r) col = col * dims[j] + (g / st[j]) % dims[j];
    amps[g] = m(row, col);
  }
  return {dims, std::move(amps)};
}

Matrix reduced_density(const PureState& s, const std::vector<int>& parties) {
  Matrix m = to_matrix(s, parties);  // validates the subset
  return m * m.adjoint();
}

PureState product_state(const std::vector<Vector>& factors) {
  if (factors.empty()) throw ShapeError("product_state: no factors");
  std::vector<int> dims;
  for (const auto& f : factors) {
    if (f.size() < 2) throw ShapeError("product_state: factor dimension < 2");
    double n = f.norm();
    if (n <= 1e-14) throw DomainError("product_state: zero factor");
    dims.push_back(static_cast<int>(f.size()));
  }
  Vector amps = factors[0] / factors[0].norm();
  for (size_t j = 1; j < factors.size(); ++j) {
    Vector f = factors[j] / factors[j].norm();
    Vector next(amps.size() * f.size());
    for (long a = 0; a < amps.size(); ++a) {
      for (long b = 0; b < f.size(); ++b) {
        next[a * f.size() + b] = amps[a] * f[b];
      }
    }
    amps = std::move(next);
  }
  return {dims, std::move(amps)};
}

PureState random_state(const std::vector<int>& dims, RandomSource& rng) {
  long total = 1;
  for (int d : dims) total *= d;
  Vector amps(total);
  for (long i = 0; i < total; ++i) amps[i] = rng.complex_gaussian();
  PureState s{dims, std::move(amps)};
  return normalize(s);
}

}  // namespace gme
