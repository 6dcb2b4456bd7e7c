#include <doctest.h>

#include <cmath>

#include "gme/linalg.hpp"
#include "test_helpers.hpp"

using namespace gme;
using gme::test::max_abs;

TEST_SUITE_BEGIN("linalg");

TEST_CASE("svd of simple matrices") {
  SUBCASE("identity") {
    SvdResult d = svd(Matrix::Identity(2, 2));
    CHECK(d.s[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d.s[1] == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("diagonal") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 3.0 / std::sqrt(10.0);
    m(1, 1) = 1.0 / std::sqrt(10.0);
    SvdResult d = svd(m);
    CHECK(d.s[0] == doctest::Approx(0.9486832980505138).epsilon(1e-12));
    CHECK(d.s[1] == doctest::Approx(0.31622776601683794).epsilon(1e-12));
  }
  SUBCASE("nilpotent Jordan block") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;
    SvdResult d = svd(m);
    CHECK(d.s[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d.s[1] == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("non-finite input rejected") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(svd(m), InvalidInputError);
  }
}

TEST_CASE("svd reconstruction on 200 random matrices up to 8x8") {
  RandomSource rng(42);
  for (int t = 0; t < 200; ++t) {
    int rows = 1 + static_cast<int>(rng.next_u64() % 8);
    int cols = 1 + static_cast<int>(rng.next_u64() % 8);
    Matrix m = random_ginibre(rows, cols, rng);
    SvdResult d = svd(m);
    CHECK(max_abs(d.u * d.u.adjoint() - Matrix::Identity(rows, rows)) < 1e-12);
    CHECK(max_abs(d.v * d.v.adjoint() - Matrix::Identity(cols, cols)) < 1e-12);
    Matrix sigma = Matrix::Zero(rows, cols);
    for (int i = 0; i < std::min(rows, cols); ++i) sigma(i, i) = d.s[i];
    CHECK(max_abs(d.u * sigma * d.v.adjoint() - m) < 1e-10);
    for (int i = 0; i + 1 < d.s.size(); ++i) CHECK(d.s[i] >= d.s[i + 1]);
    CHECK(d.s[d.s.size() - 1] >= 0.0);
  }
}

TEST_CASE("trace inequality |tr AB| <= s(A).s(B) on 500 random pairs") {
  RandomSource rng(7);
  for (int t = 0; t < 500; ++t) {
    int n = 1 + static_cast<int>(rng.next_u64() % 6);
    Matrix a = random_ginibre(n, n, rng);
    Matrix b = random_ginibre(n, n, rng);
    double lhs = std::abs((a * b).trace());
    double rhs = svd(a).s.dot(svd(b).s);
    CHECK(lhs <= rhs + 1e-10);
  }
}

TEST_CASE("eig_hermitian") {
  SUBCASE("diagonal") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 0.9;
    m(1, 1) = 0.1;
    EigResult e = eig_hermitian(m);
    CHECK(e.values[0] == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(e.values[1] == doctest::Approx(0.1).epsilon(1e-12));
  }
  SUBCASE("pauli x") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = m(1, 0) = 1.0;
    EigResult e = eig_hermitian(m);
    CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e.values[1] == doctest::Approx(-1.0).epsilon(1e-12));
  }
  SUBCASE("zero matrix") {
    EigResult e = eig_hermitian(Matrix::Zero(2, 2));
    CHECK(e.values[0] == 0.0);
    CHECK(e.values[1] == 0.0);
  }
  SUBCASE("residuals on random Hermitian matrices") {
    RandomSource rng(3);
    for (int t = 0; t < 50; ++t) {
      int n = 2 + static_cast<int>(rng.next_u64() % 6);
      Matrix g = random_ginibre(n, n, rng);
      Matrix m = g + g.adjoint();
      EigResult e = eig_hermitian(m);
      CHECK(max_abs(m * e.vectors - e.vectors * Matrix(e.values.cast<Complex>().asDiagonal())) < 1e-10);
      CHECK(max_abs(e.vectors.adjoint() * e.vectors - Matrix::Identity(n, n)) < 1e-12);
    }
  }
  SUBCASE("non-Hermitian rejected") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(eig_hermitian(m), InvalidInputError);
  }
}

TEST_CASE("polar decomposition") {
  SUBCASE("unitary input gives p = identity") {
    RandomSource rng(11);
    Matrix u = random_unitary(3, rng);
    PolarResult r = polar(u);
    CHECK(max_abs(r.p - Matrix::Identity(3, 3)) < 1e-10);
    CHECK(max_abs(r.u * r.p - u) < 1e-10);
  }
  SUBCASE("positive definite input gives u = identity") {
    RandomSource rng(12);
    Matrix g = random_ginibre(3, 3, rng);
    Matrix m = g * g.adjoint() + Matrix::Identity(3, 3);
    PolarResult r = polar(m);
    CHECK(max_abs(r.u - Matrix::Identity(3, 3)) < 1e-10);
  }
  SUBCASE("worked 2x2 example") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 2.0;
    m(1, 0) = 1.0;
    PolarResult r = polar(m);
    CHECK(max_abs(r.u * r.p - m) < 1e-10);
    Matrix expected_u = Matrix::Zero(2, 2);
    expected_u(0, 1) = expected_u(1, 0) = 1.0;
    CHECK(max_abs(r.u - expected_u) < 1e-10);
    CHECK(r.p(0, 0).real() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r.p(1, 1).real() == doctest::Approx(2.0).epsilon(1e-10));
    EigResult e = eig_hermitian(r.p);
    CHECK(e.values.minCoeff() >= -1e-12);
  }
  SUBCASE("u unitary even for rank-deficient input") {
    RandomSource rng(13);
    Matrix g = random_ginibre(4, 2, rng);
    Matrix m = g * g.adjoint();  // rank 2 of 4
    PolarResult r = polar(m);
    CHECK(max_abs(r.u * r.u.adjoint() - Matrix::Identity(4, 4)) < 1e-10);
    CHECK(max_abs(r.u * r.p - m) < 1e-10);
  }
}

TEST_CASE("random_unitary") {
  SUBCASE("dim 1 is a phase") {
    RandomSource rng(5);
    Matrix u = random_unitary(1, rng);
    CHECK(std::abs(std::abs(u(0, 0)) - 1.0) < 1e-12);
  }
  SUBCASE("deterministic per seed and stream") {
    RandomSource a(99), b(99);
    CHECK(max_abs(random_unitary(4, a) - random_unitary(4, b)) == 0.0);
    RandomSource c = RandomSource(99).substream(1);
    RandomSource d = RandomSource(99).substream(2);
    CHECK(max_abs(random_unitary(4, c) - random_unitary(4, d)) > 1e-3);
  }
  SUBCASE("unitarity") {
    RandomSource rng(6);
    for (int dim : {2, 3, 5}) {
      Matrix u = random_unitary(dim, rng);
      CHECK(max_abs(u.adjoint() * u - Matrix::Identity(dim, dim)) < 1e-12);
    }
  }
}

TEST_CASE("random_instrument") {
  SUBCASE("single outcome is unitary") {
    RandomSource rng(8);
    auto ms = random_instrument(3, 1, rng);
    REQUIRE(ms.size() == 1);
    CHECK(max_abs(ms[0].adjoint() * ms[0] - Matrix::Identity(3, 3)) < 1e-10);
  }
  SUBCASE("completeness") {
    RandomSource rng(9);
    for (int t = 0; t < 20; ++t) {
      int dim = 2 + static_cast<int>(rng.next_u64() % 3);
      int n = 1 + static_cast<int>(rng.next_u64() % 4);
      auto ms = random_instrument(dim, n, rng);
      Matrix sum = Matrix::Zero(dim, dim);
      for (const auto& m : ms) sum += m.adjoint() * m;
      CHECK(max_abs(sum - Matrix::Identity(dim, dim)) < 1e-10);
    }
  }
  SUBCASE("deterministic per seed") {
    RandomSource a(77), b(77);
    auto ma = random_instrument(2, 3, a);
    auto mb = random_instrument(2, 3, b);
    for (size_t i = 0; i < ma.size(); ++i) CHECK(max_abs(ma[i] - mb[i]) == 0.0);
  }
}

TEST_SUITE_END();
