#include <doctest.h>

#include <cmath>

#include "gme/bipartite.hpp"
#include "gme/states.hpp"
#include "test_helpers.hpp"

using namespace gme;
using gme::test::max_abs;

TEST_SUITE_BEGIN("bipartite");

TEST_CASE("schmidt decomposition") {
  SUBCASE("table1 psi across A|BC") {
    SchmidtDecomposition sd = schmidt(table1_psi(), Cut{{0}});
    CHECK(sd.lambdas[0] == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(sd.lambdas[1] == doctest::Approx(0.1).epsilon(1e-12));
  }
  SUBCASE("product state has rank 1") {
    Vector k0 = Vector::Zero(2);
    k0[0] = 1;
    SchmidtDecomposition sd = schmidt(product_state({k0, k0, k0}), Cut{{1}});
    CHECK(schmidt_rank(sd) == 1);
    CHECK(sd.lambdas[0] == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("W state across A|BC gives (2/3, 1/3)") {
    SchmidtDecomposition sd = schmidt(w_state(), Cut{{0}});
    CHECK(sd.lambdas[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(sd.lambdas[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  }
  SUBCASE("reconstruction and invariants on random states") {
    RandomSource rng(31);
    for (int t = 0; t < 50; ++t) {
      PureState s = random_state({3, 4}, rng);
      SchmidtDecomposition sd = schmidt(s, Cut{{0}});
      CHECK(std::abs(sd.lambdas.sum() - 1.0) < 1e-10);
      for (int i = 0; i + 1 < sd.lambdas.size(); ++i) {
        CHECK(sd.lambdas[i] >= sd.lambdas[i + 1]);
      }
      Matrix m = Matrix::Zero(3, 4);
      for (int i = 0; i < sd.lambdas.size(); ++i) {
        m += std::sqrt(sd.lambdas[i]) * sd.left_basis.col(i) *
             sd.right_basis.col(i).adjoint();
      }
      CHECK(max_abs(m - to_matrix(s, {0})) < 1e-9);
    }
  }
  SUBCASE("invalid cut") {
    CHECK_THROWS_AS(schmidt(w_state(), Cut{{0, 1, 2}}), ShapeError);
    CHECK_THROWS_AS(schmidt(w_state(), Cut{{}}), ShapeError);
  }
}

TEST_CASE("e_rank_k closed form") {
  SUBCASE("direct formula on a known spectrum") {
    // engineer a 3x3 bipartite state with lambdas (0.5, 0.3, 0.2)
    Vector amps = Vector::Zero(9);
    amps[0] = std::sqrt(0.5);
    amps[4] = std::sqrt(0.3);
    amps[8] = std::sqrt(0.2);
    PureState s{{3, 3}, amps};
    CHECK(e_rank_k(s, Cut{{0}}, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(e_rank_k(s, Cut{{0}}, 2) == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(e_rank_k(s, Cut{{0}}, 3) == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("table1 psi, cut AB|C, k=1") {
    CHECK(e_rank_k(table1_psi(), Cut{{0, 1}}, 1) == doctest::Approx(0.1).epsilon(1e-9));
  }
  SUBCASE("Bell pair, k=1") {
    Vector amps = Vector::Zero(4);
    amps[0] = amps[3] = 1.0 / std::sqrt(2.0);
    CHECK(e_rank_k(PureState{{2, 2}, amps}, Cut{{0}}, 1) ==
          doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("matches partial eigenvalue sums of either reduced density") {
    RandomSource rng(32);
    for (int t = 0; t < 200; ++t) {
      int da = 2 + static_cast<int>(rng.next_u64() % 3);
      int db = 2 + static_cast<int>(rng.next_u64() % 3);
      PureState s = random_state({da, db}, rng);
      for (int side = 0; side < 2; ++side) {
        EigResult e = eig_hermitian(reduced_density(s, {side}));
        for (int k = 1; k <= std::min(da, db); ++k) {
          double sum = 0;
          for (int i = 0; i < std::min<long>(k, e.values.size()); ++i) {
            sum += e.values[i];
          }
          CHECK(std::abs(e_rank_k(s, Cut{{0}}, k) - (1.0 - sum)) < 1e-10);
        }
      }
    }
  }
  SUBCASE("monotone chain in k") {
    RandomSource rng(33);
    for (int t = 0; t < 50; ++t) {
      PureState s = random_state({4, 4}, rng);
      double prev = 1.0;
      for (int k = 1; k <= 4; ++k) {
        double e = e_rank_k(s, Cut{{0}}, k);
        CHECK(e <= prev + 1e-12);
        CHECK(e >= 0.0);
        prev = e;
      }
      CHECK(e_rank_k(s, Cut{{0}}, 4) == doctest::Approx(0.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("closest_rank_k") {
  SUBCASE("k >= rank returns the state itself") {
    RandomSource rng(34);
    PureState s = random_state({3, 3}, rng);
    PureState phi = closest_rank_k(s, Cut{{0}}, 5);
    CHECK(std::abs(std::abs(inner(s, phi)) - 1.0) < 1e-10);
  }
  SUBCASE("dominant Schmidt term of table1 psi is |000>") {
    PureState phi = closest_rank_k(table1_psi(), Cut{{0}}, 1);
    CHECK(std::abs(std::abs(phi.amps[0]) - 1.0) < 1e-12);
  }
  SUBCASE("overlap equals top-k lambda sum") {
    Vector amps = Vector::Zero(9);
    amps[0] = std::sqrt(0.5);
    amps[4] = std::sqrt(0.3);
    amps[8] = std::sqrt(0.2);
    PureState s{{3, 3}, amps};
    PureState phi = closest_rank_k(s, Cut{{0}}, 2);
    CHECK(std::norm(inner(s, phi)) == doctest::Approx(0.8).epsilon(1e-10));
    SchmidtDecomposition sd = schmidt(phi, Cut{{0}});
    CHECK(schmidt_rank(sd) <= 2);
  }
  SUBCASE("random rank-<=k states never beat the bound") {
    RandomSource rng(35);
    for (int t = 0; t < 200; ++t) {
      int n = 3 + static_cast<int>(rng.next_u64() % 2);
      PureState s = random_state({n, n}, rng);
      int k = 1 + static_cast<int>(rng.next_u64() % n);
      SchmidtDecomposition sd = schmidt(s, Cut{{0}});
      double bound = 0;
      for (int i = 0; i < k; ++i) bound += sd.lambdas[i];
      // random state of matrix rank at most k
      Matrix a = random_ginibre(n, k, rng) * random_ginibre(k, n, rng);
      a /= std::sqrt(a.squaredNorm());
      PureState phi = from_matrix(a, {n, n}, {0});
      CHECK(std::norm(inner(s, phi)) <= bound + 1e-9);
    }
  }
}

TEST_CASE("d and E conversions") {
  CHECK(d_from_e(0.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(d_from_e(1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(d_from_e(0.75) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(d_from_e(-0.1), DomainError);
  CHECK_THROWS_AS(d_from_e(1.1), DomainError);
  CHECK_THROWS_AS(e_from_d(1.5), DomainError);
  SUBCASE("round trip and monotonicity") {
    double prev = -1;
    for (int i = 0; i <= 1000; ++i) {
      double e = i / 1000.0;
      double d = d_from_e(e);
      CHECK(std::abs(e_from_d(d) - e) < 1e-12);
      CHECK(d > prev);
      prev = d;
    }
  }
}

TEST_SUITE_END();
