#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "su3/algebra.hpp"

using namespace su3;

namespace {

AlgebraVector unit(int k) {
  AlgebraVector e = AlgebraVector::Zero();
  e[k - 1] = 1;
  return e;
}

}  // namespace

TEST_CASE("generators match the written-out matrices") {
  for (int k = 1; k <= 8; ++k) {
    CHECK(oracle::max_abs(gell_mann(k) - oracle::lambda(k)) == 0.0);
    CHECK(oracle::max_abs(gell_mann(k) - gell_mann(k).adjoint()) == 0.0);
    CHECK(std::abs(gell_mann(k).trace()) < 1e-15);
  }
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      CHECK(std::abs((gell_mann(i) * gell_mann(j)).trace() - 2.0 * (i == j)) < 1e-15);
  CHECK_THROWS_AS(gell_mann(0), std::out_of_range);
  CHECK_THROWS_AS(gell_mann(9), std::out_of_range);
}

TEST_CASE("structure constants agree with the trace formulas") {
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      for (int k = 1; k <= 8; ++k) {
        CHECK(std::abs(structure_c(i, j, k) - oracle::c_trace(i, j, k)) < 1e-15);
        CHECK(std::abs(symmetric_d(i, j, k) - oracle::d_trace(i, j, k)) < 1e-15);
        CHECK(structure_c(i, j, k) == -structure_c(j, i, k));
        CHECK(structure_c(i, j, k) == structure_c(j, k, i));
        CHECK(symmetric_d(i, j, k) == symmetric_d(j, i, k));
        CHECK(symmetric_d(i, j, k) == symmetric_d(k, j, i));
      }
  CHECK_THROWS_AS(structure_c(0, 1, 2), std::out_of_range);
  CHECK_THROWS_AS(symmetric_d(1, 2, 9), std::out_of_range);
}

TEST_CASE("published table values") {
  const double r3 = std::sqrt(3.0);
  CHECK(structure_c(1, 2, 3) == doctest::Approx(2));
  CHECK(structure_c(4, 5, 8) == doctest::Approx(r3));
  CHECK(structure_c(6, 7, 8) == doctest::Approx(r3));
  CHECK(structure_c(1, 4, 7) == doctest::Approx(1));
  CHECK(structure_c(2, 4, 6) == doctest::Approx(1));
  CHECK(structure_c(3, 4, 5) == doctest::Approx(1));
  CHECK(structure_c(1, 5, 6) == doctest::Approx(-1));
  CHECK(structure_c(3, 6, 7) == doctest::Approx(-1));
  CHECK(symmetric_d(1, 1, 8) == doctest::Approx(1 / r3));
  CHECK(symmetric_d(2, 2, 8) == doctest::Approx(1 / r3));
  CHECK(symmetric_d(3, 3, 8) == doctest::Approx(1 / r3));
  CHECK(-symmetric_d(8, 8, 8) == doctest::Approx(1 / r3));
  CHECK(symmetric_d(4, 4, 8) == doctest::Approx(-1 / (2 * r3)));
  CHECK(symmetric_d(1, 4, 6) == doctest::Approx(0.5));
  CHECK(symmetric_d(2, 4, 7) == doctest::Approx(-0.5));
}

TEST_CASE("commutator and anticommutator identities") {
  const auto t = commutator_tensor_check();
  CHECK(t.max_commutator() <= 1e-14);
  CHECK(t.max_anticommutator() <= 1e-14);
  CHECK(t.commutator(0, 1) == 0.0);

  const Complex I(0, 1);
  const Mat3 c12 = gell_mann(1) * gell_mann(2) - gell_mann(2) * gell_mann(1);
  CHECK(oracle::max_abs(c12 - 2.0 * I * gell_mann(3)) < 1e-15);
  const Mat3 c38 = gell_mann(3) * gell_mann(8) - gell_mann(8) * gell_mann(3);
  CHECK(oracle::max_abs(c38) == 0.0);
  for (int k = 1; k <= 8; ++k) CHECK(structure_c(3, 8, k) == 0.0);
  const Mat3 c45 = gell_mann(4) * gell_mann(5) - gell_mann(5) * gell_mann(4);
  CHECK(oracle::max_abs(c45 - I * (gell_mann(3) + std::sqrt(3.0) * gell_mann(8))) < 1e-15);
}

TEST_CASE("star product") {
  CHECK((star(unit(3), unit(3)) - unit(8)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((star(-unit(8), -unit(8)) + unit(8)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(star(AlgebraVector::Zero(), unit(4)).isZero(0));

  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int n = 0; n < 20; ++n) {
    AlgebraVector a, b;
    for (int k = 0; k < 8; ++k) a[k] = g(rng), b[k] = g(rng);
    CHECK((star(a, b) - star(b, a)).cwiseAbs().maxCoeff() < 1e-14);
    // √3 d_ijk a_j b_k computed from the trace oracle
    AlgebraVector ref = AlgebraVector::Zero();
    for (int i = 1; i <= 8; ++i)
      for (int j = 1; j <= 8; ++j)
        for (int k = 1; k <= 8; ++k) ref[i - 1] += std::sqrt(3.0) * oracle::d_trace(i, j, k) * a[j - 1] * b[k - 1];
    CHECK((star(a, b) - ref).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("expand and reconstruct") {
  const Complex I(0, 1);
  auto e = expand(gell_mann(5));
  CHECK((e.re - unit(5)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(e.im.isZero(1e-15));
  e = expand(I * gell_mann(3));
  CHECK(e.re.isZero(1e-15));
  CHECK((e.im - unit(3)).cwiseAbs().maxCoeff() < 1e-15);
  e = expand(gell_mann(1) + 2.0 * gell_mann(8));
  AlgebraVector want = AlgebraVector::Zero();
  want[0] = 1;
  want[7] = 2;
  CHECK((e.re - want).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(e.im.isZero(1e-15));

  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (int n = 0; n < 50; ++n) {
    AlgebraVector v;
    for (int k = 0; k < 8; ++k) v[k] = g(rng);
    const Mat3 m = reconstruct(v);
    CHECK(oracle::max_abs(m - m.adjoint()) < 1e-15);
    CHECK((expand(m).re - v).cwiseAbs().maxCoeff() < 1e-14);
  }

  CHECK_THROWS_AS(expand(Mat3::Identity()), std::invalid_argument);
  try {
    expand(Mat3::Identity());
  } catch (const std::invalid_argument& err) {
    CHECK(std::string(err.what()).find("|Tr") != std::string::npos);
  }
}
