#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "su3/measure.hpp"
#include "su3/states.hpp"

using namespace su3;

TEST_CASE("base state") {
  const auto s = base_state();
  Mat3 want = Mat3::Zero();
  want(2, 2) = 1;
  CHECK(s.rho == want);
  AlgebraVector n = AlgebraVector::Zero();
  n[7] = -1;
  CHECK(s.n == n);
  CHECK((star(s.n, s.n) - s.n).cwiseAbs().maxCoeff() < 1e-15);
  const auto id = project(GroupElement());
  CHECK(oracle::max_abs(id.rho - s.rho) == 0.0);
  CHECK((id.n - s.n).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("stabilizer leaves the base state fixed") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ang(-7, 7);
  for (int k = 0; k < 50; ++k) {
    EulerAngles x;
    x.a = ang(rng), x.b = ang(rng), x.c = ang(rng), x.phi = ang(rng);
    const auto s = project(compose(x));
    CHECK(oracle::max_abs(s.rho - base_state().rho) <= 1e-12);
    // the fixed state only depends on α, β, γ, θ
    auto y = oracle::interior_angles(rng);
    const Mat3 rho = project(compose(EulerAngles::from_array(y))).rho;
    y[4] = ang(rng), y[5] = ang(rng), y[6] = ang(rng), y[7] = ang(rng);
    CHECK(oracle::max_abs(project(compose(EulerAngles::from_array(y))).rho - rho) <= 1e-12);
  }
}

TEST_CASE("pure-state constraints") {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 500; ++k) {
    const GroupElement g = random_su3(rng);
    const auto s = project(g);
    const auto r = check_state(s);
    CHECK(r.norm <= 1e-11);
    CHECK(r.star <= 1e-11);
    CHECK(r.idempotence <= 1e-11);
    CHECK(r.hermiticity <= 1e-12);
    CHECK(r.trace <= 1e-12);
    CHECK(r.reconstruction <= 1e-12);
    CHECK(r.min_eigenvalue >= -1e-12);
    CHECK(r.max_algebraic() <= 1e-11);

    // n against the oracle's trace expansion and the adjoint row
    const oracle::M3 rho = g.matrix().col(2) * g.matrix().col(2).adjoint();
    for (int i = 1; i <= 8; ++i)
      CHECK(s.n[i - 1] == doctest::Approx(std::sqrt(3.0) * oracle::coeff(rho, i).real()));
    CHECK((n_from_adjoint(g) - s.n).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("state vector") {
  CHECK((psi_of(EulerAngles{}) - Vec3(0, 0, 1)).cwiseAbs().maxCoeff() == 0.0);
  std::mt19937_64 rng(43);
  for (int k = 0; k < 100; ++k) {
    const auto a = oracle::interior_angles(rng);
    const auto x = EulerAngles::from_array(a);
    const Vec3 psi = psi_of(x);
    CHECK(std::abs(psi[0]) == doctest::Approx(std::cos(x.beta) * std::sin(x.theta)));
    CHECK(std::abs(psi[1]) == doctest::Approx(std::sin(x.beta) * std::sin(x.theta)));
    CHECK(std::abs(psi[2]) == doctest::Approx(std::cos(x.theta)));
    // arg ψ3 = -2φ/√3 mod 2π
    const double d = std::remainder(std::arg(psi[2]) + 2 * x.phi / std::sqrt(3.0), 2 * kPi);
    CHECK(std::abs(d) < 1e-12);
    CHECK(oracle::max_abs(psi * psi.adjoint() - project(compose(x)).rho) < 1e-14);
    CHECK((n_from_psi(psi) - project(compose(x)).n).cwiseAbs().maxCoeff() < 1e-14);
    // closed form of the whole column
    const Complex I(0, 1);
    const Complex ph = std::exp(-2.0 * I * x.phi / std::sqrt(3.0));
    CHECK(std::abs(psi[0] - ph * std::exp(I * (x.alpha + x.gamma)) * std::cos(x.beta) * std::sin(x.theta)) < 1e-13);
    CHECK(std::abs(psi[1] + ph * std::exp(I * (x.gamma - x.alpha)) * std::sin(x.beta) * std::sin(x.theta)) < 1e-13);
  }
}
