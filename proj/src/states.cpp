#include "su3/states.hpp"

#include <algorithm>
#include <cmath>

namespace su3 {

DensityState base_state() {
  DensityState s;
  s.rho(2, 2) = 1.0;
  s.n[7] = -1.0;
  return s;
}

DensityState project(const GroupElement& g) {
  const Mat3& u = g.matrix();
  DensityState s;
  s.rho = u * base_state().rho * u.adjoint();
  s.n = expand((3.0 * s.rho - Mat3::Identity()) / kSqrt3, 1e-9).re;
  return s;
}

AlgebraVector n_from_adjoint(const GroupElement& g) { return -adjoint(g).row(7).transpose(); }

StateVector psi_of(const EulerAngles& x) { return compose(x).matrix().col(2); }

AlgebraVector n_from_psi(const StateVector& psi) {
  AlgebraVector n;
  for (int k = 0; k < 8; ++k)
    n[k] = 0.5 * kSqrt3 * (psi.adjoint() * gell_mann(k + 1) * psi)(0).real();
  return n;
}

double StateResiduals::max_algebraic() const {
  return std::max({hermiticity, trace, idempotence, norm, star, reconstruction});
}

StateResiduals check_state(const DensityState& s) {
  StateResiduals r;
  r.hermiticity = (s.rho - s.rho.adjoint()).cwiseAbs().maxCoeff();
  r.trace = std::abs(s.rho.trace() - 1.0);
  r.idempotence = (s.rho * s.rho - s.rho).cwiseAbs().maxCoeff();
  const Mat3 herm = 0.5 * (s.rho + s.rho.adjoint());
  r.min_eigenvalue = Eigen::SelfAdjointEigenSolver<Mat3>(herm, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
  r.norm = std::abs(s.n.squaredNorm() - 1.0);
  r.star = (star(s.n, s.n) - s.n).cwiseAbs().maxCoeff();
  const Mat3 rebuilt = (Mat3::Identity() + kSqrt3 * reconstruct(s.n)) / 3.0;
  r.reconstruction = (rebuilt - s.rho).cwiseAbs().maxCoeff();
  return r;
}

}  // namespace su3
