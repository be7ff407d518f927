#ifndef SU3_STATES_HPP
#define SU3_STATES_HPP

#include "su3/group.hpp"

namespace su3 {

/// Pure three-level state: ρ = (1/3)(1 + √3 n·λ).
struct DensityState {
  Mat3 rho = Mat3::Zero();
  AlgebraVector n = AlgebraVector::Zero();
};

using StateVector = Vec3;

/// ρ0 = diag(0, 0, 1), n = -e8.
DensityState base_state();

/// ρ = g ρ0 g†, n from the λ expansion of (3ρ - 1)/√3.
DensityState project(const GroupElement& g);

/// n_i = -R_8^i from the adjoint representation.
AlgebraVector n_from_adjoint(const GroupElement& g);

/// ψ := third column of compose(x), so ψψ† = project(compose(x)).rho.
StateVector psi_of(const EulerAngles& x);

/// n_i = (√3/2) ψ† λ_i ψ
AlgebraVector n_from_psi(const StateVector& psi);

struct StateResiduals {
  double hermiticity = 0;
  double trace = 0;
  double idempotence = 0;   // |ρ² - ρ|
  double min_eigenvalue = 0;
  double norm = 0;          // |n·n - 1|
  double star = 0;          // |n⋆n - n|
  double reconstruction = 0;

  double max_algebraic() const;
};

StateResiduals check_state(const DensityState& s);

}  // namespace su3

#endif
