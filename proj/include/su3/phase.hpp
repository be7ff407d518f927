#ifndef SU3_PHASE_HPP
#define SU3_PHASE_HPP

#include <span>
#include <vector>

#include "su3/states.hpp"

namespace su3 {

/// Real covector over (dα, dβ, dγ, dθ, da, db, dc, dφ).
using ConnectionValue = Eigen::Matrix<double, 8, 1>;

/// Antisymmetric components f(i,j) with F = Σ_{i<j} f(i,j) dx^i ∧ dx^j.
using CurvatureValue = Mat8;

/// A = -(2/√3) dφ + sin²θ cos2β dα + sin²θ dγ, the real covector -i ψ† dψ.
ConnectionValue connection(const EulerAngles& p);

/// F = dA = sin2θ cos2β dθ∧dα - 2 sin²θ sin2β dβ∧dα + sin2θ dθ∧dγ.
CurvatureValue curvature(const EulerAngles& p);

/// Piecewise-linear path through chart points. When closed, the last waypoint
/// must coincide with the first up to whole periods of D (2π in α..c, 2√3π in φ).
struct LoopSpec {
  std::vector<EulerAngles> waypoints;
  int samples_per_segment = 1;
  bool closed = true;

  /// Throws std::invalid_argument on a malformed or open loop.
  void validate() const;

  std::size_t total_samples() const;

  /// Chart points of the sampled path, including both endpoints.
  std::vector<EulerAngles> sample_points() const;
};

/// Composite-trapezoid ∮ A along the loop. The dφ term is left out unless
/// include_dphi is set.
double phase_connection(const LoopSpec& loop, bool include_dphi = false);

/// Σ_k arg⟨ψ_k|ψ_{k+1}⟩ over a closed chain, closure overlap included.
/// Throws std::domain_error if an overlap falls below min_overlap.
double pancharatnam_sum(std::span<const StateVector> states, double min_overlap = 1e-8);

/// Discrete gauge-independent phase of psi_of along the sampled loop, with the
/// fiber term -(2/√3)∮dφ removed unless include_dphi is set.
double phase_pancharatnam(const LoopSpec& loop, bool include_dphi = false,
                          double min_overlap = 1e-8);

/// Rectangle in two chart coordinates, the other six held at `base`.
struct RectangleSurface {
  Coord u = Theta, v = Gamma;
  double u0 = 0, u1 = 0, v0 = 0, v1 = 0;
  EulerAngles base;
  int samples_u = 200, samples_v = 200;
};

/// 2-D trapezoid ∫∫ f(u,v) du dv.
double phase_curvature(const RectangleSurface& s);

/// (u0,v0) → (u1,v0) → (u1,v1) → (u0,v1) → (u0,v0), positively oriented for phase_curvature.
LoopSpec boundary_loop(const RectangleSurface& s, int samples_per_segment);

/// The reversed traversal of a loop.
LoopSpec reversed(const LoopSpec& loop);

}  // namespace su3

#endif
