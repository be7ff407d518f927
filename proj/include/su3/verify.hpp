#ifndef SU3_VERIFY_HPP
#define SU3_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "su3/appendix.hpp"
#include "su3/cartan.hpp"

namespace su3 {

// Finite-difference probes of the exact constructions.

/// Central difference of compose along `dir`: (D(p + h dir) - D(p - h dir)) / 2h.
Mat3 directional_derivative(const EulerAngles& p, const Eigen::Matrix<double, 8, 1>& dir, double h);

/// max_i |X_i D - iλ_i D| (left) or |X_i D - i D λ_i| (right), X_i = real field row i.
double defining_relation_residual(const EulerAngles& p, Handedness hand, double h = 1e-6);

/// Lie bracket [X_i, X_j] of two real coordinate fields as a vector of ∂ coefficients.
Eigen::Matrix<double, 8, 1> field_bracket(const EulerAngles& p, Handedness hi, int i,
                                          Handedness hj, int j, double h = 1e-6);

struct ClosureResiduals {
  double left = 0;   // max |[X_i,X_j] - C_kij X_k|
  double right = 0;  // max |[X^r_i,X^r_j] + C_kij X^r_k|
  double mixed = 0;  // max |[X_i, X^r_j]|
};

ClosureResiduals closure_residuals(const EulerAngles& p, double h = 1e-6);

/// Haar-random interior chart point: covering-range Haar draw with β, b, θ
/// restricted to [margin, π/2 - margin].
std::vector<EulerAngles> interior_points(std::uint64_t seed, int count, double margin = 0.1);

enum class VerifyLevel { Quick, Full };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::Quick;
  std::uint64_t seed = 1;
  double tol = 1e-12;         // exact matrix-algebra residuals
  double fd_step = 1e-6;
  double appendix_tol = 1e-10;
};

struct CheckResult {
  std::string name;
  double residual = 0;
  double threshold = 0;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  AuditReport appendix;

  bool passed() const;
  nlohmann::json to_json() const;
};

VerifyReport run_verification(const VerifyOptions& opt);

}  // namespace su3

#endif
