#ifndef SU3_GROUP_HPP
#define SU3_GROUP_HPP

#include <array>
#include <cstdint>
#include <string>

#include "su3/algebra.hpp"

namespace su3 {

/// Chart coordinates, in the order the factors appear in
///   D = e^{iλ3 α} e^{iλ2 β} e^{iλ3 γ} e^{iλ5 θ} e^{iλ3 a} e^{iλ2 b} e^{iλ3 c} e^{iλ8 φ}.
enum Coord : int { Alpha = 0, Beta, Gamma, Theta, A, B, C, Phi };

inline constexpr std::array<const char*, 8> kCoordNames = {"alpha", "beta", "gamma", "theta",
                                                           "a",     "b",    "c",     "phi"};

/// Generator (1-based λ label) carried by each chart coordinate.
inline constexpr std::array<int, 8> kCoordGenerator = {3, 2, 3, 5, 3, 2, 3, 8};

struct EulerAngles {
  double alpha = 0, beta = 0, gamma = 0, theta = 0;
  double a = 0, b = 0, c = 0, phi = 0;

  double eta() const { return phi / kSqrt3; }

  double& operator[](int i);
  double operator[](int i) const;

  std::array<double, 8> to_array() const;
  static EulerAngles from_array(const std::array<double, 8>& x);

  friend bool operator==(const EulerAngles&, const EulerAngles&) = default;
};

/// Fundamental domains for the chart.
///   Standard: α,γ,a,c ∈ [0,π), β,b,θ ∈ [0,π/2], φ ∈ [0,√3π)
///   Covering: as Standard but γ,c ∈ [0,2π); one-to-one onto SU(3) away from
///             the degenerate strata.
enum class RangeConvention { Standard, Covering };

struct AngleRange {
  double lo, hi;
  bool closed_hi;
};

AngleRange angle_range(Coord k, RangeConvention conv);
bool in_range(const EulerAngles& x, RangeConvention conv);

/// A 3x3 unitary matrix with unit determinant.
class GroupElement {
 public:
  GroupElement() : u_(Mat3::Identity()) {}

  /// Validates unitarity and det = 1; throws std::invalid_argument naming the residual.
  explicit GroupElement(const Mat3& u, double tol = 1e-12);

  static GroupElement unchecked(const Mat3& u) {
    GroupElement g;
    g.u_ = u;
    return g;
  }

  const Mat3& matrix() const { return u_; }
  Complex operator()(int i, int j) const { return u_(i, j); }

  GroupElement inverse() const { return unchecked(u_.adjoint()); }

  friend GroupElement operator*(const GroupElement& x, const GroupElement& y) {
    return unchecked(x.u_ * y.u_);
  }

 private:
  Mat3 u_;
};

double unitarity_residual(const Mat3& u);
double determinant_residual(const Mat3& u);

/// exp(i λk t). Closed form for k ∈ {2,3,5,8}; other k use the generic exponential.
GroupElement exp_generator(int k, double t);

/// exp(m) for any 3x3 complex matrix (Padé scaling-and-squaring).
Mat3 matrix_exp(const Mat3& m);

/// The eight factors of D in order.
std::array<Mat3, 8> factors(const EulerAngles& x);

GroupElement compose(const EulerAngles& x);

/// Degenerate strata hit by decompose. Gauge angles are set to zero and
/// their freedom is folded into the partner angles.
struct Strata {
  bool theta_zero = false;
  bool theta_half_pi = false;
  bool beta_zero = false;
  bool beta_half_pi = false;
  bool b_zero = false;
  bool b_half_pi = false;

  bool any() const {
    return theta_zero || theta_half_pi || beta_zero || beta_half_pi || b_zero || b_half_pi;
  }
  std::string describe() const;
};

struct Decomposition {
  EulerAngles angles;
  Strata strata;
};

/// Chart inverse. Output lies in the Covering ranges; compose(result.angles)
/// reproduces g. `stratum_tol` bounds the sines/cosines treated as zero.
Decomposition decompose(const GroupElement& g, double stratum_tol = 1e-10);

/// Adjoint representation, R(i,j) = Tr(g λ_{i+1} g† λ_{j+1}) / 2.
Mat8 adjoint(const GroupElement& g);

}  // namespace su3

#endif
