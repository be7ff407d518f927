#include "su3/group.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace su3 {

namespace {

double wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0) r += period;
  if (r >= period) r = 0.0;
  return r;
}

Complex cis(double t) { return std::polar(1.0, t); }

// e^{iλ3 x} e^{iλ2 y} e^{iλ3 z}
Mat3 su2_block(double x, double y, double z) {
  return exp_generator(3, x).matrix() * exp_generator(2, y).matrix() *
         exp_generator(3, z).matrix();
}

}  // namespace

double& EulerAngles::operator[](int i) {
  switch (i) {
    case Alpha: return alpha;
    case Beta: return beta;
    case Gamma: return gamma;
    case Theta: return theta;
    case A: return a;
    case B: return b;
    case C: return c;
    case Phi: return phi;
  }
  throw std::out_of_range("EulerAngles index must be in 0..7");
}

double EulerAngles::operator[](int i) const { return const_cast<EulerAngles&>(*this)[i]; }

std::array<double, 8> EulerAngles::to_array() const {
  return {alpha, beta, gamma, theta, a, b, c, phi};
}

EulerAngles EulerAngles::from_array(const std::array<double, 8>& x) {
  return {x[0], x[1], x[2], x[3], x[4], x[5], x[6], x[7]};
}

AngleRange angle_range(Coord k, RangeConvention conv) {
  switch (k) {
    case Beta:
    case Theta:
    case B: return {0.0, kPi / 2, true};
    case Phi: return {0.0, kSqrt3 * kPi, false};
    case Gamma:
    case C:
      if (conv == RangeConvention::Covering) return {0.0, 2 * kPi, false};
      return {0.0, kPi, false};
    default: return {0.0, kPi, false};
  }
}

bool in_range(const EulerAngles& x, RangeConvention conv) {
  for (int k = 0; k < 8; ++k) {
    const auto r = angle_range(static_cast<Coord>(k), conv);
    const double v = x[k];
    if (!(v >= r.lo)) return false;
    if (r.closed_hi ? v > r.hi : v >= r.hi) return false;
  }
  return true;
}

double unitarity_residual(const Mat3& u) {
  return (u.adjoint() * u - Mat3::Identity()).cwiseAbs().maxCoeff();
}

double determinant_residual(const Mat3& u) { return std::abs(u.determinant() - 1.0); }

GroupElement::GroupElement(const Mat3& u, double tol) : u_(u) {
  const double ru = unitarity_residual(u);
  const double rd = determinant_residual(u);
  if (!(ru <= tol) || !(rd <= tol)) {
    std::ostringstream msg;
    msg << "not an SU(3) element: unitarity residual " << ru << ", determinant residual " << rd
        << " (tolerance " << tol << ")";
    throw std::invalid_argument(msg.str());
  }
}

Mat3 matrix_exp(const Mat3& m) { return m.exp(); }

GroupElement exp_generator(int k, double t) {
  Mat3 u = Mat3::Zero();
  const double c = std::cos(t), s = std::sin(t);
  switch (k) {
    case 2:
      // exp(iλ2 t) = [[c, s], [-s, c]] on components 1,2
      u(0, 0) = c;
      u(0, 1) = s;
      u(1, 0) = -s;
      u(1, 1) = c;
      u(2, 2) = 1.0;
      break;
    case 3:
      u(0, 0) = cis(t);
      u(1, 1) = cis(-t);
      u(2, 2) = 1.0;
      break;
    case 5:
      u(0, 0) = c;
      u(0, 2) = s;
      u(2, 0) = -s;
      u(2, 2) = c;
      u(1, 1) = 1.0;
      break;
    case 8:
      u(0, 0) = u(1, 1) = cis(t / kSqrt3);
      u(2, 2) = cis(-2.0 * t / kSqrt3);
      break;
    default:
      u = matrix_exp(Complex(0.0, t) * gell_mann(k));
  }
  return GroupElement::unchecked(u);
}

std::array<Mat3, 8> factors(const EulerAngles& x) {
  std::array<Mat3, 8> f;
  for (int k = 0; k < 8; ++k) f[k] = exp_generator(kCoordGenerator[k], x[k]).matrix();
  return f;
}

GroupElement compose(const EulerAngles& x) {
  const auto f = factors(x);
  Mat3 u = f[0];
  for (int k = 1; k < 8; ++k) u = u * f[k];
  return GroupElement::unchecked(u);
}

std::string Strata::describe() const {
  std::string out;
  auto add = [&](bool flag, const char* name) {
    if (!flag) return;
    if (!out.empty()) out += ",";
    out += name;
  };
  add(theta_zero, "theta=0");
  add(theta_half_pi, "theta=pi/2");
  add(beta_zero, "beta=0");
  add(beta_half_pi, "beta=pi/2");
  add(b_zero, "b=0");
  add(b_half_pi, "b=pi/2");
  return out;
}

Decomposition decompose(const GroupElement& g, double tol) {
  const Mat3& u = g.matrix();
  Decomposition out;
  EulerAngles& x = out.angles;
  Strata& st = out.strata;

  // Third column: e^{-2iφ/√3} (e^{i(α+γ)} cosβ sinθ, -e^{i(γ-α)} sinβ sinθ, cosθ)
  const double r13 = std::abs(u(0, 2)), r23 = std::abs(u(1, 2)), r33 = std::abs(u(2, 2));
  const double sin_theta = std::hypot(r13, r23);
  x.theta = std::atan2(sin_theta, r33);
  st.theta_zero = sin_theta < tol;
  st.theta_half_pi = r33 < tol;
  if (st.theta_zero) x.theta = 0.0;
  if (st.theta_half_pi) x.theta = kPi / 2;

  x.phi = st.theta_half_pi ? 0.0 : wrap(-0.5 * kSqrt3 * std::arg(u(2, 2)), kSqrt3 * kPi);
  const double phase = 2.0 * x.phi / kSqrt3;

  // at θ = 0 the first SU(2) block merges with the second; β is fixed at 0
  st.beta_zero = st.theta_zero;
  if (!st.theta_zero) {
    x.beta = std::atan2(r23, r13);
    st.beta_zero = r23 < tol * sin_theta;
    st.beta_half_pi = r13 < tol * sin_theta;
    const double sum = std::arg(u(0, 2)) + phase;   // α + γ
    const double diff = std::arg(-u(1, 2)) + phase; // γ - α
    if (st.beta_zero) {
      x.beta = 0.0;
      x.alpha = 0.0;
      x.gamma = wrap(sum, 2 * kPi);
    } else if (st.beta_half_pi) {
      x.beta = kPi / 2;
      x.alpha = 0.0;
      x.gamma = wrap(diff, 2 * kPi);
    } else {
      x.alpha = wrap(0.5 * (sum - diff), kPi);
      x.gamma = wrap(sum - x.alpha, 2 * kPi);
    }
  }

  // Residual embedded SU(2): e^{iλ3 a} e^{iλ2 b} e^{iλ3 c}
  const Mat3 w = exp_generator(5, -x.theta).matrix() * su2_block(x.alpha, x.beta, x.gamma).adjoint() *
                 u * exp_generator(8, -x.phi).matrix();
  const double r11 = std::abs(w(0, 0)), r12 = std::abs(w(0, 1));
  x.b = std::atan2(r12, r11);
  const double p = std::arg(w(0, 0));  // a + c
  const double q = std::arg(w(0, 1));  // a - c
  st.b_zero = r12 < tol;
  st.b_half_pi = r11 < tol;
  if (st.b_zero) {
    x.b = 0.0;
    x.a = 0.0;
    x.c = wrap(p, 2 * kPi);
  } else if (st.b_half_pi) {
    x.b = kPi / 2;
    x.a = 0.0;
    x.c = wrap(-q, 2 * kPi);
  } else {
    x.a = wrap(0.5 * (p + q), kPi);
    x.c = wrap(p - x.a, 2 * kPi);
  }
  return out;
}

Mat8 adjoint(const GroupElement& g) {
  const Mat3& u = g.matrix();
  Mat8 r;
  for (int i = 0; i < 8; ++i) {
    const Mat3 conj = u * gell_mann(i + 1) * u.adjoint();
    for (int j = 0; j < 8; ++j) r(i, j) = 0.5 * (conj * gell_mann(j + 1)).trace().real();
  }
  return r;
}

}  // namespace su3
