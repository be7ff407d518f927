#include "su3/cartan.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace su3 {

namespace {

// Real part of the λ expansion of a Hermitian sandwich.
AlgebraVector hermitian_coeffs(const Mat3& m) { return expand(m, 1e-9).re; }

CoeffMatrix sandwich_coeffs(const EulerAngles& p, Handedness hand) {
  const auto f = factors(p);
  CoeffMatrix out;
  out.handedness = hand;
  out.kind = CoeffKind::Forms;
  if (hand == Handedness::Left) {
    // (∂_j D) D† = P_j (iλ) P_j†, P_j = product of factors 0..j
    Mat3 prefix = Mat3::Identity();
    for (int j = 0; j < 8; ++j) {
      prefix = prefix * f[j];
      const Mat3& l = gell_mann(kCoordGenerator[j]);
      out.m.col(j) = hermitian_coeffs(prefix * l * prefix.adjoint());
    }
  } else {
    // D† ∂_j D = Q_j† (iλ) Q_j, Q_j = product of factors j..7
    Mat3 suffix = Mat3::Identity();
    for (int j = 7; j >= 0; --j) {
      suffix = f[j] * suffix;
      const Mat3& l = gell_mann(kCoordGenerator[j]);
      out.m.col(j) = hermitian_coeffs(suffix.adjoint() * l * suffix);
    }
  }
  return out;
}

CoeffMatrix fields_from(const CoeffMatrix& b) {
  CoeffMatrix out;
  out.handedness = b.handedness;
  out.kind = CoeffKind::Fields;
  out.m = b.m.transpose().inverse();
  return out;
}

}  // namespace

void require_regular(const EulerAngles& p, double tol) {
  std::string bad;
  auto check = [&](double v, const char* name) {
    if (std::abs(v) >= tol) return;
    if (!bad.empty()) bad += ", ";
    bad += name;
  };
  check(std::sin(2 * p.beta), "sin(2 beta)");
  check(std::sin(2 * p.b), "sin(2 b)");
  check(std::sin(2 * p.theta), "sin(2 theta)");
  check(std::sin(p.theta), "sin(theta)");
  if (!bad.empty())
    throw SingularStratumError("degenerate chart point: Haar density factor " + bad + " vanishes");
}

CoeffMatrix left_coeffs(const EulerAngles& p) { return sandwich_coeffs(p, Handedness::Left); }
CoeffMatrix right_coeffs(const EulerAngles& p) { return sandwich_coeffs(p, Handedness::Right); }

CoeffMatrix left_fields(const EulerAngles& p, double tol) {
  require_regular(p, tol);
  return fields_from(left_coeffs(p));
}

CoeffMatrix right_fields(const EulerAngles& p, double tol) {
  require_regular(p, tol);
  return fields_from(right_coeffs(p));
}

CoeffMatrix left_forms(const EulerAngles& p, double tol) {
  require_regular(p, tol);
  return left_coeffs(p);
}

CoeffMatrix right_forms(const EulerAngles& p, double tol) {
  require_regular(p, tol);
  return right_coeffs(p);
}

FrameAtPoint frame_at(const EulerAngles& p, double tol) {
  require_regular(p, tol);
  FrameAtPoint fr;
  fr.point = p;
  fr.b_left = left_coeffs(p);
  fr.b_right = right_coeffs(p);
  fr.a_left = fields_from(fr.b_left);
  fr.a_right = fields_from(fr.b_right);
  return fr;
}

Mat8 duality_pairing(const CoeffMatrix& forms, const CoeffMatrix& fields) {
  // ⟨-i F(l,k) dx^k, i A(i,j) ∂_j⟩ = Σ_k F(l,k) A(i,k)
  return forms.m * fields.m.transpose();
}

double haar_density(const EulerAngles& p) { return 2.0 * std::abs(left_coeffs(p).m.determinant()); }

double haar_density_formula(const EulerAngles& p) {
  const double s = std::sin(p.theta);
  return std::sin(2 * p.beta) * std::sin(2 * p.b) * std::sin(2 * p.theta) * s * s;
}

std::string to_csv(const CoeffMatrix& m) {
  std::ostringstream os;
  os << "row";
  for (const char* name : kCoordNames) os << ',' << name;
  os << '\n' << std::setprecision(17);
  for (int i = 0; i < 8; ++i) {
    os << "lambda" << (i + 1);
    for (int j = 0; j < 8; ++j) os << ',' << m.m(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace su3
