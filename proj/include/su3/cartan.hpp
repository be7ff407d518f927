#ifndef SU3_CARTAN_HPP
#define SU3_CARTAN_HPP

#include <stdexcept>
#include <string>

#include "su3/group.hpp"

namespace su3 {

enum class Handedness { Left, Right };
enum class CoeffKind { Forms, Fields };

/// Real 8x8 coefficient matrix. Rows are algebra indices (λ1..λ8), columns are
/// chart coordinates in factor order (α, β, γ, θ, a, b, c, φ).
///
/// Forms:  ω^l = -i m(l, k) dx^k, and m is also the Maurer-Cartan matrix b with
///         (∂_k D) D† = i m(l, k) λ_l  (left)   or   D† ∂_k D = i m(l, k) λ_l  (right).
/// Fields: Λ_i = i m(i, j) ∂_j, satisfying Λ_i D = -λ_i D (left) or Λ_i D = -D λ_i (right).
struct CoeffMatrix {
  Mat8 m = Mat8::Zero();
  Handedness handedness = Handedness::Left;
  CoeffKind kind = CoeffKind::Forms;
};

/// Thrown by field/form constructors on the chart's degenerate strata.
class SingularStratumError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact Maurer-Cartan matrices from conjugated generator sandwiches.
CoeffMatrix left_coeffs(const EulerAngles& p);
CoeffMatrix right_coeffs(const EulerAngles& p);

CoeffMatrix left_fields(const EulerAngles& p, double singular_tol = 1e-9);
CoeffMatrix right_fields(const EulerAngles& p, double singular_tol = 1e-9);
CoeffMatrix left_forms(const EulerAngles& p, double singular_tol = 1e-9);
CoeffMatrix right_forms(const EulerAngles& p, double singular_tol = 1e-9);

struct FrameAtPoint {
  EulerAngles point;
  CoeffMatrix b_left, a_left, b_right, a_right;
};

FrameAtPoint frame_at(const EulerAngles& p, double singular_tol = 1e-9);

/// Pairing ⟨ω^l, Λ_i⟩ as an 8x8 matrix indexed (l, i).
Mat8 duality_pairing(const CoeffMatrix& forms, const CoeffMatrix& fields);

/// sin2β sin2b sin2θ sin²θ, evaluated as 2|det b|.
double haar_density(const EulerAngles& p);

/// The closed-form density, for comparison with haar_density.
double haar_density_formula(const EulerAngles& p);

/// Throws SingularStratumError if any factor of the Haar density is below tol,
/// naming the vanishing factor(s).
void require_regular(const EulerAngles& p, double tol);

/// CSV, 8 rows (algebra index) by 8 columns (coordinate index), with header.
std::string to_csv(const CoeffMatrix& m);

}  // namespace su3

#endif
