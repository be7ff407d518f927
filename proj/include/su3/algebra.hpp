#ifndef SU3_ALGEBRA_HPP
#define SU3_ALGEBRA_HPP

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace su3 {

using Complex = std::complex<double>;
using Mat3 = Eigen::Matrix3cd;
using Vec3 = Eigen::Vector3cd;
using Mat8 = Eigen::Matrix<double, 8, 8>;

/// Real components in the Gell-Mann basis; storage index 0 holds the λ1 coefficient.
using AlgebraVector = Eigen::Matrix<double, 8, 1>;

inline constexpr double kSqrt3 = 1.7320508075688772935;
inline constexpr double kPi = 3.14159265358979323846;

/// The eight Gell-Mann matrices. Generator indices are 1-based (λ1..λ8)
/// wherever an API takes a generator label.
const Mat3& gell_mann(int k);

/// Totally antisymmetric structure constants, [λi, λj] = i C_kij λk (1-based).
double structure_c(int i, int j, int k);

/// Totally symmetric tensor, {λi, λj} = (4/3) δij + 2 d_ijk λk (1-based).
double symmetric_d(int i, int j, int k);

/// Max entrywise residuals of the commutator and anticommutator identities,
/// indexed [i-1][j-1].
struct TableResiduals {
  Mat8 commutator;
  Mat8 anticommutator;

  double max_commutator() const { return commutator.maxCoeff(); }
  double max_anticommutator() const { return anticommutator.maxCoeff(); }
};

TableResiduals commutator_tensor_check();

/// (a ⋆ b)_i = √3 d_ijk a_j b_k
AlgebraVector star(const AlgebraVector& a, const AlgebraVector& b);

/// Σ_k v_k λ_k
Mat3 reconstruct(const AlgebraVector& v);

struct Expansion {
  AlgebraVector re;
  AlgebraVector im;
};

/// Coefficients of a traceless matrix in the λ basis via Tr(m λk)/2.
/// Throws std::invalid_argument if |Tr m| exceeds trace_tol.
Expansion expand(const Mat3& m, double trace_tol = 1e-12);

}  // namespace su3

#endif
