#include "su3/algebra.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace su3 {

namespace {

struct Basis {
  std::array<Mat3, 8> lambda;

  Basis() {
    const Complex I(0.0, 1.0);
    for (auto& m : lambda) m.setZero();
    lambda[0](0, 1) = lambda[0](1, 0) = 1.0;
    lambda[1](0, 1) = -I;
    lambda[1](1, 0) = I;
    lambda[2](0, 0) = 1.0;
    lambda[2](1, 1) = -1.0;
    lambda[3](0, 2) = lambda[3](2, 0) = 1.0;
    lambda[4](0, 2) = -I;
    lambda[4](2, 0) = I;
    lambda[5](1, 2) = lambda[5](2, 1) = 1.0;
    lambda[6](1, 2) = -I;
    lambda[6](2, 1) = I;
    lambda[7](0, 0) = lambda[7](1, 1) = 1.0 / kSqrt3;
    lambda[7](2, 2) = -2.0 / kSqrt3;
  }
};

// dense 8x8x8, 0-based
struct Tensors {
  std::array<double, 512> c{};
  std::array<double, 512> d{};

  static int at(int i, int j, int k) { return (i * 8 + j) * 8 + k; }

  void set_antisym(int i, int j, int k, double v) {
    --i, --j, --k;
    c[at(i, j, k)] = v;
    c[at(j, k, i)] = v;
    c[at(k, i, j)] = v;
    c[at(j, i, k)] = -v;
    c[at(i, k, j)] = -v;
    c[at(k, j, i)] = -v;
  }

  void set_sym(int i, int j, int k, double v) {
    --i, --j, --k;
    for (auto t : {at(i, j, k), at(j, k, i), at(k, i, j), at(j, i, k), at(i, k, j), at(k, j, i)})
      d[t] = v;
  }

  Tensors() {
    set_antisym(1, 2, 3, 2.0);
    set_antisym(4, 5, 8, kSqrt3);
    set_antisym(6, 7, 8, kSqrt3);
    set_antisym(1, 4, 7, 1.0);
    set_antisym(2, 4, 6, 1.0);
    set_antisym(2, 5, 7, 1.0);
    set_antisym(3, 4, 5, 1.0);
    set_antisym(5, 1, 6, 1.0);
    set_antisym(6, 3, 7, 1.0);

    const double r = 1.0 / kSqrt3;
    set_sym(1, 1, 8, r);
    set_sym(2, 2, 8, r);
    set_sym(3, 3, 8, r);
    set_sym(8, 8, 8, -r);
    const double q = -1.0 / (2.0 * kSqrt3);
    set_sym(4, 4, 8, q);
    set_sym(5, 5, 8, q);
    set_sym(6, 6, 8, q);
    set_sym(7, 7, 8, q);
    set_sym(1, 4, 6, 0.5);
    set_sym(1, 5, 7, 0.5);
    set_sym(2, 4, 7, -0.5);
    set_sym(2, 5, 6, 0.5);
    set_sym(3, 4, 4, 0.5);
    set_sym(3, 5, 5, 0.5);
    set_sym(3, 6, 6, -0.5);
    set_sym(3, 7, 7, -0.5);
  }
};

const Basis& basis() {
  static const Basis b;
  return b;
}

const Tensors& tensors() {
  static const Tensors t;
  return t;
}

void check_label(int k) {
  if (k < 1 || k > 8) throw std::out_of_range("generator index must be in 1..8");
}

}  // namespace

const Mat3& gell_mann(int k) {
  check_label(k);
  return basis().lambda[k - 1];
}

double structure_c(int i, int j, int k) {
  check_label(i), check_label(j), check_label(k);
  return tensors().c[Tensors::at(i - 1, j - 1, k - 1)];
}

double symmetric_d(int i, int j, int k) {
  check_label(i), check_label(j), check_label(k);
  return tensors().d[Tensors::at(i - 1, j - 1, k - 1)];
}

TableResiduals commutator_tensor_check() {
  const Complex I(0.0, 1.0);
  TableResiduals out;
  for (int i = 1; i <= 8; ++i) {
    for (int j = 1; j <= 8; ++j) {
      const Mat3& li = gell_mann(i);
      const Mat3& lj = gell_mann(j);
      Mat3 comm = li * lj - lj * li;
      Mat3 anti = li * lj + lj * li;
      if (i == j) anti -= (4.0 / 3.0) * Mat3::Identity();
      for (int k = 1; k <= 8; ++k) {
        comm -= I * structure_c(k, i, j) * gell_mann(k);
        anti -= 2.0 * symmetric_d(i, j, k) * gell_mann(k);
      }
      out.commutator(i - 1, j - 1) = comm.cwiseAbs().maxCoeff();
      out.anticommutator(i - 1, j - 1) = anti.cwiseAbs().maxCoeff();
    }
  }
  return out;
}

AlgebraVector star(const AlgebraVector& a, const AlgebraVector& b) {
  const auto& d = tensors().d;
  AlgebraVector out = AlgebraVector::Zero();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k) out[i] += d[Tensors::at(i, j, k)] * a[j] * b[k];
  return kSqrt3 * out;
}

Mat3 reconstruct(const AlgebraVector& v) {
  Mat3 m = Mat3::Zero();
  for (int k = 0; k < 8; ++k) m += v[k] * basis().lambda[k];
  return m;
}

Expansion expand(const Mat3& m, double trace_tol) {
  const Complex tr = m.trace();
  if (std::abs(tr) > trace_tol) {
    std::ostringstream msg;
    msg << "expand: matrix is not traceless (|Tr| = " << std::abs(tr) << ", tolerance " << trace_tol
        << ")";
    throw std::invalid_argument(msg.str());
  }
  Expansion e;
  for (int k = 0; k < 8; ++k) {
    const Complex coeff = (m * basis().lambda[k]).trace() / 2.0;
    e.re[k] = coeff.real();
    e.im[k] = coeff.imag();
  }
  return e;
}

}  // namespace su3
