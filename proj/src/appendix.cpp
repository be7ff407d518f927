#include "su3/appendix.hpp"

#include <cmath>
#include <random>

namespace su3 {

namespace {

const Complex I(0.0, 1.0);

// 1-based row (λ/ω index) and column (∂/dx index)
void put(OperatorMatrix& m, int row, int col, Complex v) { m(row - 1, col - 1) += v; }

void add_row(OperatorMatrix& m, int row, Complex scale, int src) {
  m.row(row - 1) += scale * m.row(src - 1);
}

OperatorMatrix left_fields_literal(const EulerAngles& p) {
  const double al = p.alpha, be = p.beta, ga = p.gamma, th = p.theta, a = p.a, b = p.b;
  const double cot2be = 1.0 / std::tan(2 * be), cot2b = 1.0 / std::tan(2 * b);
  const double cotth = 1.0 / std::tan(th), tanth = std::tan(th);
  const double sb = std::sin(be), cb = std::cos(be), s2b = std::sin(2 * be);
  const double sth = std::sin(th), s2th = std::sin(2 * th), s2bb = std::sin(2 * b);
  const double k = (2 - sth * sth) / s2th;
  OperatorMatrix m = OperatorMatrix::Zero();

  put(m, 1, 1, I * std::cos(2 * al) * cot2be);
  put(m, 1, 2, I * std::sin(2 * al));
  put(m, 1, 3, -I * std::cos(2 * al) / s2b);

  put(m, 2, 1, -I * std::sin(2 * al) * cot2be);
  put(m, 2, 2, I * std::cos(2 * al));
  put(m, 2, 3, I * std::sin(2 * al) / s2b);

  put(m, 3, 1, I);

  put(m, 8, 3, I * kSqrt3);
  put(m, 8, 5, -I * kSqrt3);
  put(m, 8, 8, I);

  const double sp = std::sin(al + ga), cp = std::cos(al + ga);
  const double sm = std::sin(al - ga), cm = std::cos(al - ga);
  const double s45 = std::sin(al - ga - 2 * a), c45 = std::cos(al - ga - 2 * a);
  const double s67 = std::sin(al + ga + 2 * a), c67 = std::cos(al + ga + 2 * a);

  put(m, 4, 1, I * sb / s2b * cotth * cp);
  put(m, 4, 2, -I * sb * cotth * sp);
  put(m, 4, 3, -I * cot2be * sb * cotth * cp);
  put(m, 4, 3, I * k * cb * cp);
  put(m, 4, 4, I * cb * sp);
  put(m, 4, 5, -I * 2.0 * cb / s2th * cp);
  put(m, 4, 5, -I * cot2b / sth * sb * c45);
  put(m, 4, 6, I * sb / sth * s45);
  put(m, 4, 7, I * sb / (sth * s2bb) * c45);
  add_row(m, 4, -kSqrt3 / 2.0 * tanth * cb * cp, 8);

  put(m, 5, 1, -I * sb / s2b * cotth * sp);
  put(m, 5, 2, -I * sb * cotth * cp);
  put(m, 5, 3, I * cot2be * sb * cotth * sp);
  put(m, 5, 3, -I * k * cb * sp);
  put(m, 5, 4, I * cb * cp);
  put(m, 5, 5, I * 2.0 * cb / s2th * sp);
  put(m, 5, 5, I * cot2b / sth * sb * s45);
  put(m, 5, 6, I * sb / sth * c45);
  put(m, 5, 7, -I * sb / (sth * s2bb) * s45);
  add_row(m, 5, kSqrt3 / 2.0 * tanth * cb * sp, 8);

  put(m, 6, 1, I * cb / s2b * cotth * cm);
  put(m, 6, 2, I * cb * cotth * sm);
  put(m, 6, 3, -I * cot2be * cb * cotth * cm);
  put(m, 6, 3, -I * k * sb * cm);
  put(m, 6, 4, I * sb * sm);
  put(m, 6, 5, I * 2.0 * sb / s2th * cm);
  put(m, 6, 5, -I * cot2b / sth * cb * c67);
  put(m, 6, 6, -I * cb / sth * s67);
  put(m, 6, 7, I * cb / (sth * s2bb) * c67);
  add_row(m, 6, kSqrt3 / 2.0 * tanth * sb * cm, 8);

  put(m, 7, 1, I * cb / s2b * cotth * sm);
  put(m, 7, 2, -I * cb * cotth * cm);
  put(m, 7, 3, -I * cot2be * cb * cotth * sm);
  put(m, 7, 3, -I * k * sb * sm);
  put(m, 7, 4, -I * sb * cm);
  put(m, 7, 5, I * 2.0 * sb / s2th * sm);
  put(m, 7, 5, -I * cot2b / sth * cb * s67);
  put(m, 7, 6, I * cb / sth * c67);
  put(m, 7, 7, I * cb / (sth * s2bb) * s67);
  add_row(m, 7, kSqrt3 / 2.0 * tanth * sb * sm, 8);
  return m;
}

OperatorMatrix right_fields_literal(const EulerAngles& p) {
  const double be = p.beta, ga = p.gamma, th = p.theta, a = p.a, b = p.b, c = p.c;
  const double eta = p.eta();
  const double cot2be = 1.0 / std::tan(2 * be), cot2b = 1.0 / std::tan(2 * b);
  const double cotth = 1.0 / std::tan(th), tanth = std::tan(th);
  const double sb = std::sin(b), cb = std::cos(b), s2b = std::sin(2 * b);
  const double sth = std::sin(th), s2th = std::sin(2 * th), s2be = std::sin(2 * be);
  const double k = (2 - sth * sth) / s2th;
  OperatorMatrix m = OperatorMatrix::Zero();

  put(m, 1, 7, -I * std::cos(2 * c) * cot2b);
  put(m, 1, 6, -I * std::sin(2 * c));
  put(m, 1, 5, I * std::cos(2 * c) / s2b);

  put(m, 2, 7, -I * std::sin(2 * c) * cot2b);
  put(m, 2, 6, I * std::cos(2 * c));
  put(m, 2, 5, I * std::sin(2 * c) / s2b);

  put(m, 3, 7, I);
  put(m, 8, 8, I);

  const double X = c + a + 3 * eta, Y = c - a - 2 * ga + 3 * eta;
  const double U = c - a - 3 * eta, V = c + a + 2 * ga - 3 * eta;

  put(m, 4, 7, -I * sb / s2b * cotth * std::cos(X));
  put(m, 4, 6, I * sb * cotth * std::sin(X));
  put(m, 4, 5, I * cot2b * sb * cotth * std::cos(X));
  put(m, 4, 5, -I * k * cb * std::cos(X));
  put(m, 4, 4, -I * cb * std::sin(X));
  put(m, 4, 3, I * 2.0 * cb / s2th * std::cos(X));
  put(m, 4, 3, I * cot2be / sth * sb * std::cos(Y));
  put(m, 4, 2, -I * sb / sth * std::sin(Y));
  put(m, 4, 1, -I * sb / (sth * s2be) * std::cos(Y));
  add_row(m, 4, -kSqrt3 / 2.0 * tanth * cb * std::cos(X), 8);

  put(m, 5, 7, -I * sb / s2b * cotth * std::sin(X));
  put(m, 5, 6, -I * sb * cotth * std::cos(X));
  put(m, 5, 5, I * cot2b * sb * cotth * std::sin(X));
  put(m, 5, 5, -I * k * cb * std::sin(X));
  put(m, 5, 4, I * cb * std::cos(X));
  put(m, 5, 3, I * 2.0 * cb / s2th * std::sin(X));
  put(m, 5, 3, I * cot2be / sth * sb * std::sin(Y));
  put(m, 5, 2, I * sb / sth * std::cos(Y));
  put(m, 5, 1, -I * sb / (sth * s2be) * std::sin(Y));
  add_row(m, 5, -kSqrt3 / 2.0 * tanth * cb * std::sin(X), 8);

  put(m, 6, 7, I * cb / s2b * cotth * std::cos(U));
  put(m, 6, 6, I * cb * cotth * std::sin(U));
  put(m, 6, 5, -I * cot2b * cb * cotth * std::cos(U));
  put(m, 6, 5, -k * sb * std::cos(U));  // printed without the factor i
  put(m, 6, 4, I * sb * std::sin(U));
  put(m, 6, 3, I * 2.0 * sb / s2th * std::cos(U));
  put(m, 6, 3, -I * cot2be / sth * cb * std::cos(V));
  put(m, 6, 2, -I * cb / sth * std::sin(V));
  put(m, 6, 1, I * cb / (sth * s2be) * std::cos(V));
  add_row(m, 6, -kSqrt3 / 2.0 * tanth * sb * std::cos(U), 8);

  put(m, 7, 7, -I * cb / s2b * cotth * std::sin(U));
  put(m, 7, 6, I * cb * cotth * std::cos(U));
  put(m, 7, 5, I * cot2b * cb * cotth * std::sin(U));
  put(m, 7, 5, I * k * sb * std::sin(U));
  put(m, 7, 4, I * sb * std::cos(U));
  put(m, 7, 3, -I * 2.0 * sb / s2th * std::sin(U));
  put(m, 7, 3, I * cot2be / sth * cb * std::sin(V));
  put(m, 7, 2, -I * cb / sth * std::cos(V));
  put(m, 7, 1, -I * cb / (sth * s2be) * std::sin(V));
  add_row(m, 7, kSqrt3 / 2.0 * tanth * sb * std::sin(U), 8);
  return m;
}

OperatorMatrix left_forms_literal(const EulerAngles& p) {
  const double al = p.alpha, be = p.beta, ga = p.gamma, th = p.theta, a = p.a, b = p.b;
  const double s2al = std::sin(2 * al), c2al = std::cos(2 * al);
  const double s2be = std::sin(2 * be), c2be = std::cos(2 * be);
  const double sb = std::sin(be), cb = std::cos(be);
  const double s2b = std::sin(2 * b), c2b = std::cos(2 * b);
  const double sth = std::sin(th), cth = std::cos(th), s2th = std::sin(2 * th);
  const double h = 1.0 - 0.5 * sth * sth;
  const double sS = std::sin(2 * a + 2 * ga), cS = std::cos(2 * a + 2 * ga);
  const double sp = std::sin(al + ga), cp = std::cos(al + ga);
  const double sm = std::sin(al - ga), cm = std::cos(al - ga);
  const double s4 = std::sin(2 * a - al + ga), c4 = std::cos(2 * a - al + ga);
  const double s6 = std::sin(2 * a + al + ga), c6 = std::cos(2 * a + al + ga);
  enum { da = 1, db, dg, dth, dA, dB, dC, dphi };
  OperatorMatrix m = OperatorMatrix::Zero();

  put(m, 1, db, -I * s2al);
  put(m, 1, dg, I * c2al * s2be);
  put(m, 1, dA, I * c2al * s2be * h);
  put(m, 1, dB, -I * cS * cth * s2al);
  put(m, 1, dB, -I * c2al * c2be * cth * sS);
  put(m, 1, dC, I * c2al * c2be * cS * cth * s2b);
  put(m, 1, dC, -I * cth * s2al * s2b * sS);
  put(m, 1, dC, I * c2al * c2b * s2be * h);
  put(m, 1, dphi, -I * kSqrt3 / 2.0 * c2al * s2be * sth * sth);

  put(m, 2, db, -I * c2al);
  put(m, 2, dg, -I * s2al * s2be);
  put(m, 2, dA, -I * s2al * s2be * h);
  put(m, 2, dB, -I * c2al * cS * cth);
  put(m, 2, dB, I * c2be * cth * s2al * sS);
  put(m, 2, dC, -I * c2be * cS * cth * s2al * s2b);
  put(m, 2, dC, -I * c2al * cth * s2b * sS);
  put(m, 2, dC, -I * c2b * s2al * s2be * h);
  put(m, 2, dphi, I * kSqrt3 / 2.0 * s2al * s2be * sth * sth);

  put(m, 3, da, -I);
  put(m, 3, dg, -I * c2be);
  put(m, 3, dA, -I * c2be * h);
  put(m, 3, dB, -I * cth * s2be * sS);
  put(m, 3, dC, I * cS * cth * s2b * s2be);
  put(m, 3, dC, -I * c2b * c2be * h);
  put(m, 3, dphi, I * kSqrt3 / 2.0 * c2be * 0.5 * sth * sth);

  put(m, 4, dth, -I * cb * sp);
  put(m, 4, dA, I * 0.5 * cb * cp * s2th);
  put(m, 4, dB, I * sb * s4 * sth);
  put(m, 4, dC, -I * c4 * s2b * sb * sth);
  put(m, 4, dC, I * 0.5 * c2b * cb * cp * s2th);
  put(m, 4, dphi, I * kSqrt3 / 2.0 * cb * cp * s2th);

  put(m, 5, dth, -I * cb * cp);
  put(m, 5, dA, -I * 0.5 * cb * sp * s2th);
  put(m, 5, dB, -I * c4 * sb * sth);
  put(m, 5, dC, -I * s2b * sb * s4 * sth);
  put(m, 5, dC, -I * 0.5 * c2b * cb * sp * s2th);
  put(m, 5, dphi, -I * kSqrt3 / 2.0 * cb * sp * s2th);

  put(m, 6, dth, -I * sb * sm);
  put(m, 6, dB, I * cb * s6 * sth);
  put(m, 6, dA, -I * 0.5 * cm * sb * s2th);
  put(m, 6, dphi, -I * kSqrt3 / 2.0 * cm * sb * s2th);
  put(m, 6, dC, -I * cb * c6 * s2b * sth);
  put(m, 6, dC, -I * 0.5 * c2b * cm * sb * s2th);

  put(m, 7, dth, I * cm * sb);
  put(m, 7, dA, -I * 0.5 * sb * sm * s2th);
  put(m, 7, dB, -I * cb * c6 * sth);
  put(m, 7, dC, -I * cb * s2b * s6 * sth);
  put(m, 7, dC, -I * 0.5 * c2b * sb * sm * s2th);
  put(m, 7, dphi, -I * kSqrt3 / 2.0 * sb * sm * s2th);

  put(m, 8, dA, I * kSqrt3 / 2.0 * sth * sth);
  put(m, 8, dC, I * kSqrt3 / 2.0 * c2b * sth * sth);
  put(m, 8, dphi, -I * (1.0 - 1.5 * sth * sth));
  return m;
}

OperatorMatrix right_forms_literal(const EulerAngles& p) {
  const double be = p.beta, ga = p.gamma, th = p.theta, a = p.a, b = p.b, c = p.c;
  const double eta = p.eta();
  const double s2be = std::sin(2 * be), c2be = std::cos(2 * be);
  const double sb = std::sin(b), cb = std::cos(b), s2b = std::sin(2 * b), c2b = std::cos(2 * b);
  const double s2c = std::sin(2 * c), c2c = std::cos(2 * c);
  const double sth = std::sin(th), cth = std::cos(th), s2th = std::sin(2 * th);
  const double h = 1.0 - 0.5 * sth * sth;
  const double sS = std::sin(2 * a + 2 * ga), cS = std::cos(2 * a + 2 * ga);
  const double P = a - c + 2 * ga - 3 * eta, Q = a + c + 3 * eta;
  const double P2 = a + c + 2 * ga - 3 * eta, Q2 = a - c + 3 * eta;
  enum { da = 1, db, dg, dth, dA, dB, dC, dphi };
  OperatorMatrix m = OperatorMatrix::Zero();

  put(m, 1, da, I * c2b * c2c * cS * cth * s2be);
  put(m, 1, da, -I * cth * s2be * s2c * sS);
  put(m, 1, da, I * c2be * c2c * s2b * h);
  put(m, 1, db, I * c2c * s2b * h);
  put(m, 1, dg, -I * cS * cth * s2c);
  put(m, 1, dg, -I * c2b * c2c * cth * sS);
  put(m, 1, dth, I * c2c * s2b * h);
  put(m, 1, dB, -I * s2c);

  put(m, 2, da, -I * c2b * cS * cth * s2be * s2c);
  put(m, 2, da, -I * c2c * cth * s2be * sS);
  put(m, 2, da, -I * c2be * s2b * s2c * h);
  put(m, 2, db, -I * s2b * s2c * h);
  put(m, 2, dg, -I * (c2c * cS * cth - c2b * cth * s2c * sS));
  put(m, 2, dth, -I * s2b * s2c * h);
  put(m, 2, dB, c2c);  // printed without the factor i

  put(m, 3, da, I * cS * cth * s2b * s2be);
  put(m, 3, da, -I * c2b * c2be * h);
  put(m, 3, db, -I * c2b * h);
  put(m, 3, dg, -I * cth * s2b * sS);
  put(m, 3, dth, -I * c2b * h);
  put(m, 3, dC, 1.0);  // printed without the factor i

  put(m, 4, da, -I * std::cos(P) * sb * s2be * sth);
  put(m, 4, da, I * 0.5 * cb * c2be * std::cos(Q) * s2th);
  put(m, 4, db, I * 0.5 * cb * std::cos(Q) * s2th);
  put(m, 4, dg, I * sb * sth * std::sin(P));
  put(m, 4, dth, I * 0.5 * cb * std::cos(Q) * s2th);
  put(m, 4, dA, -cb * std::sin(Q));  // printed without the factor i

  put(m, 5, da, -I * sb * s2be * sth * std::sin(P));
  put(m, 5, da, -I * 0.5 * cb * c2be * s2th * std::sin(Q));
  put(m, 5, db, -I * 0.5 * cb * s2th * std::sin(Q));
  put(m, 5, dg, -I * std::cos(P) * sb * sth);
  put(m, 5, dth, -I * 0.5 * cb * s2th * std::sin(Q));
  put(m, 5, dA, -I * cb * std::cos(Q));

  put(m, 6, da, -I * cb * std::cos(P2) * s2be * sth);
  put(m, 6, da, -I * 0.5 * c2be * std::cos(Q2) * sb * s2th);
  put(m, 6, db, -I * 0.5 * std::cos(Q2) * sb * s2th);
  put(m, 6, dg, -I * cb * sth * std::sin(P2));
  put(m, 6, dth, -I * 0.5 * std::cos(Q2) * sb * s2th);
  put(m, 6, dA, I * sb * std::sin(Q2));

  put(m, 7, da, -I * cb * s2be * sth * std::sin(P2));
  put(m, 7, da, I * 0.5 * c2be * sb * s2th * std::sin(Q2));
  put(m, 7, db, I * 0.5 * sb * s2th * std::sin(Q2));
  put(m, 7, dg, I * cb * std::cos(P2) * sth);
  put(m, 7, dth, I * 0.5 * sb * s2th * std::sin(Q2));
  put(m, 7, dA, I * std::cos(Q2) * sb);

  put(m, 8, da, I * kSqrt3 / 2.0 * c2be * sth * sth);
  put(m, 8, db, I * kSqrt3 / 2.0 * sth * sth);
  put(m, 8, dth, I * kSqrt3 / 2.0 * sth * sth);
  put(m, 8, dphi, -I);
  return m;
}

AlgebraVector dgamma_literal(const EulerAngles& p) {
  AlgebraVector v = AlgebraVector::Zero();
  v[0] = std::cos(2 * p.alpha) * std::sin(2 * p.beta);
  v[1] = std::sin(2 * p.alpha) * std::sin(p.beta);
  v[2] = std::cos(2 * p.beta);
  return v;
}

}  // namespace

AppendixTables appendix_tables(const EulerAngles& p) {
  return {left_fields_literal(p), right_fields_literal(p), left_forms_literal(p),
          right_forms_literal(p), dgamma_literal(p)};
}

AppendixTables exact_tables(const EulerAngles& p) {
  const FrameAtPoint fr = frame_at(p, 0.0);
  AppendixTables t;
  t.left_fields = I * fr.a_left.m.cast<Complex>();
  t.right_fields = I * fr.a_right.m.cast<Complex>();
  t.left_forms = -I * fr.b_left.m.cast<Complex>();
  t.right_forms = -I * fr.b_right.m.cast<Complex>();
  t.dgamma_example = fr.b_left.m.col(Gamma);
  return t;
}

std::string Discrepancy::key() const {
  return table + "[" + std::to_string(row) + "][" + std::to_string(col) + "]";
}

std::vector<std::string> AuditReport::keys() const {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.key());
  return out;
}

AuditReport audit_appendix(std::span<const EulerAngles> points, double tol) {
  // worst deviation per (table, row, col)
  std::array<Mat8, 5> worst;
  for (auto& w : worst) w.setZero();
  for (const auto& p : points) {
    const AppendixTables lit = appendix_tables(p);
    const AppendixTables ex = exact_tables(p);
    const std::array<const OperatorMatrix*, 4> l = {&lit.left_fields, &lit.right_fields,
                                                    &lit.left_forms, &lit.right_forms};
    const std::array<const OperatorMatrix*, 4> e = {&ex.left_fields, &ex.right_fields,
                                                    &ex.left_forms, &ex.right_forms};
    for (int t = 0; t < 4; ++t)
      worst[t] = worst[t].cwiseMax((*l[t] - *e[t]).cwiseAbs());
    worst[4].col(0) = worst[4].col(0).cwiseMax((lit.dgamma_example - ex.dgamma_example).cwiseAbs());
  }

  AuditReport rep;
  rep.tol = tol;
  rep.points = static_cast<int>(points.size());
  for (int t = 0; t < 5; ++t) {
    const int ncols = t == 4 ? 1 : 8;
    const int nrows = t == 4 ? 3 : 8;  // the worked example only covers λ1..λ3
    for (int i = 0; i < nrows; ++i) {
      bool row_ok = true;
      for (int j = 0; j < ncols; ++j) {
        const double dev = worst[t](i, j);
        if (!(dev <= tol)) {
          row_ok = false;
          rep.entries.push_back({kAppendixTableNames[t], i + 1, t == 4 ? Gamma + 1 : j + 1, dev});
        }
      }
      if (row_ok) ++rep.agreeing_rows[t];
    }
  }
  return rep;
}

ClosedForms appendix_closed_forms(const EulerAngles& p, double tol) {
  require_regular(p, 1e-9);
  const EulerAngles pts[1] = {p};
  return {appendix_tables(p), audit_appendix(pts, tol)};
}

std::vector<EulerAngles> audit_points(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> cyc(0.0, 2 * kPi);
  std::uniform_real_distribution<double> half(0.15, kPi / 2 - 0.15);
  std::vector<EulerAngles> pts;
  pts.reserve(count);
  for (int n = 0; n < count; ++n) {
    EulerAngles x;
    x.alpha = cyc(rng);
    x.beta = half(rng);
    x.gamma = cyc(rng);
    x.theta = half(rng);
    x.a = cyc(rng);
    x.b = half(rng);
    x.c = cyc(rng);
    x.phi = kSqrt3 * cyc(rng);
    pts.push_back(x);
  }
  return pts;
}

}  // namespace su3
