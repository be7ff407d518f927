#include "su3/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "su3/measure.hpp"
#include "su3/phase.hpp"
#include "su3/states.hpp"

namespace su3 {

namespace {

using Vec8 = Eigen::Matrix<double, 8, 1>;

EulerAngles shifted(const EulerAngles& p, const Vec8& dir, double h) {
  EulerAngles q = p;
  for (int k = 0; k < 8; ++k) q[k] += h * dir[k];
  return q;
}

Mat8 fields_at(const EulerAngles& p, Handedness hand) {
  return (hand == Handedness::Left ? left_fields(p, 0.0) : right_fields(p, 0.0)).m;
}

// Derivative of the field matrix of handedness `of` along row i of the field
// matrix of handedness `along`.
Mat8 field_jet(const EulerAngles& p, Handedness along, int i, Handedness of, double h) {
  const Vec8 dir = fields_at(p, along).row(i).transpose();
  return (fields_at(shifted(p, dir, h), of) - fields_at(shifted(p, dir, -h), of)) / (2 * h);
}

}  // namespace

Mat3 directional_derivative(const EulerAngles& p, const Vec8& dir, double h) {
  return (compose(shifted(p, dir, h)).matrix() - compose(shifted(p, dir, -h)).matrix()) / (2 * h);
}

double defining_relation_residual(const EulerAngles& p, Handedness hand, double h) {
  const Mat8 x = fields_at(p, hand);
  const Mat3 d = compose(p).matrix();
  const Complex I(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 8; ++i) {
    const Mat3 lhs = directional_derivative(p, x.row(i).transpose(), h);
    const Mat3 rhs = hand == Handedness::Left ? Mat3(I * gell_mann(i + 1) * d)
                                              : Mat3(I * d * gell_mann(i + 1));
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

Vec8 field_bracket(const EulerAngles& p, Handedness hi, int i, Handedness hj, int j, double h) {
  // [X_i, X_j] = (X_i·∇) X_j - (X_j·∇) X_i
  const Vec8 dj = field_jet(p, hi, i, hj, h).row(j).transpose();
  const Vec8 di = field_jet(p, hj, j, hi, h).row(i).transpose();
  return dj - di;
}

ClosureResiduals closure_residuals(const EulerAngles& p, double h) {
  const Handedness L = Handedness::Left, R = Handedness::Right;
  const Mat8 xl = fields_at(p, L), xr = fields_at(p, R);
  // jets[along][i][of]
  std::array<std::array<std::array<Mat8, 2>, 8>, 2> jets;
  for (int along = 0; along < 2; ++along)
    for (int i = 0; i < 8; ++i)
      for (int of = 0; of < 2; ++of)
        jets[along][i][of] = field_jet(p, along ? R : L, i, of ? R : L, h);

  ClosureResiduals out;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const Vec8 ll = jets[0][i][0].row(j).transpose() - jets[0][j][0].row(i).transpose();
      const Vec8 rr = jets[1][i][1].row(j).transpose() - jets[1][j][1].row(i).transpose();
      const Vec8 lr = jets[0][i][1].row(j).transpose() - jets[1][j][0].row(i).transpose();
      Vec8 cl = Vec8::Zero(), cr = Vec8::Zero();
      for (int k = 0; k < 8; ++k) {
        const double c = structure_c(k + 1, i + 1, j + 1);
        cl += c * xl.row(k).transpose();
        cr += c * xr.row(k).transpose();
      }
      out.left = std::max(out.left, (ll - cl).cwiseAbs().maxCoeff());
      out.right = std::max(out.right, (rr + cr).cwiseAbs().maxCoeff());
      out.mixed = std::max(out.mixed, lr.cwiseAbs().maxCoeff());
    }
  return out;
}

std::vector<EulerAngles> interior_points(std::uint64_t seed, int count, double margin) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  // restrict the Haar inverse CDFs to the interior band
  auto band = [&](auto cdf, auto inv) {
    const double lo = cdf(margin), hi = cdf(kPi / 2 - margin);
    return inv(lo + (hi - lo) * u01(rng));
  };
  auto sin2 = [](double x) { return std::sin(x) * std::sin(x); };
  auto asin_sqrt = [](double u) { return std::asin(std::sqrt(u)); };
  auto sin4 = [](double x) { return std::pow(std::sin(x), 4); };
  auto asin_qrt = [](double u) { return std::asin(std::sqrt(std::sqrt(u))); };
  std::vector<EulerAngles> out;
  out.reserve(count);
  for (int n = 0; n < count; ++n) {
    EulerAngles x;
    x.alpha = kPi * u01(rng);
    x.beta = band(sin2, asin_sqrt);
    x.gamma = 2 * kPi * u01(rng);
    x.theta = band(sin4, asin_qrt);
    x.a = kPi * u01(rng);
    x.b = band(sin2, asin_sqrt);
    x.c = 2 * kPi * u01(rng);
    x.phi = kSqrt3 * kPi * u01(rng);
    out.push_back(x);
  }
  return out;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json j;
  j["passed"] = passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e = {{"name", c.name}, {"residual", c.residual}, {"threshold", c.threshold},
                        {"pass", c.pass}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    j["checks"].push_back(e);
  }
  nlohmann::json cat = nlohmann::json::array();
  for (const auto& d : appendix.entries)
    cat.push_back({{"table", d.table}, {"row", d.row}, {"col", d.col}, {"max_deviation", d.max_deviation}});
  nlohmann::json rows = nlohmann::json::object();
  for (int t = 0; t < 5; ++t) rows[kAppendixTableNames[t]] = appendix.agreeing_rows[t];
  j["appendix_audit"] = {{"tolerance", appendix.tol},
                         {"points", appendix.points},
                         {"agreeing_rows", rows},
                         {"discrepancies", cat}};
  return j;
}

VerifyReport run_verification(const VerifyOptions& opt) {
  const bool full = opt.level == VerifyLevel::Full;
  const double h = opt.fd_step;
  VerifyReport rep;
  auto record = [&](std::string name, double residual, double threshold, std::string detail = {}) {
    rep.checks.push_back({std::move(name), residual, threshold, residual <= threshold, std::move(detail)});
  };
  std::mt19937_64 rng(opt.seed);

  {
    const auto t = commutator_tensor_check();
    record("algebra.commutator_table", t.max_commutator(), 1e-14);
    record("algebra.anticommutator_table", t.max_anticommutator(), 1e-14);
    std::normal_distribution<double> g;
    double worst = 0;
    for (int n = 0; n < 100; ++n) {
      AlgebraVector c;
      for (auto& v : c) v = g(rng);
      const auto e = expand(reconstruct(c));
      worst = std::max({worst, (e.re - c).cwiseAbs().maxCoeff(), e.im.cwiseAbs().maxCoeff()});
    }
    record("algebra.expand_left_inverse", worst, 1e-13);
  }

  {
    const int n = full ? 1000 : 200;
    double worst_unit = 0, worst_trip = 0;
    for (int k = 0; k < n; ++k) {
      const GroupElement g = random_su3(rng);
      const auto d = decompose(g);
      worst_trip = std::max(worst_trip, (compose(d.angles).matrix() - g.matrix()).cwiseAbs().maxCoeff());
      const auto x = haar_angles_from_uniforms(
          {std::generate_canonical<double, 53>(rng), std::generate_canonical<double, 53>(rng),
           std::generate_canonical<double, 53>(rng), std::generate_canonical<double, 53>(rng),
           std::generate_canonical<double, 53>(rng), std::generate_canonical<double, 53>(rng),
           std::generate_canonical<double, 53>(rng), std::generate_canonical<double, 53>(rng)},
          RangeConvention::Covering);
      const Mat3 u = compose(x).matrix();
      worst_unit = std::max({worst_unit, unitarity_residual(u), determinant_residual(u)});
    }
    record("group.compose_unitarity", worst_unit, opt.tol);
    record("group.round_trip", worst_trip, 1e-10, std::to_string(n) + " Haar-random matrices");
    double hom = 0, orth = 0;
    for (int k = 0; k < 100; ++k) {
      const GroupElement g = random_su3(rng), f = random_su3(rng);
      const Mat8 rg = adjoint(g);
      // g λ_i g† = R(i,j) λ_j composes in reverse order
      hom = std::max(hom, (adjoint(g * f) - adjoint(f) * rg).cwiseAbs().maxCoeff());
      orth = std::max(orth, (rg * rg.transpose() - Mat8::Identity()).cwiseAbs().maxCoeff());
    }
    record("group.adjoint_homomorphism", hom, 1e-11);
    record("group.adjoint_orthogonal", orth, opt.tol);
  }

  {
    const auto pts = interior_points(opt.seed ^ 0x5eedULL, full ? 100 : 20);
    double left = 0, right = 0, rl = 0, dual = 0;
    for (const auto& p : pts) {
      left = std::max(left, defining_relation_residual(p, Handedness::Left, h));
      right = std::max(right, defining_relation_residual(p, Handedness::Right, h));
      const auto fr = frame_at(p);
      const Mat8 r = adjoint(compose(p));
      rl = std::max(rl, (fr.a_right.m - r * fr.a_left.m).cwiseAbs().maxCoeff());
      dual = std::max(dual, (duality_pairing(fr.b_left, fr.a_left) - Mat8::Identity()).cwiseAbs().maxCoeff());
      dual = std::max(dual, (duality_pairing(fr.b_right, fr.a_right) - Mat8::Identity()).cwiseAbs().maxCoeff());
    }
    record("cartan.left_defining_relation", left, 1e-7);
    record("cartan.right_defining_relation", right, 1e-7);
    record("cartan.right_fields_equal_R_left", rl, 1e-10);
    record("cartan.duality", dual, 1e-11);

    ClosureResiduals worst;
    const int nclose = full ? 20 : 3;
    for (int k = 0; k < nclose; ++k) {
      const auto c = closure_residuals(pts[k], h);
      worst.left = std::max(worst.left, c.left);
      worst.right = std::max(worst.right, c.right);
      worst.mixed = std::max(worst.mixed, c.mixed);
    }
    record("cartan.left_closure", worst.left, 1e-5);
    record("cartan.right_closure", worst.right, 1e-5);
    record("cartan.left_right_commute", worst.mixed, 1e-5);
  }

  {
    const auto pts = interior_points(opt.seed ^ 0xdeadULL, full ? 1000 : 200, 0.02);
    double lo = INFINITY, hi = -INFINITY, lr = 0;
    for (const auto& p : pts) {
      const double dl = std::abs(left_coeffs(p).m.determinant());
      const double dr = std::abs(right_coeffs(p).m.determinant());
      const double ratio = dl / haar_density_formula(p);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      lr = std::max(lr, std::abs(dl - dr) / dl);
    }
    record("cartan.density_ratio_spread", (hi - lo) / hi, 1e-9);
    record("cartan.left_right_density", lr, 1e-11);
    EulerAngles q;
    q.beta = q.b = q.theta = kPi / 4;
    record("cartan.density_spot_value", std::abs(haar_density(q) - 0.5), 1e-12);
  }

  {
    const auto vol = volume_monte_carlo(full ? 1000000 : 100000, opt.seed);
    const double target = total_volume(RangeConvention::Standard);
    record("measure.volume_mc_sigma", std::abs(vol.estimate - target) / vol.std_error, 3.0,
           "estimate " + std::to_string(vol.estimate) + " vs " + std::to_string(target));
    const auto orth = orthogonality_suite(full ? 100000 : 20000, opt.seed);
    record("measure.schur_orthogonality_sigma", orth.max_sigma_ratio(), 4.0,
           "max over 81 entries of |residual| / std_error");
  }

  {
    const int n = full ? 500 : 100;
    double alg = 0, adj = 0, stab = 0;
    std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
    for (int k = 0; k < n; ++k) {
      const GroupElement g = random_su3(rng);
      const auto s = project(g);
      alg = std::max(alg, check_state(s).max_algebraic());
      adj = std::max(adj, (n_from_adjoint(g) - s.n).cwiseAbs().maxCoeff());
      auto x = decompose(g).angles;
      const Mat3 rho = project(compose(x)).rho;
      x.a = ang(rng), x.b = ang(rng), x.c = ang(rng), x.phi = ang(rng);
      stab = std::max(stab, (project(compose(x)).rho - rho).cwiseAbs().maxCoeff());
    }
    record("states.pure_state_constraints", alg, 1e-11);
    record("states.n_adjoint_vs_expand", adj, opt.tol);
    record("states.stabilizer_invariance", stab, opt.tol);
  }

  {
    const int samples = full ? 10000 : 2000;
    LoopSpec circle;
    EulerAngles p0;
    p0.theta = kPi / 4;
    EulerAngles p1 = p0;
    p1.gamma = 2 * kPi;
    circle.waypoints = {p0, p1};
    circle.samples_per_segment = samples;
    record("phase.gamma_circle_connection", std::abs(phase_connection(circle) - kPi), 1e-6);
    record("phase.gamma_circle_pancharatnam", std::abs(phase_pancharatnam(circle) - kPi),
           full ? 1e-4 : 1e-3);

    double stokes = 0;
    for (const auto& [u0, u1, v0, v1, beta] :
         {std::array{0.0, kPi / 4, 0.0, 2 * kPi, 0.0}, std::array{0.2, 1.1, 0.5, 2.0, 0.3},
          std::array{0.4, kPi / 2, -1.0, 1.5, 0.7}, std::array{1.2, 0.1, 3.0, 0.2, 1.3}}) {
      RectangleSurface rect;
      rect.u0 = u0, rect.u1 = u1, rect.v0 = v0, rect.v1 = v1;
      rect.base.beta = beta;
      rect.samples_u = 4000;
      rect.samples_v = 4;
      stokes = std::max(stokes, std::abs(phase_curvature(rect) - phase_connection(boundary_loop(rect, 100))));
    }
    record("phase.stokes_theta_gamma", stokes, 1e-6, "four rectangles in (theta, gamma)");

    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double worst = 0;
    const int nloops = full ? 20 : 3;
    for (int k = 0; k < nloops; ++k) {
      LoopSpec loop;
      EulerAngles base = interior_points(opt.seed + 17 * k, 1)[0];
      loop.waypoints.push_back(base);
      for (int w = 0; w < 3; ++w) {
        EulerAngles q = base;
        for (int c : {Alpha, Beta, Gamma, Theta}) q[c] += 0.6 * (u01(rng) - 0.5);
        loop.waypoints.push_back(q);
      }
      loop.waypoints.push_back(base);
      loop.samples_per_segment = samples / 4;
      worst = std::max(worst, std::abs(phase_connection(loop) - phase_pancharatnam(loop)));
    }
    record("phase.connection_vs_pancharatnam", worst, full ? 1e-4 : 1e-3);
  }

  rep.appendix = audit_appendix(audit_points(opt.seed, 16), opt.appendix_tol);
  return rep;
}

}  // namespace su3
