#include "su3/phase.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace su3 {

namespace {

bool whole_periods(double diff, double period) {
  const double n = std::round(diff / period);
  return std::abs(diff - n * period) <= 1e-12 * std::max(1.0, std::abs(diff));
}

EulerAngles lerp(const EulerAngles& p, const EulerAngles& q, double t) {
  EulerAngles x;
  for (int k = 0; k < 8; ++k) x[k] = p[k] + t * (q[k] - p[k]);
  return x;
}

}  // namespace

ConnectionValue connection(const EulerAngles& p) {
  const double s2 = std::sin(p.theta) * std::sin(p.theta);
  ConnectionValue a = ConnectionValue::Zero();
  a[Alpha] = s2 * std::cos(2 * p.beta);
  a[Gamma] = s2;
  a[Phi] = -2.0 / kSqrt3;
  return a;
}

CurvatureValue curvature(const EulerAngles& p) {
  const double s = std::sin(p.theta), s2t = std::sin(2 * p.theta);
  CurvatureValue f = CurvatureValue::Zero();
  f(Theta, Alpha) = s2t * std::cos(2 * p.beta);
  f(Beta, Alpha) = -2.0 * s * s * std::sin(2 * p.beta);
  f(Theta, Gamma) = s2t;
  f(Alpha, Theta) = -f(Theta, Alpha);
  f(Alpha, Beta) = -f(Beta, Alpha);
  f(Gamma, Theta) = -f(Theta, Gamma);
  return f;
}

void LoopSpec::validate() const {
  if (waypoints.size() < 2) throw std::invalid_argument("loop needs at least 2 waypoints");
  if (samples_per_segment < 1) throw std::invalid_argument("samples_per_segment must be >= 1");
  for (const auto& w : waypoints)
    for (int k = 0; k < 8; ++k)
      if (!std::isfinite(w[k])) throw std::invalid_argument("loop waypoint is not finite");
  if (!closed) throw std::invalid_argument("loop is not closed");
  const auto& first = waypoints.front();
  const auto& last = waypoints.back();
  for (int k = 0; k < 8; ++k) {
    const double period = k == Phi ? 2 * kSqrt3 * kPi : 2 * kPi;
    if (!whole_periods(last[k] - first[k], period)) {
      std::ostringstream msg;
      msg << "loop is not closed: " << kCoordNames[k] << " changes by " << last[k] - first[k];
      throw std::invalid_argument(msg.str());
    }
  }
}

std::size_t LoopSpec::total_samples() const {
  return waypoints.empty() ? 0 : (waypoints.size() - 1) * samples_per_segment + 1;
}

std::vector<EulerAngles> LoopSpec::sample_points() const {
  std::vector<EulerAngles> pts;
  pts.reserve(total_samples());
  for (std::size_t s = 0; s + 1 < waypoints.size(); ++s)
    for (int j = 0; j < samples_per_segment; ++j)
      pts.push_back(lerp(waypoints[s], waypoints[s + 1],
                         static_cast<double>(j) / samples_per_segment));
  if (!waypoints.empty()) pts.push_back(waypoints.back());
  return pts;
}

double phase_connection(const LoopSpec& loop, bool include_dphi) {
  loop.validate();
  const int n = loop.samples_per_segment;
  const double h = 1.0 / n;
  double total = 0.0;
  for (std::size_t s = 0; s + 1 < loop.waypoints.size(); ++s) {
    const auto& p = loop.waypoints[s];
    const auto& q = loop.waypoints[s + 1];
    ConnectionValue delta;
    for (int k = 0; k < 8; ++k) delta[k] = q[k] - p[k];
    if (!include_dphi) delta[Phi] = 0.0;
    double seg = 0.0;
    for (int j = 0; j <= n; ++j) {
      const double w = (j == 0 || j == n) ? 0.5 : 1.0;
      seg += w * connection(lerp(p, q, j * h)).dot(delta);
    }
    total += seg * h;
  }
  return total;
}

double pancharatnam_sum(std::span<const StateVector> states, double min_overlap) {
  const std::size_t n = states.size();
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Complex ov = states[k].dot(states[(k + 1) % n]);
    if (std::abs(ov) < min_overlap) {
      std::ostringstream msg;
      msg << "consecutive states " << k << " and " << (k + 1) % n
          << " are (nearly) orthogonal, |overlap| = " << std::abs(ov)
          << "; increase samples_per_segment";
      throw std::domain_error(msg.str());
    }
    total += std::arg(ov);
  }
  return total;
}

double phase_pancharatnam(const LoopSpec& loop, bool include_dphi, double min_overlap) {
  loop.validate();
  const auto pts = loop.sample_points();
  std::vector<StateVector> states;
  states.reserve(pts.size());
  for (const auto& p : pts) states.push_back(psi_of(p));
  double phase = pancharatnam_sum(states, min_overlap);
  if (!include_dphi) phase += 2.0 / kSqrt3 * (loop.waypoints.back().phi - loop.waypoints.front().phi);
  return phase;
}

double phase_curvature(const RectangleSurface& s) {
  if (s.samples_u < 1 || s.samples_v < 1)
    throw std::invalid_argument("rectangle needs at least one sample per direction");
  const double hu = (s.u1 - s.u0) / s.samples_u;
  const double hv = (s.v1 - s.v0) / s.samples_v;
  double total = 0.0;
  EulerAngles p = s.base;
  for (int i = 0; i <= s.samples_u; ++i) {
    const double wu = (i == 0 || i == s.samples_u) ? 0.5 : 1.0;
    p[s.u] = s.u0 + i * hu;
    for (int j = 0; j <= s.samples_v; ++j) {
      const double wv = (j == 0 || j == s.samples_v) ? 0.5 : 1.0;
      p[s.v] = s.v0 + j * hv;
      total += wu * wv * curvature(p)(s.u, s.v);
    }
  }
  return total * hu * hv;
}

LoopSpec boundary_loop(const RectangleSurface& s, int samples_per_segment) {
  auto at = [&](double u, double v) {
    EulerAngles p = s.base;
    p[s.u] = u;
    p[s.v] = v;
    return p;
  };
  LoopSpec loop;
  loop.waypoints = {at(s.u0, s.v0), at(s.u1, s.v0), at(s.u1, s.v1), at(s.u0, s.v1), at(s.u0, s.v0)};
  loop.samples_per_segment = samples_per_segment;
  loop.closed = true;
  return loop;
}

LoopSpec reversed(const LoopSpec& loop) {
  LoopSpec r = loop;
  std::reverse(r.waypoints.begin(), r.waypoints.end());
  return r;
}

}  // namespace su3
