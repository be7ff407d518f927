#include "su3/io.hpp"

#include <iomanip>
#include <stdexcept>

namespace su3::io {

namespace {

std::array<double, 8> eight_reals(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 8)
    throw std::invalid_argument(std::string(what) + " must be an array of 8 numbers");
  std::array<double, 8> out;
  for (int k = 0; k < 8; ++k) {
    if (!j[k].is_number()) throw std::invalid_argument(std::string(what) + " entries must be numbers");
    out[k] = j[k].get<double>();
  }
  return out;
}

}  // namespace

json matrix_to_json(const Mat3& m) {
  json re = json::array(), im = json::array();
  for (int i = 0; i < 3; ++i) {
    re.push_back({m(i, 0).real(), m(i, 1).real(), m(i, 2).real()});
    im.push_back({m(i, 0).imag(), m(i, 1).imag(), m(i, 2).imag()});
  }
  return {{"re", re}, {"im", im}};
}

Mat3 matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw std::invalid_argument("matrix JSON needs \"re\" and \"im\" fields");
  Mat3 m;
  for (const char* part : {"re", "im"}) {
    const json& rows = j.at(part);
    if (!rows.is_array() || rows.size() != 3)
      throw std::invalid_argument(std::string("matrix \"") + part + "\" must have 3 rows");
    for (int i = 0; i < 3; ++i) {
      if (!rows[i].is_array() || rows[i].size() != 3)
        throw std::invalid_argument(std::string("matrix \"") + part + "\" rows must have 3 entries");
      for (int k = 0; k < 3; ++k) {
        if (!rows[i][k].is_number())
          throw std::invalid_argument("matrix entries must be numbers");
        const double v = rows[i][k].get<double>();
        if (part[0] == 'r')
          m(i, k).real(v);
        else
          m(i, k).imag(v);
      }
    }
  }
  return m;
}

json angles_to_json(const EulerAngles& x) {
  json j = json::object();
  for (int k = 0; k < 8; ++k) j[kCoordNames[k]] = x[k];
  return j;
}

EulerAngles angles_from_json(const json& j) {
  if (j.is_array()) return EulerAngles::from_array(eight_reals(j, "angles"));
  if (!j.is_object()) throw std::invalid_argument("angles must be an object or an array of 8");
  EulerAngles x;
  for (int k = 0; k < 8; ++k) {
    if (!j.contains(kCoordNames[k]) || !j.at(kCoordNames[k]).is_number())
      throw std::invalid_argument(std::string("angles missing numeric field \"") + kCoordNames[k] + "\"");
    x[k] = j.at(kCoordNames[k]).get<double>();
  }
  return x;
}

json strata_to_json(const Strata& s) {
  return {{"theta_zero", s.theta_zero}, {"theta_half_pi", s.theta_half_pi},
          {"beta_zero", s.beta_zero},   {"beta_half_pi", s.beta_half_pi},
          {"b_zero", s.b_zero},         {"b_half_pi", s.b_half_pi}};
}

json density_to_json(const DensityState& s) {
  json j = matrix_to_json(s.rho);
  j["n"] = json::array();
  for (int k = 0; k < 8; ++k) j["n"].push_back(s.n[k]);
  return j;
}

json loop_to_json(const LoopSpec& loop) {
  json w = json::array();
  for (const auto& p : loop.waypoints) w.push_back(p.to_array());
  return {{"waypoints", w}, {"samples_per_segment", loop.samples_per_segment}, {"closed", loop.closed}};
}

LoopSpec loop_from_json(const json& j) {
  if (!j.is_object() || !j.contains("waypoints"))
    throw std::invalid_argument("loop JSON needs a \"waypoints\" array");
  LoopSpec loop;
  for (const auto& w : j.at("waypoints")) loop.waypoints.push_back(EulerAngles::from_array(eight_reals(w, "waypoint")));
  if (j.contains("samples_per_segment")) {
    if (!j.at("samples_per_segment").is_number_integer())
      throw std::invalid_argument("samples_per_segment must be an integer");
    loop.samples_per_segment = j.at("samples_per_segment").get<int>();
  }
  if (j.contains("closed")) {
    if (!j.at("closed").is_boolean()) throw std::invalid_argument("closed must be a boolean");
    loop.closed = j.at("closed").get<bool>();
  }
  return loop;
}

json phase_result_json(const std::string& method, double phase, std::size_t samples) {
  return {{"method", method}, {"phase_rad", phase}, {"samples", samples}};
}

void write_samples_csv(std::ostream& os, std::span<const HaarSample> samples) {
  os << "alpha,beta,gamma,theta,a,b,c,phi\n";
  os << std::setprecision(17);
  for (const auto& s : samples) {
    for (int k = 0; k < 8; ++k) {
      if (k) os << ',';
      os << s.angles[k];
    }
    os << '\n';
  }
}

}  // namespace su3::io
