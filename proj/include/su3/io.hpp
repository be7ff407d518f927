#ifndef SU3_IO_HPP
#define SU3_IO_HPP

#include <ostream>
#include <span>

#include <json.hpp>

#include "su3/measure.hpp"
#include "su3/phase.hpp"
#include "su3/states.hpp"

namespace su3::io {

using nlohmann::json;

/// {"re": [[3x3]], "im": [[3x3]]}, row-major.
json matrix_to_json(const Mat3& m);
/// Throws std::invalid_argument on a malformed document.
Mat3 matrix_from_json(const json& j);

/// {"alpha": ..., ..., "phi": ...} in radians.
json angles_to_json(const EulerAngles& x);
EulerAngles angles_from_json(const json& j);

json strata_to_json(const Strata& s);

/// Shared matrix format for rho plus "n": [8 reals].
json density_to_json(const DensityState& s);

/// {"waypoints": [[8 reals], ...], "samples_per_segment": N, "closed": true}
json loop_to_json(const LoopSpec& loop);
LoopSpec loop_from_json(const json& j);

/// {"method": ..., "phase_rad": ..., "samples": ...}
json phase_result_json(const std::string& method, double phase, std::size_t samples);

/// Header alpha,beta,gamma,theta,a,b,c,phi; one row per sample, 17 significant digits.
void write_samples_csv(std::ostream& os, std::span<const HaarSample> samples);

}  // namespace su3::io

#endif
