#ifndef SU3_MEASURE_HPP
#define SU3_MEASURE_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "su3/group.hpp"

namespace su3 {

/// Samples are generated in fixed-size blocks, each with its own engine
/// seeded from (seed, block index). Estimates therefore do not depend on the
/// number of worker threads.
inline constexpr std::size_t kSampleBlock = 4096;

struct HaarSample {
  EulerAngles angles;
  double weight = 1.0;
};

template <class T>
struct IntegrationResult {
  T estimate{};
  double std_error = 0.0;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
};

/// ∫ sin2β sin2b sin2θ sin²θ over the fundamental domain, in closed form:
/// (√3/2)π⁵ for Standard ranges, 2√3π⁵ for Covering ranges.
double total_volume(RangeConvention conv = RangeConvention::Standard);

/// Maps 8 uniforms in [0,1) to chart angles distributed with the Haar density
/// (inverse CDFs: β = asin √u, b = asin √u, θ = asin u^{1/4}).
EulerAngles haar_angles_from_uniforms(const std::array<double, 8>& u, RangeConvention conv);

std::vector<HaarSample> sample_haar(std::uint64_t seed, std::size_t n,
                                    RangeConvention conv = RangeConvention::Covering);

/// Haar-random element via QR of a complex Gaussian matrix (chart independent).
GroupElement random_su3(std::mt19937_64& rng);

/// Worker count: SU3_THREADS if set (≥ 1), else hardware concurrency.
unsigned worker_count();

using ComplexIntegrand = std::function<Complex(const GroupElement&)>;

/// Plain Monte Carlo mean of f over Haar samples mapped through compose.
IntegrationResult<Complex> integrate(const ComplexIntegrand& f, std::size_t n, std::uint64_t seed,
                                     RangeConvention conv = RangeConvention::Covering,
                                     unsigned workers = 0);

/// Unnormalized volume by uniform sampling of the box times the Haar density.
IntegrationResult<double> volume_monte_carlo(std::size_t n, std::uint64_t seed,
                                             RangeConvention conv = RangeConvention::Standard,
                                             unsigned workers = 0);

/// ∫ D_ij conj(D_kl) dμ for all 81 index combinations, flattened as
/// ((i*3 + j)*3 + k)*3 + l (0-based).
struct OrthogonalityReport {
  std::array<Complex, 81> estimate{};
  std::array<double, 81> std_error{};
  std::array<double, 81> residual{};  // |estimate - δik δjl / 3|
  std::size_t n_samples = 0;

  static int index(int i, int j, int k, int l) { return ((i * 3 + j) * 3 + k) * 3 + l; }
  static double expected(int i, int j, int k, int l) { return (i == k && j == l) ? 1.0 / 3.0 : 0.0; }

  double max_sigma_ratio() const;  // max residual / std_error
  double rms_residual() const;
};

OrthogonalityReport orthogonality_suite(std::size_t n, std::uint64_t seed,
                                        RangeConvention conv = RangeConvention::Covering,
                                        unsigned workers = 0);

}  // namespace su3

#endif
