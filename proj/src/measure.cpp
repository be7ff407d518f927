#include "su3/measure.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

namespace su3 {

namespace {

std::mt19937_64 block_engine(std::uint64_t seed, std::size_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  return std::mt19937_64(seq);
}

std::array<double, 8> uniforms(std::mt19937_64& eng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::array<double, 8> u;
  for (auto& x : u) x = u01(eng);
  return u;
}

// Runs fn(block, begin, end) for every block and returns results in block order.
template <class Acc, class Fn>
std::vector<Acc> run_blocks(std::size_t n, unsigned workers, Fn fn) {
  const std::size_t nblocks = (n + kSampleBlock - 1) / kSampleBlock;
  std::vector<Acc> out(nblocks);
  if (workers == 0) workers = worker_count();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(nblocks, 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t b = next++; b < nblocks; b = next++) {
      const std::size_t begin = b * kSampleBlock;
      out[b] = fn(b, begin, std::min(n, begin + kSampleBlock));
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return out;
}

struct ComplexAcc {
  Complex sum{};
  double sum_sq = 0.0;
};

struct RealAcc {
  double sum = 0.0;
  double sum_sq = 0.0;
};

double std_error(double mean_sq, double abs_mean_sq, std::size_t n) {
  const double var = std::max(0.0, mean_sq - abs_mean_sq);
  return n > 1 ? std::sqrt(var / static_cast<double>(n - 1)) : 0.0;
}

double box_volume(RangeConvention conv) {
  double v = 1.0;
  for (int k = 0; k < 8; ++k) {
    const auto r = angle_range(static_cast<Coord>(k), conv);
    v *= r.hi - r.lo;
  }
  return v;
}

}  // namespace

double total_volume(RangeConvention conv) {
  // ∫sin2β dβ = ∫sin2b db = 1, ∫ sin2θ sin²θ dθ = 1/2, the rest are interval lengths
  const double cyclic = conv == RangeConvention::Covering ? 4 * kPi * kPi * kPi * kPi
                                                          : kPi * kPi * kPi * kPi;
  return cyclic * kSqrt3 * kPi * 0.5;
}

EulerAngles haar_angles_from_uniforms(const std::array<double, 8>& u, RangeConvention conv) {
  const double wide = conv == RangeConvention::Covering ? 2 * kPi : kPi;
  EulerAngles x;
  x.alpha = kPi * u[0];
  x.beta = std::asin(std::sqrt(u[1]));
  x.gamma = wide * u[2];
  x.theta = std::asin(std::sqrt(std::sqrt(u[3])));
  x.a = kPi * u[4];
  x.b = std::asin(std::sqrt(u[5]));
  x.c = wide * u[6];
  x.phi = kSqrt3 * kPi * u[7];
  return x;
}

std::vector<HaarSample> sample_haar(std::uint64_t seed, std::size_t n, RangeConvention conv) {
  std::vector<HaarSample> out;
  out.reserve(n);
  for (std::size_t b = 0; b * kSampleBlock < n; ++b) {
    auto eng = block_engine(seed, b);
    const std::size_t end = std::min(n, (b + 1) * kSampleBlock);
    for (std::size_t i = b * kSampleBlock; i < end; ++i)
      out.push_back({haar_angles_from_uniforms(uniforms(eng), conv), 1.0});
  }
  return out;
}

GroupElement random_su3(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  Mat3 z;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) z(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Mat3> qr(z);
  Mat3 q = qr.householderQ();
  const Mat3 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 3; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  const Complex det = q.determinant();
  q *= std::polar(1.0, -std::arg(det) / 3.0);
  return GroupElement::unchecked(q);
}

unsigned worker_count() {
  if (const char* env = std::getenv("SU3_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

IntegrationResult<Complex> integrate(const ComplexIntegrand& f, std::size_t n, std::uint64_t seed,
                                     RangeConvention conv, unsigned workers) {
  const auto blocks = run_blocks<ComplexAcc>(n, workers, [&](std::size_t b, std::size_t begin,
                                                             std::size_t end) {
    auto eng = block_engine(seed, b);
    ComplexAcc acc;
    for (std::size_t i = begin; i < end; ++i) {
      const Complex v = f(compose(haar_angles_from_uniforms(uniforms(eng), conv)));
      acc.sum += v;
      acc.sum_sq += std::norm(v);
    }
    return acc;
  });
  ComplexAcc tot;
  for (const auto& b : blocks) {
    tot.sum += b.sum;
    tot.sum_sq += b.sum_sq;
  }
  IntegrationResult<Complex> res;
  res.n_samples = n;
  res.seed = seed;
  if (n == 0) return res;
  res.estimate = tot.sum / static_cast<double>(n);
  res.std_error = std_error(tot.sum_sq / n, std::norm(res.estimate), n);
  return res;
}

IntegrationResult<double> volume_monte_carlo(std::size_t n, std::uint64_t seed,
                                             RangeConvention conv, unsigned workers) {
  const double box = box_volume(conv);
  const auto blocks =
      run_blocks<RealAcc>(n, workers, [&](std::size_t b, std::size_t begin, std::size_t end) {
        auto eng = block_engine(seed, b);
        RealAcc acc;
        for (std::size_t i = begin; i < end; ++i) {
          const auto u = uniforms(eng);
          const double beta = u[1] * kPi / 2, b2 = u[5] * kPi / 2, theta = u[3] * kPi / 2;
          const double s = std::sin(theta);
          const double v = box * std::sin(2 * beta) * std::sin(2 * b2) * std::sin(2 * theta) * s * s;
          acc.sum += v;
          acc.sum_sq += v * v;
        }
        return acc;
      });
  RealAcc tot;
  for (const auto& b : blocks) {
    tot.sum += b.sum;
    tot.sum_sq += b.sum_sq;
  }
  IntegrationResult<double> res;
  res.n_samples = n;
  res.seed = seed;
  if (n == 0) return res;
  res.estimate = tot.sum / static_cast<double>(n);
  res.std_error = std_error(tot.sum_sq / n, res.estimate * res.estimate, n);
  return res;
}

double OrthogonalityReport::max_sigma_ratio() const {
  double worst = 0.0;
  for (int t = 0; t < 81; ++t) {
    const double r = std_error[t] > 0 ? residual[t] / std_error[t]
                                      : (residual[t] > 0 ? INFINITY : 0.0);
    worst = std::max(worst, r);
  }
  return worst;
}

double OrthogonalityReport::rms_residual() const {
  double s = 0.0;
  for (double r : residual) s += r * r;
  return std::sqrt(s / 81.0);
}

OrthogonalityReport orthogonality_suite(std::size_t n, std::uint64_t seed, RangeConvention conv,
                                        unsigned workers) {
  struct Acc {
    std::array<Complex, 81> sum{};
    std::array<double, 81> sum_sq{};
  };
  const auto blocks =
      run_blocks<Acc>(n, workers, [&](std::size_t b, std::size_t begin, std::size_t end) {
        auto eng = block_engine(seed, b);
        Acc acc;
        for (std::size_t s = begin; s < end; ++s) {
          const Mat3 d = compose(haar_angles_from_uniforms(uniforms(eng), conv)).matrix();
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
              for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                  const Complex v = d(i, j) * std::conj(d(k, l));
                  const int t = OrthogonalityReport::index(i, j, k, l);
                  acc.sum[t] += v;
                  acc.sum_sq[t] += std::norm(v);
                }
        }
        return acc;
      });
  OrthogonalityReport rep;
  rep.n_samples = n;
  Acc tot;
  for (const auto& b : blocks)
    for (int t = 0; t < 81; ++t) {
      tot.sum[t] += b.sum[t];
      tot.sum_sq[t] += b.sum_sq[t];
    }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          const int t = OrthogonalityReport::index(i, j, k, l);
          rep.estimate[t] = tot.sum[t] / static_cast<double>(n);
          rep.std_error[t] = std_error(tot.sum_sq[t] / n, std::norm(rep.estimate[t]), n);
          rep.residual[t] = std::abs(rep.estimate[t] - OrthogonalityReport::expected(i, j, k, l));
        }
  return rep;
}

}  // namespace su3
