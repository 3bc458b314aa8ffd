#include <cstdint>

#include "popsim/rng.hpp"
#include "popsim/spectrometer.hpp"

namespace popsim {

// Grid points are independent, and the per-point stick loop runs in the same
// order on every path, so the parallel kernels match the serial ones bitwise.

namespace {

inline double point_value(std::span<const RenderStick> sticks, double f) {
  double acc = 0.0;
  for (const auto& s : sticks) {
    const double d = (f - s.freq_hz) / s.hwhm_hz;
    acc += s.amplitude / (1.0 + d * d);
  }
  return acc;
}

}  // namespace

void accumulate_lorentzians_serial(std::span<const RenderStick> sticks, const Grid& grid,
                                   std::span<double> out) {
  for (std::size_t k = 0; k < grid.count; ++k) out[k] += point_value(sticks, grid.freq(k));
}

void accumulate_lorentzians_parallel(std::span<const RenderStick> sticks, const Grid& grid,
                                     std::span<double> out) {
  const std::int64_t count = static_cast<std::int64_t>(grid.count);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < count; ++k)
    out[static_cast<std::size_t>(k)] +=
        point_value(sticks, grid.freq(static_cast<std::size_t>(k)));
}

void add_gaussian_noise_serial(double sigma, std::uint64_t seed, std::span<double> out) {
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += sigma * gaussian_at(seed, k);
}

void add_gaussian_noise_parallel(double sigma, std::uint64_t seed, std::span<double> out) {
  const std::int64_t count = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < count; ++k)
    out[static_cast<std::size_t>(k)] +=
        sigma * gaussian_at(seed, static_cast<std::uint64_t>(k));
}

}  // namespace popsim
