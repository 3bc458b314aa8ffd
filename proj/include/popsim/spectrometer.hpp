#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "popsim/state_engine.hpp"

namespace popsim {

inline constexpr double kDefaultTipAngle_rad = kPi / 10.0;
inline constexpr double kDefaultGridStep_hz = 0.5;
inline constexpr double kDefaultGridMargin_hz = 1250.0;
inline constexpr double kNoiseWindowWidth_hz = 1000.0;

// Default per-point noise level, calibrated by Monte Carlo so that a no-gate
// two-experiment POPS spectrum of the bundled system averages S/N ~ 4.5e2
// (see calibrate_noise_sigma and the spectrometer tests).
inline constexpr double kDefaultNoiseSigma = 1.52e-4;

struct Grid {
  double start_hz = 0.0;
  double step_hz = kDefaultGridStep_hz;
  std::size_t count = 0;
  double freq(std::size_t k) const { return start_hz + static_cast<double>(k) * step_hz; }
  double end_hz() const { return freq(count == 0 ? 0 : count - 1); }
  friend bool operator==(const Grid&, const Grid&) = default;
};

struct FreqWindow {
  double lo_hz = 0.0;
  double hi_hz = 0.0;
};

struct Stick {
  double freq_hz = 0.0;
  double amplitude = 0.0;
  PeakLabel label;
};

struct StickSpectrum {
  std::string species;
  std::vector<Stick> sticks;  // ordered by (spin, neighbor config)
};

struct SampledSpectrum {
  std::string species;
  Grid grid;
  std::vector<double> values;
  // per-point sigma used during synthesis; nullopt for derived spectra
  // (products) where no single sigma applies
  std::optional<double> noise_sigma;
  std::optional<std::uint64_t> seed;
};

// Small-angle linear-response detection: one stick per transition of the
// species' spins, amplitude sin(tip) * (pop(lower) - pop(upper)); exact zeros
// are omitted.
StickSpectrum detect(const PopulationState& state, const SpinSystem& sys,
                     const std::string& species, double tip_angle_rad = kDefaultTipAngle_rad);

// grid covering every transition of the species plus a signal-free margin on
// both sides, aligned to step multiples
Grid default_grid(const SpinSystem& sys, const std::string& species,
                  double step_hz = kDefaultGridStep_hz,
                  double margin_hz = kDefaultGridMargin_hz);

// 1 kHz window inside the left margin, clear of any signal
FreqWindow default_noise_window(const Grid& grid);

// ----------------------------------------------------------------------
// rendering kernels (render_kernel.cpp)
//
// Peak-height-normalized Lorentzian per stick, full width at half maximum
// 1/(pi * t2star) of the stick's spin, plus seeded Gaussian noise. The noise
// is counter-based, so the parallel and serial paths produce bitwise
// identical output.

struct RenderStick {
  double freq_hz = 0.0;
  double amplitude = 0.0;
  double hwhm_hz = 0.0;
};

void accumulate_lorentzians_serial(std::span<const RenderStick> sticks, const Grid& grid,
                                   std::span<double> out);
void accumulate_lorentzians_parallel(std::span<const RenderStick> sticks, const Grid& grid,
                                     std::span<double> out);
void add_gaussian_noise_serial(double sigma, std::uint64_t seed, std::span<double> out);
void add_gaussian_noise_parallel(double sigma, std::uint64_t seed, std::span<double> out);

// OpenMP path; `render_reference` is the serial twin kept for testing
SampledSpectrum render(const StickSpectrum& sticks, const SpinSystem& sys, const Grid& grid,
                       double noise_sigma, std::uint64_t seed);
SampledSpectrum render_reference(const StickSpectrum& sticks, const SpinSystem& sys,
                                 const Grid& grid, double noise_sigma, std::uint64_t seed);

// ----------------------------------------------------------------------

// Two-experiment protocol: experiment I applies the selective pi pulse before
// the gate, experiment II only waits; both are rendered with independent
// noise draws and the difference, scaled by the equilibrium population
// difference across the transition, is returned.
SampledSpectrum pops_spectrum_by_subtraction(const SpinSystem& sys, const Transition& t,
                                             const PulseSequence* gate, bool relax,
                                             const std::string& species, const Grid& grid,
                                             double noise_sigma, std::uint64_t seed,
                                             double tip_angle_rad = kDefaultTipAngle_rad);

// 2.5 * max|value| over the spectrum divided by the peak-to-peak value inside
// the noise window; nullopt when the window is flat (noiseless spectrum)
std::optional<double> snr(const SampledSpectrum& spec, const FreqWindow& noise_window);

// mean S/N of a no-gate POPS spectrum over `n_seeds` seeds at a given sigma
double mean_pops_snr(const SpinSystem& sys, const Transition& t, double sigma,
                     int n_seeds, std::uint64_t base_seed = 1);

// secant search for the sigma that reaches `target_snr` on a no-gate POPS
// spectrum of the given transition's species
double calibrate_noise_sigma(const SpinSystem& sys, const Transition& t, double target_snr,
                             int n_seeds = 20, std::uint64_t base_seed = 1);

void write_csv(const SampledSpectrum& spec, const std::string& path);

}  // namespace popsim
