#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cpgate/pulse.hpp"
#include "cpgate/sequences.hpp"

namespace cpgate {

/// Swept quantity. Every "times T" value is measured in units of the pulse
/// template's duration, which stays the reference even when a
/// duration_fraction axis rescales the actual pulse.
enum class SweepParameter {
  pulse_area_fraction,  // A / pi
  detuning_times_t,     // Delta * T
  peak_rabi_times_t,    // Omega0 * T
  duration_fraction,    // T / T_template
};

enum class Spacing { linear, log };

std::string_view parameter_name(SweepParameter p);
/// Long names above, or the CLI short forms area, detuning, rabi, duration.
SweepParameter parse_parameter(std::string_view name);

struct SweepAxis {
  SweepParameter parameter = SweepParameter::pulse_area_fraction;
  double start = 0.0;
  double stop = 1.0;
  int samples = 2;
  Spacing spacing = Spacing::linear;

  static constexpr long kMaxSamples = 10'000'000;

  void validate() const;
  double value(int i) const;
  std::vector<double> values() const;
};

enum class Execution { parallel, serial };

struct ScanOptions {
  IntegratorConfig integrator{};
  Execution execution = Execution::parallel;
  int threads = 0;  // 0: OpenMP default
};

struct ScanMetadata {
  std::string sequence;  // CompositePhases::label()
  double gate_phase = 0.0;
  std::vector<double> phases;
  std::string pulse_model;
  IntegratorConfig integrator{};
};

/// Infidelity samples over one or two axes, row-major in axis order
/// (values[i * ny + j] for x index i, y index j).
struct ScanResult {
  std::vector<SweepAxis> axes;
  std::vector<double> values;
  ScanMetadata metadata;

  double at(int i) const { return values[static_cast<std::size_t>(i)]; }
  double at(int i, int j) const {
    return values[static_cast<std::size_t>(i) * axes[1].samples + j];
  }
};

/// A grid point failed to evaluate; carries the axis coordinates.
class ScanError : public std::runtime_error {
 public:
  ScanError(const std::string& what, std::vector<double> coordinates)
      : std::runtime_error(what), coordinates_(std::move(coordinates)) {}
  const std::vector<double>& coordinates() const { return coordinates_; }

 private:
  std::vector<double> coordinates_;
};

/// Set one swept parameter on a copy of the template. `reference_duration`
/// is the template's duration. Throws std::invalid_argument when the
/// parameter does not apply (detuning sweep on a chirped pulse).
PulseSpec apply_axis(const PulseSpec& pulse, SweepParameter parameter,
                     double value, double reference_duration);

std::string describe_pulse(const PulseSpec& pulse);

ScanResult scan_1d(const SweepAxis& axis, const PhaseGateSequence& seq,
                   const PulseSpec& pulse_template,
                   const ScanOptions& options = {});

ScanResult scan_2d(const SweepAxis& axis_x, const SweepAxis& axis_y,
                   const PhaseGateSequence& seq,
                   const PulseSpec& pulse_template,
                   const ScanOptions& options = {});

/// Width, in axis units, of the longest contiguous run of samples with
/// F < threshold. Each sample owns the cell between the midpoints to its
/// neighbours (edge samples mirror their inner half-cell), so a single
/// sample on a linear grid spans one grid spacing. 0 if no sample passes.
double high_fidelity_bandwidth(const ScanResult& result, double threshold);

/// Fraction of grid points with F < threshold.
double high_fidelity_fraction(const ScanResult& result, double threshold);

enum class PerturbationKind { area, detuning, random_direction };

/// Systematic error applied to a rectangular constituent pulse of unit
/// duration at the sequence's nominal area:
///   area:             A -> A (1 + eps)
///   detuning:         Delta T = eps
///   random_direction: A -> A (1 + eps u0), Delta T = eps u1 with (u0, u1) a
///                     unit vector drawn from `seed`
struct Perturbation {
  PerturbationKind kind = PerturbationKind::area;
  std::uint64_t seed = 1;

  static Perturbation area() { return {PerturbationKind::area, 0}; }
  static Perturbation detuning() { return {PerturbationKind::detuning, 0}; }
  static Perturbation random_direction(std::uint64_t seed) {
    return {PerturbationKind::random_direction, seed};
  }

  /// (amplitude, detuning) unit direction.
  std::pair<double, double> direction() const;
};

PulseSpec perturbed_pulse(double nominal_area, const Perturbation& p,
                          double eps);

struct ErrorOrderOptions {
  double eps_lo = 1e-3;
  double eps_hi = 1e-2;
  int samples = 20;
  double noise_floor = 1e-13;
  IntegratorConfig integrator{1e-13, 1e-15, 1'000'000};
};

/// Not enough samples above the noise floor to fit a slope.
class UnresolvedSlopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordinary least-squares slope of log(y) against log(x), skipping samples
/// with y below `noise_floor`. Needs at least three retained samples.
double loglog_slope(std::span<const double> x, std::span<const double> y,
                    double noise_floor);

/// Fitted order of the gate error: slope of log F against log eps over
/// log-spaced eps in [eps_lo, eps_hi].
double error_order(const PhaseGateSequence& seq, const Perturbation& p,
                   const ErrorOrderOptions& options = {});

/// Same fit for the inversion pulse alone, on log |a|.
double error_order(const CompositePhases& cp, const Perturbation& p,
                   const ErrorOrderOptions& options = {});

}  // namespace cpgate
