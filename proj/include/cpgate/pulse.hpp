#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "cpgate/su2.hpp"

namespace cpgate {

enum class PulseShape { rectangular, sech };

/// Fixed detuning Delta (rad/time).
struct ConstantDetuning {
  double delta = 0.0;
};

/// Delta(t) = chirp * tanh(t / T).
struct TanhChirp {
  double chirp = 0.0;
};

using DetuningModel = std::variant<ConstantDetuning, TanhChirp>;

/// One constituent pulse of a composite sequence.
///
/// Rectangular pulses run over [0, duration] with constant Rabi frequency.
/// Sech pulses use Omega(t) = peak_rabi * sech(t / duration) over the window
/// [-w T, w T], w = window_half_width.
struct PulseSpec {
  PulseShape shape = PulseShape::rectangular;
  double peak_rabi = kPi;
  double duration = 1.0;
  DetuningModel detuning = ConstantDetuning{};
  double window_half_width = 25.0;

  /// Omega0 * T for rectangular pulses; pi * Omega0 * T for sech pulses
  /// (the infinite-window area).
  double area() const;

  /// Throws std::invalid_argument if a field is out of range or non-finite.
  void validate() const;

  bool is_resonant() const;

  static PulseSpec rectangular(double area, double delta = 0.0,
                               double duration = 1.0);
  static PulseSpec sech(double peak_rabi_times_t, DetuningModel detuning,
                        double duration = 1.0);
};

struct IntegratorConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  long max_steps = 1'000'000;

  void validate() const;
};

/// Raised when the adaptive integrator cannot reach the end of the window.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double reached_time,
                   double achieved_error)
      : std::runtime_error(what),
        reached_time_(reached_time),
        achieved_error_(achieved_error) {}

  double reached_time() const { return reached_time_; }
  /// Last scaled local error estimate (1.0 == requested tolerance).
  double achieved_error() const { return achieved_error_; }

 private:
  double reached_time_;
  double achieved_error_;
};

/// (cos(A/2), -i sin(A/2)). Throws std::invalid_argument for negative area.
Propagator resonant_rect_propagator(double area);

/// Integrates i dc/dt = H(t) c with the rotating-wave coupling
/// H12 = (Omega(t)/2) e^{-i D(t)}, D(t) = int Delta from the window start.
/// Always integrates numerically, even for resonant pulses.
Propagator integrate_pulse(const PulseSpec& spec,
                           const IntegratorConfig& config = {});

/// Constituent propagator for any pulse model: the analytic form for
/// resonant rectangular pulses, numerical integration otherwise. A
/// rectangular pulse of zero duration is the identity.
Propagator pulse_propagator(const PulseSpec& spec,
                            const IntegratorConfig& config = {});

}  // namespace cpgate
