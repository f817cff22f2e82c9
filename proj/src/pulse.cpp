#include "cpgate/pulse.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

namespace cpgate {

namespace {

bool finite(double x) { return std::isfinite(x); }

// log(cosh(x)) without overflow.
double log_cosh(double x) {
  const double ax = std::abs(x);
  return ax + std::log1p(std::exp(-2.0 * ax)) - std::log(2.0);
}

// Coupling envelope and accumulated detuning phase for one pulse.
class PulseModel {
 public:
  explicit PulseModel(const PulseSpec& spec) : spec_(spec) {
    if (spec.shape == PulseShape::rectangular) {
      t_begin_ = 0.0;
      t_end_ = spec.duration;
    } else {
      t_begin_ = -spec.window_half_width * spec.duration;
      t_end_ = spec.window_half_width * spec.duration;
    }
  }

  double t_begin() const { return t_begin_; }
  double t_end() const { return t_end_; }

  double rabi(double t) const {
    if (spec_.shape == PulseShape::rectangular) return spec_.peak_rabi;
    return spec_.peak_rabi / std::cosh(t / spec_.duration);
  }

  // D(t) = int_{t_begin}^{t} Delta(t') dt'
  double phase(double t) const {
    if (const auto* c = std::get_if<ConstantDetuning>(&spec_.detuning)) {
      return c->delta * (t - t_begin_);
    }
    const double chirp = std::get<TanhChirp>(spec_.detuning).chirp;
    const double T = spec_.duration;
    return chirp * T * (log_cosh(t / T) - log_cosh(t_begin_ / T));
  }

  // Fastest rate in the problem, used to seed the first step.
  double rate_scale() const {
    double r = std::abs(spec_.peak_rabi) + 1.0 / spec_.duration;
    if (const auto* c = std::get_if<ConstantDetuning>(&spec_.detuning)) {
      r += std::abs(c->delta);
    } else {
      r += std::abs(std::get<TanhChirp>(spec_.detuning).chirp);
    }
    return r;
  }

 private:
  PulseSpec spec_;
  double t_begin_ = 0.0;
  double t_end_ = 0.0;
};

using State = std::array<complex, 2>;

// i dc/dt = H c with H = (Omega/2) [[0, e^{-iD}], [e^{iD}, 0]]
State rhs(const PulseModel& model, double t, const State& c) {
  const double half_rabi = 0.5 * model.rabi(t);
  const complex coupling = std::polar(half_rabi, -model.phase(t));
  constexpr complex minus_i{0.0, -1.0};
  return {minus_i * coupling * c[1], minus_i * std::conj(coupling) * c[0]};
}

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b(5th) - b(4th)
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
  State out = y;
  for (const auto& [w, k] : terms) {
    out[0] += h * w * (*k)[0];
    out[1] += h * w * (*k)[1];
  }
  return out;
}

}  // namespace

double PulseSpec::area() const {
  if (shape == PulseShape::rectangular) return peak_rabi * duration;
  return kPi * peak_rabi * duration;
}

bool PulseSpec::is_resonant() const {
  const auto* c = std::get_if<ConstantDetuning>(&detuning);
  return c != nullptr && c->delta == 0.0;
}

void PulseSpec::validate() const {
  if (!finite(peak_rabi) || !finite(duration) || !finite(window_half_width)) {
    throw std::invalid_argument("PulseSpec: non-finite parameter");
  }
  if (peak_rabi < 0.0) {
    throw std::invalid_argument("PulseSpec: peak Rabi frequency must be >= 0");
  }
  if (duration < 0.0 || (shape == PulseShape::sech && duration == 0.0)) {
    throw std::invalid_argument("PulseSpec: duration must be positive");
  }
  if (shape == PulseShape::sech &&
      (window_half_width < 5.0 || window_half_width > 300.0)) {
    throw std::invalid_argument(
        "PulseSpec: sech window half-width must lie in [5, 300]");
  }
  const bool finite_detuning = std::visit(
      [](const auto& d) {
        if constexpr (std::is_same_v<std::decay_t<decltype(d)>, TanhChirp>) {
          return finite(d.chirp);
        } else {
          return finite(d.delta);
        }
      },
      detuning);
  if (!finite_detuning) {
    throw std::invalid_argument("PulseSpec: non-finite detuning");
  }
}

PulseSpec PulseSpec::rectangular(double area, double delta, double duration) {
  PulseSpec s;
  s.shape = PulseShape::rectangular;
  s.duration = duration;
  s.peak_rabi = area / duration;
  s.detuning = ConstantDetuning{delta};
  return s;
}

PulseSpec PulseSpec::sech(double peak_rabi_times_t, DetuningModel detuning,
                          double duration) {
  PulseSpec s;
  s.shape = PulseShape::sech;
  s.duration = duration;
  s.peak_rabi = peak_rabi_times_t / duration;
  s.detuning = detuning;
  return s;
}

void IntegratorConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_steps <= 0) {
    throw std::invalid_argument(
        "IntegratorConfig: tolerances and max_steps must be positive");
  }
}

Propagator resonant_rect_propagator(double area) {
  if (!(area >= 0.0)) {
    throw std::invalid_argument("resonant_rect_propagator: area must be >= 0");
  }
  return {complex{std::cos(0.5 * area), 0.0},
          complex{0.0, -std::sin(0.5 * area)}};
}

Propagator integrate_pulse(const PulseSpec& spec,
                           const IntegratorConfig& config) {
  spec.validate();
  config.validate();
  const PulseModel model(spec);
  const double t0 = model.t_begin();
  const double t1 = model.t_end();
  const double span = t1 - t0;
  if (span == 0.0) return Propagator::identity();

  // First column of U: c(t0) = (1, 0) evolves into (a, -b*).
  State y{complex{1.0, 0.0}, complex{0.0, 0.0}};
  double t = t0;
  double h = std::min(span, 0.05 / model.rate_scale());
  double last_err = 0.0;
  State k1 = rhs(model, t, y);

  long steps = 0;
  while (t < t1) {
    if (steps++ >= config.max_steps) {
      char msg[160];
      std::snprintf(msg, sizeof msg,
                    "integrate_pulse: step limit %ld reached at t=%.6g of "
                    "[%.6g, %.6g], last error ratio %.3g",
                    config.max_steps, t, t0, t1, last_err);
      throw IntegrationError(msg, t, last_err);
    }
    bool last = false;
    if (t + h >= t1) {
      h = t1 - t;
      last = true;
    }

    const State k2 = rhs(model, t + c2 * h, axpy(y, h, {{a21, &k1}}));
    const State k3 =
        rhs(model, t + c3 * h, axpy(y, h, {{a31, &k1}, {a32, &k2}}));
    const State k4 = rhs(model, t + c4 * h,
                         axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State k5 =
        rhs(model, t + c5 * h,
            axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const State k6 = rhs(
        model, t + h,
        axpy(y, h,
             {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const State y_new = axpy(
        y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const State k7 = rhs(model, t + h, y_new);

    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
      const complex e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                             e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double scale =
          config.abs_tol +
          config.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
      err = std::max(err, std::abs(e) / scale);
    }
    last_err = err;

    if (!std::isfinite(err)) {
      throw IntegrationError("integrate_pulse: non-finite error estimate", t,
                             err);
    }
    if (err <= 1.0) {
      t = last ? t1 : t + h;
      y = y_new;
      k1 = k7;
    }
    const double factor =
        err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    h *= err <= 1.0 ? factor : std::min(factor, 1.0);
    if (h < 1e-14 * span) {
      throw IntegrationError("integrate_pulse: step size underflow", t, err);
    }
  }

  // Remove the O(tol) norm drift so the result stays on SU(2).
  const double norm = std::sqrt(std::norm(y[0]) + std::norm(y[1]));
  return {y[0] / norm, -std::conj(y[1]) / norm};
}

Propagator pulse_propagator(const PulseSpec& spec,
                            const IntegratorConfig& config) {
  spec.validate();
  if (spec.shape == PulseShape::rectangular) {
    if (spec.duration == 0.0) return Propagator::identity();
    if (spec.is_resonant()) return resonant_rect_propagator(spec.area());
  }
  return integrate_pulse(spec, config);
}

}  // namespace cpgate
