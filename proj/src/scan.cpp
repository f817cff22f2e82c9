#include "cpgate/scan.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

namespace cpgate {

namespace {

// One grid point: the swept pulse, its gate propagator, and F.
class PointEvaluator {
 public:
  PointEvaluator(const PhaseGateSequence& seq, const PulseSpec& tmpl,
                 std::vector<SweepAxis> axes, const IntegratorConfig& config)
      : seq_(seq), tmpl_(tmpl), axes_(std::move(axes)), config_(config) {}

  double operator()(std::span<const double> coords) const {
    PulseSpec pulse = tmpl_;
    for (std::size_t k = 0; k < axes_.size(); ++k) {
      pulse = apply_axis(pulse, axes_[k].parameter, coords[k], tmpl_.duration);
    }
    const Propagator u = pulse_propagator(pulse, config_);
    return infidelity(gate_propagator(seq_, u), TargetGate{seq_.gate_phase});
  }

 private:
  const PhaseGateSequence& seq_;
  const PulseSpec& tmpl_;
  std::vector<SweepAxis> axes_;
  IntegratorConfig config_;
};

std::vector<double> coordinates_of(const std::vector<SweepAxis>& axes,
                                   std::size_t index) {
  std::vector<double> c(axes.size());
  for (std::size_t k = axes.size(); k-- > 0;) {
    const auto n = static_cast<std::size_t>(axes[k].samples);
    c[k] = axes[k].value(static_cast<int>(index % n));
    index /= n;
  }
  return c;
}

std::string coords_text(const std::vector<double>& c) {
  std::string s = "(";
  for (std::size_t k = 0; k < c.size(); ++k) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%.12g", k ? ", " : "", c[k]);
    s += buf;
  }
  return s + ")";
}

// Reference kernel. Stops at the first failing point.
void evaluate_serial(const std::vector<SweepAxis>& axes,
                     const PointEvaluator& eval, std::vector<double>& out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto c = coordinates_of(axes, i);
    try {
      out[i] = eval(c);
    } catch (const std::exception& e) {
      throw ScanError("scan failed at " + coords_text(c) + ": " + e.what(), c);
    }
  }
}

// Each point writes only its own slot, so the grid is independent of the
// schedule. The lowest failing index is reported.
void evaluate_parallel(const std::vector<SweepAxis>& axes,
                       const PointEvaluator& eval, std::vector<double>& out,
                       int threads) {
  const auto n = static_cast<std::int64_t>(out.size());
  std::int64_t failed_index = n;
  std::string failed_what;
  const int workers = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 8) num_threads(workers)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto c = coordinates_of(axes, static_cast<std::size_t>(i));
    try {
      out[static_cast<std::size_t>(i)] = eval(c);
    } catch (const std::exception& e) {
#pragma omp critical(cpgate_scan_failure)
      if (i < failed_index) {
        failed_index = i;
        failed_what = e.what();
      }
    }
  }

  if (failed_index < n) {
    const auto c = coordinates_of(axes, static_cast<std::size_t>(failed_index));
    throw ScanError("scan failed at " + coords_text(c) + ": " + failed_what, c);
  }
}

ScanResult run_scan(std::vector<SweepAxis> axes, const PhaseGateSequence& seq,
                    const PulseSpec& tmpl, const ScanOptions& options) {
  std::size_t total = 1;
  for (const auto& ax : axes) {
    ax.validate();
    total *= static_cast<std::size_t>(ax.samples);
  }
  if (total > static_cast<std::size_t>(SweepAxis::kMaxSamples)) {
    throw std::invalid_argument("scan grid exceeds 1e7 points");
  }
  tmpl.validate();
  options.integrator.validate();
  // Fail fast on inapplicable parameters before spawning workers.
  {
    PulseSpec probe = tmpl;
    for (const auto& ax : axes) {
      probe = apply_axis(probe, ax.parameter, ax.value(0), tmpl.duration);
    }
  }

  ScanResult result;
  result.axes = axes;
  result.values.assign(total, 0.0);
  result.metadata = {seq.source.label(), seq.gate_phase, seq.phases,
                     describe_pulse(tmpl), options.integrator};

  const PointEvaluator eval(seq, tmpl, std::move(axes), options.integrator);
  if (options.execution == Execution::serial) {
    evaluate_serial(result.axes, eval, result.values);
  } else {
    evaluate_parallel(result.axes, eval, result.values, options.threads);
  }
  return result;
}

}  // namespace

std::string_view parameter_name(SweepParameter p) {
  switch (p) {
    case SweepParameter::pulse_area_fraction:
      return "pulse_area_fraction";
    case SweepParameter::detuning_times_t:
      return "detuning_times_T";
    case SweepParameter::peak_rabi_times_t:
      return "peak_rabi_times_T";
    case SweepParameter::duration_fraction:
      return "duration_fraction";
  }
  return "unknown";
}

SweepParameter parse_parameter(std::string_view name) {
  if (name == "area" || name == "pulse_area_fraction") {
    return SweepParameter::pulse_area_fraction;
  }
  if (name == "detuning" || name == "detuning_times_T") {
    return SweepParameter::detuning_times_t;
  }
  if (name == "rabi" || name == "peak_rabi_times_T") {
    return SweepParameter::peak_rabi_times_t;
  }
  if (name == "duration" || name == "duration_fraction") {
    return SweepParameter::duration_fraction;
  }
  throw std::invalid_argument("unknown sweep parameter '" + std::string(name) +
                              "'");
}

void SweepAxis::validate() const {
  if (!std::isfinite(start) || !std::isfinite(stop) || !(start < stop)) {
    throw std::invalid_argument("SweepAxis: need finite start < stop");
  }
  if (samples < 2 || samples > kMaxSamples) {
    throw std::invalid_argument("SweepAxis: samples must be in [2, 1e7]");
  }
  if (spacing == Spacing::log && !(start > 0.0)) {
    throw std::invalid_argument("SweepAxis: log spacing needs start > 0");
  }
}

double SweepAxis::value(int i) const {
  if (i == 0) return start;
  if (i == samples - 1) return stop;
  const double f = static_cast<double>(i) / (samples - 1);
  if (spacing == Spacing::linear) return start + (stop - start) * f;
  const double lo = std::log(start);
  return std::exp(lo + (std::log(stop) - lo) * f);
}

std::vector<double> SweepAxis::values() const {
  std::vector<double> v(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) v[static_cast<std::size_t>(i)] = value(i);
  return v;
}

PulseSpec apply_axis(const PulseSpec& pulse, SweepParameter parameter,
                     double value, double reference_duration) {
  PulseSpec p = pulse;
  switch (parameter) {
    case SweepParameter::pulse_area_fraction:
      if (value < 0.0) throw std::invalid_argument("pulse area must be >= 0");
      if (p.shape == PulseShape::rectangular) {
        if (p.duration == 0.0) {
          throw std::invalid_argument(
              "cannot set the area of a zero-duration pulse");
        }
        p.peak_rabi = value * kPi / p.duration;
      } else {
        p.peak_rabi = value / p.duration;
      }
      break;
    case SweepParameter::peak_rabi_times_t:
      if (value < 0.0) throw std::invalid_argument("Rabi frequency must be >= 0");
      p.peak_rabi = value / reference_duration;
      break;
    case SweepParameter::detuning_times_t:
      if (!std::holds_alternative<ConstantDetuning>(p.detuning)) {
        throw std::invalid_argument(
            "detuning sweep requires a constant-detuning pulse model");
      }
      p.detuning = ConstantDetuning{value / reference_duration};
      break;
    case SweepParameter::duration_fraction:
      if (value < 0.0 || (value == 0.0 && p.shape == PulseShape::sech)) {
        throw std::invalid_argument("duration fraction out of range");
      }
      p.duration = value * reference_duration;
      break;
  }
  return p;
}

std::string describe_pulse(const PulseSpec& pulse) {
  char buf[160];
  const char* shape = pulse.shape == PulseShape::rectangular ? "rect" : "sech";
  if (const auto* c = std::get_if<ConstantDetuning>(&pulse.detuning)) {
    std::snprintf(buf, sizeof buf,
                  "%s peak_rabi=%.12g duration=%.12g detuning=%.12g", shape,
                  pulse.peak_rabi, pulse.duration, c->delta);
  } else {
    std::snprintf(buf, sizeof buf,
                  "%s peak_rabi=%.12g duration=%.12g tanh_chirp=%.12g", shape,
                  pulse.peak_rabi, pulse.duration,
                  std::get<TanhChirp>(pulse.detuning).chirp);
  }
  std::string s = buf;
  if (pulse.shape == PulseShape::sech) {
    std::snprintf(buf, sizeof buf, " window=%.12g", pulse.window_half_width);
    s += buf;
  }
  return s;
}

ScanResult scan_1d(const SweepAxis& axis, const PhaseGateSequence& seq,
                   const PulseSpec& pulse_template,
                   const ScanOptions& options) {
  return run_scan({axis}, seq, pulse_template, options);
}

ScanResult scan_2d(const SweepAxis& axis_x, const SweepAxis& axis_y,
                   const PhaseGateSequence& seq,
                   const PulseSpec& pulse_template,
                   const ScanOptions& options) {
  if (axis_x.parameter == axis_y.parameter) {
    throw std::invalid_argument("scan_2d: axes must sweep distinct parameters");
  }
  return run_scan({axis_x, axis_y}, seq, pulse_template, options);
}

double high_fidelity_bandwidth(const ScanResult& result, double threshold) {
  if (result.axes.size() != 1) {
    throw std::invalid_argument("high_fidelity_bandwidth needs a 1D scan");
  }
  const auto x = result.axes[0].values();
  const std::size_t n = x.size();
  auto cell = [&](std::size_t i) {
    const double left = i > 0 ? x[i] - x[i - 1] : x[1] - x[0];
    const double right = i + 1 < n ? x[i + 1] - x[i] : x[n - 1] - x[n - 2];
    return 0.5 * (left + right);
  };

  double best = 0.0;
  double run = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (result.values[i] < threshold) {
      run += cell(i);
      best = std::max(best, run);
    } else {
      run = 0.0;
    }
  }
  return best;
}

double high_fidelity_fraction(const ScanResult& result, double threshold) {
  if (result.values.empty()) return 0.0;
  const auto hits = std::count_if(result.values.begin(), result.values.end(),
                                  [&](double f) { return f < threshold; });
  return static_cast<double>(hits) / static_cast<double>(result.values.size());
}

std::pair<double, double> Perturbation::direction() const {
  switch (kind) {
    case PerturbationKind::area:
      return {1.0, 0.0};
    case PerturbationKind::detuning:
      return {0.0, 1.0};
    case PerturbationKind::random_direction:
      break;
  }
  // Explicit 53-bit conversion keeps the direction identical across
  // standard libraries.
  std::mt19937_64 gen(seed);
  const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  const double theta = 2.0 * kPi * u;
  return {std::cos(theta), std::sin(theta)};
}

PulseSpec perturbed_pulse(double nominal_area, const Perturbation& p,
                          double eps) {
  const auto [amp, det] = p.direction();
  return PulseSpec::rectangular(nominal_area * (1.0 + eps * amp), eps * det);
}

double loglog_slope(std::span<const double> x, std::span<const double> y,
                    double noise_floor) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("loglog_slope: size mismatch");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int m = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(y[i] >= noise_floor) || !(x[i] > 0.0)) continue;
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  if (m < 3) {
    throw UnresolvedSlopeError(
        "error scaling unresolvable: fewer than 3 samples above the noise "
        "floor; use a larger eps range");
  }
  const double denom = m * sxx - sx * sx;
  return (m * sxy - sx * sy) / denom;
}

namespace {

std::vector<double> eps_samples(const ErrorOrderOptions& o) {
  if (!(o.eps_lo > 0.0) || !(o.eps_lo < o.eps_hi) || o.samples < 3) {
    throw std::invalid_argument(
        "error_order: need 0 < eps_lo < eps_hi and samples >= 3");
  }
  return SweepAxis{SweepParameter::pulse_area_fraction, o.eps_lo, o.eps_hi,
                   o.samples, Spacing::log}
      .values();
}

}  // namespace

double error_order(const PhaseGateSequence& seq, const Perturbation& p,
                   const ErrorOrderOptions& options) {
  const auto eps = eps_samples(options);
  std::vector<double> f(eps.size());
  const TargetGate target{seq.gate_phase};
  for (std::size_t i = 0; i < eps.size(); ++i) {
    const auto pulse = perturbed_pulse(seq.source.nominal_area, p, eps[i]);
    f[i] = infidelity(
        gate_propagator(seq, pulse_propagator(pulse, options.integrator)),
        target);
  }
  return loglog_slope(eps, f, options.noise_floor);
}

double error_order(const CompositePhases& cp, const Perturbation& p,
                   const ErrorOrderOptions& options) {
  const auto eps = eps_samples(options);
  std::vector<double> a(eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i) {
    const auto pulse = perturbed_pulse(cp.nominal_area, p, eps[i]);
    a[i] = std::abs(
        sequence_propagator(cp.phases,
                            pulse_propagator(pulse, options.integrator))
            .a);
  }
  return loglog_slope(eps, a, options.noise_floor);
}

}  // namespace cpgate
