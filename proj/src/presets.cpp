#include "cpgate/presets.hpp"

#include <stdexcept>

namespace cpgate {

namespace {

std::string phase_tag(double gate_phase_pi) {
  return gate_phase_pi == 0.5 ? "phi0.5" : "phi0.25";
}

Preset make_fig1() {
  Preset p{"fig1",
           "broadband gates n=1,3,5,9; rect resonant pulses; A/pi in "
           "[0.5,1.5], 2001 points; phase pi/2 and pi/4",
           {}};
  const SweepAxis axis{SweepParameter::pulse_area_fraction, 0.5, 1.5, 2001};
  for (double phi : {0.5, 0.25}) {
    for (int n : {1, 3, 5, 9}) {
      p.curves.push_back({"fig1_bb_n" + std::to_string(n) + "_" + phase_tag(phi),
                          broadband_phases(n), phi * kPi,
                          PulseSpec::rectangular(kPi), {axis}});
    }
  }
  return p;
}

Preset make_fig2() {
  Preset p{"fig2",
           "adiabatic gates n=1,3,5 (broadband phases); sech pulses with "
           "tanh chirp B=1/T; Omega0 T in [0,12], 1201 points; phase pi/2 "
           "and pi/4",
           {}};
  const SweepAxis axis{SweepParameter::peak_rabi_times_t, 0.0, 12.0, 1201};
  for (double phi : {0.5, 0.25}) {
    for (int n : {1, 3, 5}) {
      p.curves.push_back({"fig2_adiabatic_n" + std::to_string(n) + "_" +
                              phase_tag(phi),
                          broadband_phases(n), phi * kPi,
                          PulseSpec::sech(4.0, TanhChirp{1.0}), {axis}});
    }
  }
  return p;
}

Preset make_fig3() {
  Preset p{"fig3",
           "detuning-compensated gates: single sech pair (n=1), n5, n9 at "
           "their nominal per-pulse areas; Delta T in [-3,3], 1201 points; "
           "phase pi/2 and pi/4",
           {}};
  const SweepAxis axis{SweepParameter::detuning_times_t, -3.0, 3.0, 1201};
  for (double phi : {0.5, 0.25}) {
    for (const CompositePhases& cp :
         {broadband_phases(1), detuning_phases("n5"), detuning_phases("n9")}) {
      // sech area pi * Omega0 * T
      const PulseSpec pulse =
          PulseSpec::sech(cp.nominal_area / kPi, ConstantDetuning{0.0});
      const std::string tag =
          cp.family == Family::broadband ? "n1" : cp.variant;
      p.curves.push_back({"fig3_detuning_" + tag + "_" + phase_tag(phi), cp,
                          phi * kPi, pulse, {axis}});
    }
  }
  return p;
}

Preset make_fig4() {
  Preset p{"fig4",
           "universal gates vs single pulse pair, phase pi/4; rect pulses; "
           "T/T0 in [0,2] x Delta T0 in [-2,2], 301x301",
           {}};
  const SweepAxis duration{SweepParameter::duration_fraction, 0.0, 2.0, 301};
  const SweepAxis detuning{SweepParameter::detuning_times_t, -2.0, 2.0, 301};
  for (const CompositePhases& cp :
       {broadband_phases(1), universal_phases("U5a"),
        universal_phases("U5b")}) {
    const std::string tag = cp.family == Family::broadband ? "n1" : cp.variant;
    p.curves.push_back({"fig4_" + tag + "_phi0.25", cp, 0.25 * kPi,
                        PulseSpec::rectangular(kPi), {duration, detuning}});
  }
  return p;
}

}  // namespace

const std::vector<Preset>& all_presets() {
  static const std::vector<Preset> presets = {make_fig1(), make_fig2(),
                                              make_fig3(), make_fig4()};
  return presets;
}

const Preset& find_preset(const std::string& name) {
  for (const auto& p : all_presets()) {
    if (p.name == name) return p;
  }
  throw std::invalid_argument("unknown preset '" + name + "'");
}

ScanResult run_curve(const PresetCurve& curve, const ScanOptions& options) {
  const auto seq = curve.sequence();
  if (curve.axes.size() == 1) {
    return scan_1d(curve.axes[0], seq, curve.pulse, options);
  }
  return scan_2d(curve.axes[0], curve.axes[1], seq, curve.pulse, options);
}

}  // namespace cpgate
