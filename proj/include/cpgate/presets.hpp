#pragma once

#include <string>
#include <vector>

#include "cpgate/scan.hpp"

namespace cpgate {

/// One curve or map of a figure preset.
struct PresetCurve {
  std::string file_stem;  // output file name without ".csv"
  CompositePhases phases;
  double gate_phase = 0.0;
  PulseSpec pulse;
  std::vector<SweepAxis> axes;  // 1 or 2

  PhaseGateSequence sequence() const {
    return make_phase_gate_sequence(phases, gate_phase);
  }
};

struct Preset {
  std::string name;
  std::string description;
  std::vector<PresetCurve> curves;
};

/// fig1 .. fig4. The grid ranges are conventions chosen to show each
/// figure's features; they are not taken from published data.
const std::vector<Preset>& all_presets();

/// Throws std::invalid_argument for an unknown name.
const Preset& find_preset(const std::string& name);

ScanResult run_curve(const PresetCurve& curve, const ScanOptions& options = {});

}  // namespace cpgate
