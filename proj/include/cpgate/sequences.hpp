#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cpgate/su2.hpp"

namespace cpgate {

enum class Family { broadband, detuning_compensated, universal };

std::string_view family_name(Family f);
/// Accepts "broadband"/"bb", "detuning"/"detuning_compensated",
/// "universal"/"u". Throws std::invalid_argument otherwise.
Family parse_family(std::string_view name);

/// Phases (radians, in [0, 2pi)) of an n-pulse composite inversion pulse.
struct CompositePhases {
  Family family = Family::broadband;
  std::string variant;         // "n3", "U5a", ...
  std::vector<double> phases;  // phases[0] acts first
  double nominal_area = kPi;   // per-pulse area the sequence is designed for

  std::size_t size() const { return phases.size(); }
  /// e.g. "broadband/n5"
  std::string label() const;
};

/// The 2n-pulse phase gate: the composite pulse followed by a copy of it with
/// every phase advanced by pi + gate_phase/2.
struct PhaseGateSequence {
  double gate_phase = 0.0;
  std::vector<double> phases;
  CompositePhases source;
};

inline constexpr int kMaxBroadbandPulses = 25;

/// phi_k = k(k-1) pi / n, k = 1..n. n must be odd and in [1, 25].
CompositePhases broadband_phases(int n);

/// Detuning-compensated pulses: variant "n3", "n5" or "n9", with nominal
/// per-pulse areas pi, 3pi/5 and 4pi/9.
CompositePhases detuning_phases(std::string_view variant);

/// Universal inversion pulses U3, U5a, U5b, U7a, U7b, U13a, U13b.
CompositePhases universal_phases(std::string_view name);

/// Dispatches on family. Broadband variants are written "n<odd int>".
CompositePhases lookup_phases(Family family, std::string_view variant);

/// Every sequence shipped in the library, in a fixed order.
std::vector<CompositePhases> all_phases();

PhaseGateSequence make_phase_gate_sequence(const CompositePhases& cp,
                                           double gate_phase);

Propagator gate_propagator(const PhaseGateSequence& seq,
                           const Propagator& pulse);

/// Plain-text audit table: header line, then one row per sequence as
/// "label,n,phases in units of pi (space separated),nominal area / pi",
/// numbers rendered with 12 significant digits.
std::string phase_table(const std::vector<CompositePhases>& sequences);

/// One number in units of pi with 12 significant digits, e.g. "0.5".
std::string format_pi_units(double radians);

}  // namespace cpgate
