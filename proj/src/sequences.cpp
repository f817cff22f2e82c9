#include "cpgate/sequences.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace cpgate {

namespace {

// Phases in units of pi.
CompositePhases from_pi_units(Family family, std::string variant,
                              std::initializer_list<double> units,
                              double nominal_area) {
  CompositePhases cp{family, std::move(variant), {}, nominal_area};
  cp.phases.reserve(units.size());
  for (double u : units) cp.phases.push_back(reduce_phase(u * kPi));
  return cp;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::broadband:
      return "broadband";
    case Family::detuning_compensated:
      return "detuning";
    case Family::universal:
      return "universal";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "broadband" || name == "bb") return Family::broadband;
  if (name == "detuning" || name == "detuning_compensated") {
    return Family::detuning_compensated;
  }
  if (name == "universal" || name == "u") return Family::universal;
  throw std::invalid_argument("unknown sequence family '" + std::string(name) +
                              "'");
}

std::string CompositePhases::label() const {
  return std::string(family_name(family)) + "/" + variant;
}

CompositePhases broadband_phases(int n) {
  if (n < 1 || n % 2 == 0 || n > kMaxBroadbandPulses) {
    throw std::invalid_argument(
        "broadband_phases: n must be odd and in [1, 25], got " +
        std::to_string(n));
  }
  CompositePhases cp{Family::broadband, "n" + std::to_string(n), {}, kPi};
  for (int k = 1; k <= n; ++k) {
    // k(k-1)/n in units of pi, reduced mod 2 with integer arithmetic
    const int numerator = (k * (k - 1)) % (2 * n);
    cp.phases.push_back(numerator * kPi / n);
  }
  return cp;
}

CompositePhases detuning_phases(std::string_view variant) {
  const Family f = Family::detuning_compensated;
  if (variant == "n3") {
    return from_pi_units(f, "n3", {0.0, 1.0 / 3.0, 0.0}, kPi);
  }
  if (variant == "n5") {
    return from_pi_units(f, "n5", {0.0, 0.747, 0.424, 0.747, 0.0},
                         3.0 * kPi / 5.0);
  }
  if (variant == "n9") {
    return from_pi_units(
        f, "n9",
        {0.0, 1.308, 1.153, 1.251, 0.562, 1.251, 1.153, 1.308, 0.0},
        4.0 * kPi / 9.0);
  }
  throw std::invalid_argument("detuning_phases: unknown variant '" +
                              std::string(variant) + "' (expected n3, n5, n9)");
}

CompositePhases universal_phases(std::string_view name) {
  const Family f = Family::universal;
  const std::string v(name);
  if (name == "U3") return from_pi_units(f, v, {0.0, 0.5, 0.0}, kPi);
  if (name == "U5a") {
    return from_pi_units(f, v, {0.0, 5.0 / 6, 1.0 / 3, 5.0 / 6, 0.0}, kPi);
  }
  if (name == "U5b") {
    return from_pi_units(f, v, {0.0, 11.0 / 6, 1.0 / 3, 11.0 / 6, 0.0}, kPi);
  }
  if (name == "U7a") {
    return from_pi_units(
        f, v, {0.0, 11.0 / 12, 5.0 / 6, 17.0 / 12, 5.0 / 6, 11.0 / 12, 0.0},
        kPi);
  }
  if (name == "U7b") {
    return from_pi_units(
        f, v, {0.0, 23.0 / 12, 5.0 / 6, 5.0 / 12, 5.0 / 6, 23.0 / 12, 0.0},
        kPi);
  }
  if (name == "U13a") {
    return from_pi_units(f, v,
                         {0.0, 9.0 / 24, 42.0 / 24, 11.0 / 24, 8.0 / 24,
                          37.0 / 24, 2.0 / 24, 37.0 / 24, 8.0 / 24, 11.0 / 24,
                          42.0 / 24, 9.0 / 24, 0.0},
                         kPi);
  }
  if (name == "U13b") {
    return from_pi_units(f, v,
                         {0.0, 33.0 / 24, 42.0 / 24, 35.0 / 24, 8.0 / 24,
                          13.0 / 24, 2.0 / 24, 13.0 / 24, 8.0 / 24, 35.0 / 24,
                          42.0 / 24, 33.0 / 24, 0.0},
                         kPi);
  }
  throw std::invalid_argument("universal_phases: unknown name '" + v + "'");
}

CompositePhases lookup_phases(Family family, std::string_view variant) {
  switch (family) {
    case Family::broadband: {
      int n = 0;
      const char* first = variant.data() + 1;
      const char* last = variant.data() + variant.size();
      if (variant.size() < 2 || variant.front() != 'n' ||
          std::from_chars(first, last, n).ptr != last) {
        throw std::invalid_argument("broadband variant must look like n5, got '" +
                                    std::string(variant) + "'");
      }
      return broadband_phases(n);
    }
    case Family::detuning_compensated:
      return detuning_phases(variant);
    case Family::universal:
      return universal_phases(variant);
  }
  throw std::invalid_argument("lookup_phases: bad family");
}

std::vector<CompositePhases> all_phases() {
  std::vector<CompositePhases> out;
  for (int n : {1, 3, 5, 7, 9, 11, 13}) out.push_back(broadband_phases(n));
  for (const char* v : {"n3", "n5", "n9"}) out.push_back(detuning_phases(v));
  for (const char* v : {"U3", "U5a", "U5b", "U7a", "U7b", "U13a", "U13b"}) {
    out.push_back(universal_phases(v));
  }
  return out;
}

PhaseGateSequence make_phase_gate_sequence(const CompositePhases& cp,
                                           double gate_phase) {
  PhaseGateSequence seq{gate_phase, {}, cp};
  seq.phases.reserve(2 * cp.size());
  for (double p : cp.phases) seq.phases.push_back(reduce_phase(p));
  const double shift = kPi + 0.5 * gate_phase;
  for (double p : cp.phases) seq.phases.push_back(reduce_phase(p + shift));
  return seq;
}

Propagator gate_propagator(const PhaseGateSequence& seq,
                           const Propagator& pulse) {
  return sequence_propagator(seq.phases, pulse);
}

std::string format_pi_units(double radians) {
  char buf[32];
  const double v = radians / kPi;
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string phase_table(const std::vector<CompositePhases>& sequences) {
  std::string out = "# name,n,phases_pi,nominal_area_pi\n";
  for (const auto& cp : sequences) {
    out += cp.label();
    out += ',';
    out += std::to_string(cp.size());
    out += ',';
    for (std::size_t k = 0; k < cp.size(); ++k) {
      if (k) out += ' ';
      out += format_pi_units(cp.phases[k]);
    }
    out += ',';
    out += format_pi_units(cp.nominal_area);
    out += '\n';
  }
  return out;
}

}  // namespace cpgate
