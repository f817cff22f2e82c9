// cpgate: composite-pulse phase gate construction, evaluation and scans.
//
// All angles on the command line are in units of pi ("--phase-pi 0.5" is a
// pi/2 gate). Exit codes: 0 success, 1 I/O failure, 2 usage error,
// 3 numerical failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cpgate/presets.hpp"
#include "cpgate/scan_io.hpp"

namespace {

using namespace cpgate;

constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SequenceArgs {
  std::string family = "broadband";
  std::string variant = "n3";
  double phase_pi = 0.5;

  CompositePhases phases() const {
    return lookup_phases(parse_family(family), variant);
  }
};

struct PulseArgs {
  std::string shape = "rect";
  std::optional<double> area_pi;
  std::optional<double> rabi_t;
  double detuning_t = 0.0;
  std::optional<double> chirp_t;
  double window = 25.0;

  PulseSpec build(const CompositePhases& cp) const {
    const double area = area_pi ? *area_pi * kPi : cp.nominal_area;
    if (shape == "rect") {
      if (chirp_t) throw UsageError("--chirp-t requires --pulse sech");
      PulseSpec p = PulseSpec::rectangular(area, detuning_t);
      if (rabi_t) p.peak_rabi = *rabi_t;
      return p;
    }
    if (shape == "sech") {
      if (chirp_t && detuning_t != 0.0) {
        throw UsageError("--chirp-t and --detuning-t are mutually exclusive");
      }
      const DetuningModel det = chirp_t ? DetuningModel{TanhChirp{*chirp_t}}
                                        : DetuningModel{ConstantDetuning{detuning_t}};
      PulseSpec p = PulseSpec::sech(rabi_t ? *rabi_t : area / kPi, det);
      p.window_half_width = window;
      return p;
    }
    throw UsageError("--pulse must be rect or sech");
  }
};

struct NumericArgs {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int threads = 0;

  ScanOptions options() const {
    ScanOptions o;
    o.integrator.rel_tol = rel_tol;
    o.integrator.abs_tol = abs_tol;
    o.threads = threads;
    return o;
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void add_sequence_flags(CLI::App* cmd, SequenceArgs& s) {
  cmd->add_option("--family", s.family,
                  "broadband | detuning | universal")->capture_default_str();
  cmd->add_option("--variant", s.variant,
                  "n<odd> (broadband), n3/n5/n9 (detuning), U3..U13b")
      ->capture_default_str();
  cmd->add_option("--phase-pi", s.phase_pi, "gate phase in units of pi")
      ->capture_default_str();
}

void add_pulse_flags(CLI::App* cmd, PulseArgs& p) {
  cmd->add_option("--pulse", p.shape, "rect | sech")->capture_default_str();
  cmd->add_option("--area-pi", p.area_pi,
                  "per-pulse area in units of pi (default: nominal)");
  cmd->add_option("--rabi-t", p.rabi_t, "peak Rabi frequency times T");
  cmd->add_option("--detuning-t", p.detuning_t, "constant detuning times T")
      ->capture_default_str();
  cmd->add_option("--chirp-t", p.chirp_t, "tanh chirp amplitude B times T (sech)");
  cmd->add_option("--window", p.window, "sech window half-width in T")
      ->capture_default_str();
}

void add_numeric_flags(CLI::App* cmd, NumericArgs& n) {
  cmd->add_option("--rel-tol", n.rel_tol, "integrator relative tolerance")
      ->capture_default_str();
  cmd->add_option("--abs-tol", n.abs_tol, "integrator absolute tolerance")
      ->capture_default_str();
  cmd->add_option("--threads", n.threads, "worker cap (0 = all)")
      ->capture_default_str();
}

void record(RunManifest& m, const SequenceArgs& s, const PulseArgs& p,
            const NumericArgs& n) {
  m.add("family", s.family);
  m.add("variant", s.variant);
  m.add("phase_pi", num(s.phase_pi));
  m.add("pulse", p.shape);
  if (p.area_pi) m.add("area_pi", num(*p.area_pi));
  if (p.rabi_t) m.add("rabi_t", num(*p.rabi_t));
  m.add("detuning_t", num(p.detuning_t));
  if (p.chirp_t) m.add("chirp_t", num(*p.chirp_t));
  m.add("rel_tol", num(n.rel_tol));
  m.add("abs_tol", num(n.abs_tol));
}

void print_1d_summary(const ScanResult& r) {
  const double min_f = *std::min_element(r.values.begin(), r.values.end());
  std::cout << "min F: " << format_sci(min_f) << "\n"
            << "bandwidth F<1e-4: " << num(high_fidelity_bandwidth(r, 1e-4))
            << "\n"
            << "bandwidth F<1e-2: " << num(high_fidelity_bandwidth(r, 1e-2))
            << "\n";
}

void print_2d_summary(const ScanResult& r) {
  const double min_f = *std::min_element(r.values.begin(), r.values.end());
  std::cout << "min F: " << format_sci(min_f) << "\n"
            << "fraction F<1e-4: " << num(high_fidelity_fraction(r, 1e-4))
            << "\n"
            << "fraction F<1e-2: " << num(high_fidelity_fraction(r, 1e-2))
            << "\n";
}

int cmd_sequence(const SequenceArgs& s, bool list) {
  if (list) {
    std::cout << phase_table(all_phases());
    return 0;
  }
  const CompositePhases cp = s.phases();
  const PhaseGateSequence seq = make_phase_gate_sequence(cp, s.phase_pi * kPi);
  std::cout << "sequence: " << cp.label() << "\n"
            << "gate_phase_pi: " << num(s.phase_pi) << "\n"
            << "nominal_area_pi: " << format_pi_units(cp.nominal_area) << "\n"
            << "phases_pi: ";
  for (std::size_t k = 0; k < seq.phases.size(); ++k) {
    std::cout << (k ? ", " : "") << format_pi_units(seq.phases[k]);
  }
  std::cout << "\n";
  return 0;
}

int cmd_fidelity(const SequenceArgs& s, const PulseArgs& p,
                 const NumericArgs& n) {
  const CompositePhases cp = s.phases();
  const PhaseGateSequence seq = make_phase_gate_sequence(cp, s.phase_pi * kPi);
  const PulseSpec pulse = p.build(cp);
  const Propagator u = pulse_propagator(pulse, n.options().integrator);
  const double f = infidelity(gate_propagator(seq, u), TargetGate{seq.gate_phase});
  std::cout << format_sci(f) << "\n";
  return 0;
}

struct AxisArgs {
  std::vector<std::string> names;
  std::vector<std::string> ranges;
  std::vector<int> samples;
  std::string spacing = "linear";

  std::vector<SweepAxis> build() const {
    if (names.empty() || names.size() > 2) {
      throw UsageError("give one or two --axis flags");
    }
    if (ranges.size() != names.size() || samples.size() != names.size()) {
      throw UsageError("--range and --samples must be given once per --axis");
    }
    std::vector<SweepAxis> axes;
    for (std::size_t k = 0; k < names.size(); ++k) {
      SweepAxis ax;
      ax.parameter = parse_parameter(names[k]);
      const auto colon = ranges[k].find(':');
      if (colon == std::string::npos) {
        throw UsageError("--range must look like lo:hi, got '" + ranges[k] + "'");
      }
      try {
        ax.start = std::stod(ranges[k].substr(0, colon));
        ax.stop = std::stod(ranges[k].substr(colon + 1));
      } catch (const std::exception&) {
        throw UsageError("--range must look like lo:hi, got '" + ranges[k] + "'");
      }
      ax.samples = samples[k];
      if (spacing == "log") {
        ax.spacing = Spacing::log;
      } else if (spacing != "linear") {
        throw UsageError("--spacing must be linear or log");
      }
      ax.validate();
      axes.push_back(ax);
    }
    return axes;
  }
};

int cmd_scan(const SequenceArgs& s, const PulseArgs& p, const NumericArgs& n,
             const AxisArgs& a, const std::string& out) {
  const CompositePhases cp = s.phases();
  const PhaseGateSequence seq = make_phase_gate_sequence(cp, s.phase_pi * kPi);
  const PulseSpec pulse = p.build(cp);
  const auto axes = a.build();

  const ScanResult r =
      axes.size() == 1 ? scan_1d(axes[0], seq, pulse, n.options())
                       : scan_2d(axes[0], axes[1], seq, pulse, n.options());

  RunManifest m = RunManifest::now("scan");
  record(m, s, p, n);
  write_csv(out, r, m);
  std::cout << "wrote " << out << "\n";
  axes.size() == 1 ? print_1d_summary(r) : print_2d_summary(r);
  return 0;
}

int list_presets() {
  for (const auto& preset : all_presets()) {
    std::cout << preset.name << ": " << preset.description << "\n";
    for (const auto& c : preset.curves) std::cout << "  " << c.file_stem << "\n";
  }
  return 0;
}

int cmd_preset(const std::string& name, const std::string& out_dir,
               const NumericArgs& n) {
  const Preset& preset = find_preset(name);
  std::filesystem::create_directories(out_dir);

  std::string summary = "# cpgate preset " + preset.name + "\n# " +
                        preset.description + "\n";
  for (const auto& curve : preset.curves) {
    const ScanResult r = run_curve(curve, n.options());
    RunManifest m = RunManifest::now("preset " + preset.name);
    m.add("curve", curve.file_stem);
    m.add("rel_tol", num(n.rel_tol));
    m.add("abs_tol", num(n.abs_tol));
    const auto path = std::filesystem::path(out_dir) / (curve.file_stem + ".csv");
    write_csv(path, r, m);

    const double min_f = *std::min_element(r.values.begin(), r.values.end());
    summary += curve.file_stem + ": min_F=" + format_sci(min_f);
    if (r.axes.size() == 1) {
      summary += " bandwidth_1e-4=" + num(high_fidelity_bandwidth(r, 1e-4)) +
                 " bandwidth_1e-2=" + num(high_fidelity_bandwidth(r, 1e-2));
    } else {
      summary += " fraction_1e-4=" + num(high_fidelity_fraction(r, 1e-4)) +
                 " fraction_1e-2=" + num(high_fidelity_fraction(r, 1e-2));
    }
    summary += "\n";
    std::cout << "wrote " << path.string() << "\n";
  }
  const auto summary_path =
      std::filesystem::path(out_dir) / (preset.name + "_summary.txt");
  std::FILE* f = std::fopen(summary_path.c_str(), "wb");
  if (!f) throw std::runtime_error("cannot open " + summary_path.string());
  std::fputs(summary.c_str(), f);
  std::fclose(f);
  std::cout << summary;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Composite-pulse phase gates: sequences, fidelity, scans"};
  app.require_subcommand(0, 1);
  bool list_presets_flag = false;
  app.add_flag("--list-presets", list_presets_flag, "list figure presets");

  SequenceArgs seq_args;
  PulseArgs pulse_args;
  NumericArgs num_args;
  AxisArgs axis_args;
  std::string out = ".";
  std::string preset_name;
  bool list_sequences = false;

  auto* sequence = app.add_subcommand("sequence", "print the 2n gate phases");
  add_sequence_flags(sequence, seq_args);
  sequence->add_flag("--list", list_sequences, "print the sequence library");

  auto* fidelity = app.add_subcommand("fidelity", "infidelity at one point");
  add_sequence_flags(fidelity, seq_args);
  add_pulse_flags(fidelity, pulse_args);
  add_numeric_flags(fidelity, num_args);

  auto* scan = app.add_subcommand("scan", "1D or 2D infidelity scan to CSV");
  add_sequence_flags(scan, seq_args);
  add_pulse_flags(scan, pulse_args);
  add_numeric_flags(scan, num_args);
  scan->add_option("--axis", axis_args.names,
                   "area | detuning | rabi | duration (repeat for 2D)");
  scan->add_option("--range", axis_args.ranges, "lo:hi per axis");
  scan->add_option("--samples", axis_args.samples, "samples per axis");
  scan->add_option("--spacing", axis_args.spacing, "linear | log");
  scan->add_option("--out", out, "output CSV path")->required();

  auto* preset = app.add_subcommand("preset", "reproduce a figure preset");
  preset->add_option("name", preset_name, "fig1 | fig2 | fig3 | fig4");
  preset->add_option("--out", out, "output directory")->capture_default_str();
  preset->add_flag("--list-presets", list_presets_flag, "list figure presets");
  add_numeric_flags(preset, num_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (list_presets_flag) return list_presets();
    if (*sequence) return cmd_sequence(seq_args, list_sequences);
    if (*fidelity) return cmd_fidelity(seq_args, pulse_args, num_args);
    if (*scan) return cmd_scan(seq_args, pulse_args, num_args, axis_args, out);
    if (*preset) {
      if (preset_name.empty()) throw UsageError("preset needs a name");
      return cmd_preset(preset_name, out, num_args);
    }
    std::cerr << app.help();
    return kExitUsage;
  } catch (const IntegrationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const ScanError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
