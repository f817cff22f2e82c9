#include "cpgate/scan_io.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cpgate {

RunManifest RunManifest::now(std::string command) {
  RunManifest m;
  m.command = std::move(command);
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  m.timestamp = buf;
  return m;
}

std::string RunManifest::header_lines() const {
  std::string s = "# cpgate " + version + "\n# command: " + command + "\n";
  s += "# timestamp: " + timestamp + "\n";
  for (const auto& [k, v] : parameters) s += "# param: " + k + "=" + v + "\n";
  return s;
}

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

std::string to_csv(const ScanResult& result, const RunManifest& manifest) {
  std::string s = manifest.header_lines();
  const auto& md = result.metadata;
  s += "# sequence: " + md.sequence + "\n";
  s += "# gate_phase_pi: " + format_pi_units(md.gate_phase) + "\n";
  s += "# phases_pi:";
  for (double p : md.phases) s += " " + format_pi_units(p);
  s += "\n# pulse: " + md.pulse_model + "\n";
  s += "# rel_tol: " + format_sci(md.integrator.rel_tol) + "\n";
  s += "# abs_tol: " + format_sci(md.integrator.abs_tol) + "\n";
  for (const auto& ax : result.axes) {
    s += "# axis: " + std::string(parameter_name(ax.parameter)) + " " +
         (ax.spacing == Spacing::linear ? "linear " : "log ") +
         format_sci(ax.start) + " " + format_sci(ax.stop) + " " +
         std::to_string(ax.samples) + "\n";
  }
  s += result.axes.size() == 1 ? "# columns: x,F\n" : "# columns: x,y,F\n";

  if (result.axes.size() == 1) {
    const auto x = result.axes[0].values();
    for (std::size_t i = 0; i < x.size(); ++i) {
      s += format_sci(x[i]) + "," + format_sci(result.values[i]) + "\n";
    }
  } else {
    const auto x = result.axes[0].values();
    const auto y = result.axes[1].values();
    std::size_t k = 0;
    for (double xv : x) {
      const std::string xs = format_sci(xv) + ",";
      for (double yv : y) {
        s += xs + format_sci(yv) + "," + format_sci(result.values[k++]) + "\n";
      }
    }
  }
  return s;
}

void write_csv(const std::filesystem::path& path, const ScanResult& result,
               const RunManifest& manifest) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << to_csv(result, manifest);
  out.close();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::vector<std::vector<double>> parse_csv_rows(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) row.push_back(std::stod(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cpgate
