#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "cpgate/scan.hpp"

namespace cpgate {

inline constexpr const char* kVersion = "0.1.0";

/// Provenance written as '#' lines ahead of every output file. Only the
/// "# timestamp:" line varies between identical runs.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string version = kVersion;
  std::string timestamp;

  /// Manifest for `command` stamped with the current UTC time.
  static RunManifest now(std::string command);

  void add(std::string key, std::string value) {
    parameters.emplace_back(std::move(key), std::move(value));
  }
  std::string header_lines() const;
};

/// "%.11e": fixed scientific notation with 12 significant digits.
std::string format_sci(double v);

/// CSV contract: '#' header lines (manifest, then scan metadata and axes,
/// then "# columns: x[,y],F"), then one row "x[,y],F" per grid point in
/// row-major order.
std::string to_csv(const ScanResult& result, const RunManifest& manifest);

/// Throws std::runtime_error on I/O failure.
void write_csv(const std::filesystem::path& path, const ScanResult& result,
               const RunManifest& manifest);

/// Data rows of a CSV written by to_csv; header lines are skipped.
std::vector<std::vector<double>> parse_csv_rows(const std::string& text);

}  // namespace cpgate
