#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cpgate/presets.hpp"
#include "cpgate/scan_io.hpp"

using namespace cpgate;

namespace {

RunManifest fixed_manifest() {
  RunManifest m;
  m.command = "test";
  m.timestamp = "2000-01-01T00:00:00Z";
  m.add("k", "v");
  return m;
}

}  // namespace

TEST(ScanCsv, GoldenOneDimensional) {
  const SweepAxis axis{SweepParameter::pulse_area_fraction, 0.8, 1.2, 3};
  const auto r = scan_1d(axis,
                         make_phase_gate_sequence(broadband_phases(3), kPi / 2),
                         PulseSpec::rectangular(kPi));
  const std::string csv = to_csv(r, fixed_manifest());
  const std::string expected =
      "# cpgate 0.1.0\n"
      "# command: test\n"
      "# timestamp: 2000-01-01T00:00:00Z\n"
      "# param: k=v\n"
      "# sequence: broadband/n3\n"
      "# gate_phase_pi: 0.5\n"
      "# phases_pi: 0 0.666666666667 0 1.25 1.91666666667 1.25\n"
      "# pulse: rect peak_rabi=3.14159265359 duration=1 detuning=0\n"
      "# rel_tol: 1.00000000000e-10\n"
      "# abs_tol: 1.00000000000e-12\n"
      "# axis: pulse_area_fraction linear 8.00000000000e-01 "
      "1.20000000000e+00 3\n"
      "# columns: x,F\n"
      "8.00000000000e-01,3.19397671981e-02\n";
  ASSERT_GE(csv.size(), expected.size());
  EXPECT_EQ(csv.substr(0, expected.size()), expected);

  const auto rows = parse_csv_rows(csv);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1][0], 1.0);
  EXPECT_LT(rows[1][1], 1e-12);
  EXPECT_EQ(rows[2][1], rows[0][1]);
}

TEST(ScanCsv, TwoDimensionalRowMajor) {
  const SweepAxis dur{SweepParameter::duration_fraction, 0.5, 1.5, 3};
  const SweepAxis det{SweepParameter::detuning_times_t, -1.0, 1.0, 2};
  const auto r = scan_2d(dur, det,
                         make_phase_gate_sequence(universal_phases("U5a"), kPi / 4),
                         PulseSpec::rectangular(kPi));
  const auto rows = parse_csv_rows(to_csv(r, fixed_manifest()));
  ASSERT_EQ(rows.size(), 6u);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      const auto& row = rows[static_cast<std::size_t>(i * 2 + j)];
      ASSERT_EQ(row.size(), 3u);
      EXPECT_EQ(row[0], dur.value(i));
      EXPECT_EQ(row[1], det.value(j));
      EXPECT_NEAR(row[2], r.at(i, j), 1e-11 * std::max(1.0, r.at(i, j)));
    }
  }
  EXPECT_NE(to_csv(r, fixed_manifest()).find("# columns: x,y,F\n"),
            std::string::npos);
}

TEST(ScanCsv, WriteFailureThrows) {
  const SweepAxis axis{SweepParameter::pulse_area_fraction, 0.8, 1.2, 3};
  const auto r = scan_1d(axis, make_phase_gate_sequence(broadband_phases(1), 0.0),
                         PulseSpec::rectangular(kPi));
  EXPECT_THROW(write_csv("/nonexistent-dir/x.csv", r, fixed_manifest()),
               std::runtime_error);

  const auto path = std::filesystem::temp_directory_path() / "cpgate_io_test.csv";
  write_csv(path, r, fixed_manifest());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), to_csv(r, fixed_manifest()));
  std::filesystem::remove(path);
}

TEST(Manifest, TimestampFormat) {
  const auto m = RunManifest::now("scan");
  EXPECT_EQ(m.timestamp.size(), 20u);
  EXPECT_EQ(m.timestamp.back(), 'Z');
  EXPECT_EQ(m.version, std::string(kVersion));
}

TEST(Presets, Catalogue) {
  ASSERT_EQ(all_presets().size(), 4u);
  EXPECT_EQ(find_preset("fig1").curves.size(), 8u);
  EXPECT_EQ(find_preset("fig2").curves.size(), 6u);
  EXPECT_EQ(find_preset("fig3").curves.size(), 6u);
  EXPECT_EQ(find_preset("fig4").curves.size(), 3u);
  EXPECT_THROW(find_preset("fig5"), std::invalid_argument);

  const auto& fig2 = find_preset("fig2").curves.front();
  EXPECT_EQ(std::get<TanhChirp>(fig2.pulse.detuning).chirp, 1.0);
  EXPECT_EQ(fig2.pulse.duration, 1.0);
  EXPECT_EQ(fig2.axes[0].samples, 1201);

  for (const auto& c : find_preset("fig3").curves) {
    EXPECT_NEAR(c.pulse.area(), c.phases.nominal_area, 1e-15) << c.file_stem;
  }
  const auto& fig4 = find_preset("fig4").curves;
  EXPECT_EQ(fig4[1].phases.variant, "U5a");
  EXPECT_EQ(fig4[2].phases.variant, "U5b");
  EXPECT_EQ(fig4[0].axes[0].samples * fig4[0].axes[1].samples, 301 * 301);
}
