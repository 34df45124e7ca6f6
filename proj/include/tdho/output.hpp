#pragma once

// CSV and SVG writers. Numbers are printed with "%.12g" in the C locale and
// lines end with '\n', so output is byte-stable across runs and platforms.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tdho/scenario.hpp"

namespace tdho {

inline constexpr std::string_view kCsvHeader = "t,S_L,S_von,negativity,U1,U2,alpha,gamma,diverged";

/// Value of a named output column. S_von and negativity are converted to
/// bits when asked. Throws ConfigError for an unknown name.
double record_value(const DynamicsRecord& r, std::string_view name, EntropyUnits units = EntropyUnits::nats);

std::string format_number(double v);

/// Canonical table with kCsvHeader.
std::string format_csv(std::span<const DynamicsRecord> records, EntropyUnits units);

/// t plus the requested auxiliary columns (gamma1, gamma2, h1, h2) in the
/// order given. Empty string when none of them was requested.
std::string format_aux_csv(std::span<const DynamicsRecord> records, const std::vector<std::string>& outputs);

struct Series {
  std::string label;
  std::span<const DynamicsRecord> records;
};

/// Minimal line plot of one quantity against t, one polyline per series.
/// Diverged samples are left out of the polyline.
std::string render_svg(std::string_view title, std::string_view quantity, std::span<const Series> series,
                       EntropyUnits units = EntropyUnits::nats);

/// Writes bytes as-is; creates parent directories.
void write_file(const std::filesystem::path& path, std::string_view contents);

/// File-name friendly rendering of a sweep value, e.g. 2.33 -> "2.33".
std::string value_tag(double v);

}  // namespace tdho
