#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "salpart/partition.hpp"

namespace salpart {

inline constexpr const char* kReportSchemaVersion = "1.0";

/// Serializable summary of a crop or partition run.
struct PartitionReport {
  std::string input_path;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t k = 1;
  double ratio = 1.0;
  /// Absent for the single-crop command, which takes a mass fraction instead.
  std::optional<double> epsilon;
  std::optional<double> tau_max;
  std::optional<bool> strict_disjoint;
  std::optional<double> threshold_fraction;
  PartitionResult result;
  /// Phase name -> milliseconds. Omitted (null) when not recorded.
  std::optional<std::vector<std::pair<std::string, double>>> timing;
};

/// Rounds to 6 significant digits, the precision used for every real in
/// reports.
double round_sig6(double value);

/// Pretty-printed JSON with a fixed field order, newline-terminated.
std::string to_json(const PartitionReport& report);

struct BenchRow {
  std::size_t k = 0;
  double ms_mean = 0.0;
  double ms_stddev = 0.0;
  std::uint64_t subarray_calls = 0;
  std::uint64_t rows_advanced = 0;
};

inline constexpr const char* kBenchCsvHeader =
    "k,ms_mean,ms_stddev,subarray_calls,rows_advanced";

std::string to_csv(const std::vector<BenchRow>& rows);

}  // namespace salpart
