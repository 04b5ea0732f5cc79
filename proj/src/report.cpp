#include "salpart/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace salpart {
namespace {

using Json = nlohmann::ordered_json;

Json real(double v) { return round_sig6(v); }

template <typename T>
Json optional_value(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, double>) {
    return real(*v);
  } else {
    return *v;
  }
}

std::string format_sig6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

double round_sig6(double value) {
  if (!std::isfinite(value) || value == 0.0) return value;
  return std::strtod(format_sig6(value).c_str(), nullptr);
}

std::string to_json(const PartitionReport& report) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["input"] = {{"path", report.input_path}, {"rows", report.rows}, {"cols", report.cols}};
  j["config"] = {{"k", report.k},
                 {"ratio", real(report.ratio)},
                 {"epsilon", optional_value(report.epsilon)},
                 {"tau_max", optional_value(report.tau_max)},
                 {"strict_disjoint", optional_value(report.strict_disjoint)},
                 {"threshold_fraction", optional_value(report.threshold_fraction)}};

  Json boxes = Json::array();
  for (const CropBox& b : report.result.boxes) {
    boxes.push_back({{"top", b.top},
                     {"left", b.left},
                     {"bottom", b.bottom},
                     {"right", b.right},
                     {"mass", real(b.mass)}});
  }
  j["boxes"] = std::move(boxes);

  Json lines = Json::array();
  for (const BoundaryLine& l : report.result.boundaries) {
    lines.push_back({{"orientation", std::string(orientation_name(l.orientation))},
                     {"position", l.position},
                     {"span", {l.span_start, l.span_end}},
                     {"between", {l.first, l.second}}});
  }
  j["boundaries"] = std::move(lines);

  Json rounds = Json::array();
  for (const RoundDiagnostics& r : report.result.rounds) {
    rounds.push_back({{"round_index", r.round_index},
                      {"S_r_before", real(r.remaining_before)},
                      {"T_used", real(r.threshold)},
                      {"outcome", r.found() ? "found" : "absent"},
                      {"windows_searched", r.windows_searched},
                      {"rows_advanced", r.rows_advanced}});
  }
  j["rounds"] = std::move(rounds);

  if (report.timing) {
    Json timing = Json::object();
    for (const auto& [phase, ms] : *report.timing) timing[phase] = real(ms);
    j["timing"] = std::move(timing);
  } else {
    j["timing"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << kBenchCsvHeader << '\n';
  for (const BenchRow& r : rows) {
    out << r.k << ',' << format_sig6(r.ms_mean) << ',' << format_sig6(r.ms_stddev) << ','
        << r.subarray_calls << ',' << r.rows_advanced << '\n';
  }
  return out.str();
}

}  // namespace salpart
