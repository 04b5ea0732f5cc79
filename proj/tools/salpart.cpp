// Command-line front end: crop, partition, synth and bench subcommands.
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "salpart/far_crop.hpp"
#include "salpart/image.hpp"
#include "salpart/integral.hpp"
#include "salpart/io.hpp"
#include "salpart/partition.hpp"
#include "salpart/render.hpp"
#include "salpart/report.hpp"
#include "salpart/synth.hpp"

namespace {

using namespace salpart;

enum Exit : int { kOk = 0, kUsage = 1, kIo = 2, kInfeasible = 3, kPartial = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Stopwatch {
 public:
  double lap_ms() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

struct InputArgs {
  std::string path;
  std::string format;
};

void add_input_flags(CLI::App& cmd, InputArgs& in) {
  cmd.add_option("--input", in.path, "Saliency map file")->required();
  cmd.add_option("--format", in.format, "png-gray | pgm | raw-f32 | csv (default: by extension)")
      ->check(CLI::IsMember({"png-gray", "pgm", "raw-f32", "csv"}));
}

SaliencyMap load_input(const InputArgs& in) {
  std::optional<MapFormat> format =
      in.format.empty() ? format_from_extension(in.path) : parse_format(in.format);
  if (!format) throw UsageError("cannot infer the format of " + in.path + "; pass --format");
  return load_saliency(in.path, *format);
}

const CLI::Validator kUnitFraction(
    [](std::string& s) -> std::string {
      double v = 0.0;
      try {
        v = std::stod(s);
      } catch (const std::exception&) {
        return "not a number";
      }
      return v > 0.0 && v <= 1.0 ? std::string() : "must lie in (0, 1]";
    },
    "(0,1]");

const CLI::Validator kPositiveReal(
    [](std::string& s) -> std::string {
      double v = 0.0;
      try {
        v = std::stod(s);
      } catch (const std::exception&) {
        return "not a number";
      }
      return v > 0.0 && std::isfinite(v) ? std::string() : "must be positive";
    },
    "POSITIVE");

void print_report(const PartitionReport& report) { std::cout << to_json(report); }

// ---------------------------------------------------------------------------

struct CropArgs {
  InputArgs input;
  double ratio = 1.0;
  double fraction = 0.5;
  bool no_timing = false;
};

int run_crop(const CropArgs& args) {
  Stopwatch clock;
  std::vector<std::pair<std::string, double>> timing;
  const SaliencyMap map = load_input(args.input);
  timing.emplace_back("load", clock.lap_ms());

  const IntegralMap integral = build_integral(map);
  const ColumnIntegralMap colint = build_column_integral(map);
  timing.emplace_back("integral", clock.lap_ms());

  const double total = integral.total();
  const double threshold = args.fraction * total;
  const CropSearchOutcome outcome = smallest_far_crop(map, colint, args.ratio, threshold);
  timing.emplace_back("search", clock.lap_ms());

  PartitionReport report;
  report.input_path = args.input.path;
  report.rows = map.rows();
  report.cols = map.cols();
  report.k = 1;
  report.ratio = args.ratio;
  report.threshold_fraction = args.fraction;
  report.result.rows = map.rows();
  report.result.cols = map.cols();
  report.result.initial_mass = total;
  RoundDiagnostics round;
  round.round_index = 1;
  round.remaining_before = total;
  round.threshold = threshold;
  round.box = outcome.box;
  round.windows_searched = outcome.windows_searched;
  round.rows_advanced = outcome.rows_advanced;
  report.result.rounds.push_back(round);
  if (outcome.box) {
    report.result.boxes.push_back(*outcome.box);
    report.result.remaining_mass = total - outcome.box->mass;
  } else {
    report.result.remaining_mass = total;
  }
  if (!args.no_timing) report.timing = timing;
  print_report(report);

  if (!outcome.box) {
    std::cerr << "no crop with ratio " << args.ratio << " reaches " << args.fraction
              << " of the total mass\n";
    return kInfeasible;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct PartitionArgs {
  InputArgs input;
  PartitionConfig config;
  bool allow_partial = false;
  std::string overlay;
  std::string base;
  std::size_t stroke = 2;
  bool no_timing = false;
};

int run_partition(const PartitionArgs& args) {
  Stopwatch clock;
  std::vector<std::pair<std::string, double>> timing;
  const SaliencyMap map = load_input(args.input);
  timing.emplace_back("load", clock.lap_ms());

  // The library always returns partial results; the exit code carries the
  // --allow-partial policy.
  PartitionConfig config = args.config;
  config.allow_partial = true;
  PartitionResult result = partition(map, config);
  timing.emplace_back("partition", clock.lap_ms());

  for (const auto& [a, b] : result.overlapping_pairs) {
    std::cerr << "boxes " << a << " and " << b << " overlap; no boundary emitted\n";
  }

  if (!args.overlay.empty()) {
    OverlaySpec spec;
    spec.stroke = args.stroke;
    RgbImage base;
    if (args.base.empty()) {
      base = saliency_to_rgb(map);
    } else {
      spec.base = OverlayBase::source_image;
      base = read_png_rgb(args.base);
      if (base.rows != map.rows() || base.cols != map.cols()) {
        throw IoError("base image " + args.base + " does not match the saliency map size");
      }
    }
    write_png_rgb(args.overlay, render_overlay(base, result, spec));
    timing.emplace_back("render", clock.lap_ms());
  }

  PartitionReport report;
  report.input_path = args.input.path;
  report.rows = map.rows();
  report.cols = map.cols();
  report.k = config.k;
  report.ratio = config.ratio;
  report.epsilon = config.epsilon;
  report.tau_max = config.tau_max;
  report.strict_disjoint = config.strict_disjoint;
  report.result = std::move(result);
  if (!args.no_timing) report.timing = timing;
  print_report(report);

  const std::size_t found = report.result.boxes.size();
  if (found == config.k) return kOk;
  std::cerr << "found " << found << " of " << config.k << " crops\n";
  return args.allow_partial ? kPartial : kInfeasible;
}

// ---------------------------------------------------------------------------

struct SynthArgs {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::string> blobs;
  std::string out;
};

Blob parse_blob(const std::string& text) {
  std::vector<double> fields;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad --blob '" + text + "'");
    }
    if (used != item.size()) throw UsageError("bad --blob '" + text + "'");
    fields.push_back(v);
  }
  if (fields.size() != 4) throw UsageError("--blob expects row,col,sigma,amp; got '" + text + "'");
  if (!(fields[2] > 0.0) || !(fields[3] > 0.0)) {
    throw UsageError("--blob sigma and amplitude must be positive");
  }
  return Blob{fields[0], fields[1], fields[2], fields[3]};
}

int run_synth(const SynthArgs& args) {
  std::vector<Blob> blobs;
  for (const std::string& b : args.blobs) blobs.push_back(parse_blob(b));
  write_raw_f32(args.out, synth_blobs(args.rows, args.cols, blobs));
  return kOk;
}

// ---------------------------------------------------------------------------

struct BenchArgs {
  std::size_t rows = 512;
  std::size_t cols = 512;
  std::size_t k_max = 8;
  double ratio = 1.0;
  std::size_t repeats = 5;
  std::uint64_t seed = 1;
  std::string csv;
};

int run_bench(const BenchArgs& args) {
  const SaliencyMap map = random_scene(args.rows, args.cols, args.seed);
  std::vector<BenchRow> table;
  for (std::size_t k = 1; k <= args.k_max; ++k) {
    PartitionConfig config;
    config.k = k;
    config.ratio = args.ratio;
    std::vector<double> times;
    PartitionResult last;
    for (std::size_t rep = 0; rep < args.repeats; ++rep) {
      Stopwatch clock;
      last = partition(map, config);
      times.push_back(clock.lap_ms());
    }
    BenchRow row;
    row.k = k;
    row.ms_mean = std::accumulate(times.begin(), times.end(), 0.0) / times.size();
    if (times.size() > 1) {
      double sq = 0.0;
      for (double t : times) sq += (t - row.ms_mean) * (t - row.ms_mean);
      row.ms_stddev = std::sqrt(sq / static_cast<double>(times.size() - 1));
    }
    for (const RoundDiagnostics& r : last.rounds) {
      row.subarray_calls += r.windows_searched;
      row.rows_advanced += r.rows_advanced;
    }
    table.push_back(row);
    std::cerr << "k=" << k << " boxes=" << last.boxes.size() << " ms=" << row.ms_mean << "\n";
  }

  const std::string text = to_csv(table);
  if (args.csv.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(args.csv, std::ios::trunc);
  out << text;
  out.flush();
  if (!out) throw IoError("cannot write " + args.csv);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-region saliency partitioning"};
  app.require_subcommand(1);

  CropArgs crop;
  auto* crop_cmd = app.add_subcommand("crop", "Smallest fixed-ratio crop holding a mass fraction");
  add_input_flags(*crop_cmd, crop.input);
  crop_cmd->add_option("--ratio", crop.ratio, "Aspect ratio, width / height")
      ->check(kPositiveReal);
  crop_cmd->add_option("--threshold-fraction", crop.fraction, "Fraction of total mass, in (0, 1]")
      ->required()
      ->check(kUnitFraction);
  crop_cmd->add_flag("--no-timing", crop.no_timing, "Emit timing as null");

  PartitionArgs part;
  auto* part_cmd = app.add_subcommand("partition", "Split the map into k disjoint crop regions");
  add_input_flags(*part_cmd, part.input);
  part_cmd->add_option("--k", part.config.k, "Number of crops")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  part_cmd->add_option("--ratio", part.config.ratio, "Aspect ratio, width / height")
      ->check(kPositiveReal);
  part_cmd->add_option("--epsilon", part.config.epsilon, "Threshold margin")
      ->check(CLI::NonNegativeNumber);
  part_cmd->add_option("--tau-max", part.config.tau_max, "Threshold clamp fraction")
      ->check(kUnitFraction);
  part_cmd->add_flag("--strict,!--no-strict", part.config.strict_disjoint,
                     "Reject crops that overlap earlier ones (default on)");
  part_cmd->add_flag("--allow-partial", part.allow_partial, "Exit 4 instead of 3 on < k crops");
  part_cmd->add_option("--overlay", part.overlay, "Write an overlay PNG here");
  part_cmd->add_option("--base", part.base, "Source image PNG for the overlay");
  part_cmd->add_option("--stroke", part.stroke, "Overlay stroke width")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  part_cmd->add_flag("--no-timing", part.no_timing, "Emit timing as null");

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Write a Gaussian-blob map as raw-f32");
  synth_cmd->add_option("--rows", synth.rows)->required()->check(CLI::PositiveNumber);
  synth_cmd->add_option("--cols", synth.cols)->required()->check(CLI::PositiveNumber);
  synth_cmd->add_option("--blob", synth.blobs, "row,col,sigma,amp (repeatable)");
  synth_cmd->add_option("--out", synth.out)->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time partition for k = 1..K");
  bench_cmd->add_option("--rows", bench.rows)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--cols", bench.cols)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--k-max", bench.k_max)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--ratio", bench.ratio)->check(kPositiveReal);
  bench_cmd->add_option("--repeats", bench.repeats)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--csv", bench.csv, "Output CSV (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*crop_cmd) return run_crop(crop);
    if (*part_cmd) return run_partition(part);
    if (*synth_cmd) return run_synth(synth);
    if (*bench_cmd) return run_bench(bench);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }
  return kUsage;
}
