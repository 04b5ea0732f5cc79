// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "salpart/far_crop.hpp"
#include "salpart/integral.hpp"
#include "salpart/io.hpp"
#include "salpart/partition.hpp"
#include "salpart/render.hpp"
#include "salpart/report.hpp"
#include "salpart/subarray.hpp"
#include "salpart/synth.hpp"
#include "support/cli_runner.hpp"
#include "support/oracles.hpp"
#include "support/temp_dir.hpp"

namespace {

using namespace salpart;
using testing::naive_box_sum;
using testing::random_integer_map;
using testing::uniform_size;

struct Verdict {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) detail << what;
    ok = ok && condition;
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s,
               const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0) {
    std::ostringstream msg;
    msg << "took " << seconds << " s, limit " << limit_s << " s";
    v.require(seconds < limit_s, msg.str());
  }
  if (!v.ok) ++failures;
  std::printf("%s %d %s (%.3f s)%s%s\n", v.ok ? "PASS" : "FAIL", id, name.c_str(), seconds,
              v.ok ? "" : ": ", v.ok ? "" : v.detail.str().c_str());
  std::fflush(stdout);
}

// Suite 4 cases, shared with criteria 5 and 7.
struct GreedyCase {
  SaliencyMap map;
  PartitionConfig config;
  PartitionResult result;
};
std::vector<GreedyCase> greedy_cases;
std::vector<PartitionResult> linearity_results;

bool pairwise_disjoint(const std::vector<CropBox>& boxes) {
  for (std::size_t a = 0; a < boxes.size(); ++a)
    for (std::size_t b = a + 1; b < boxes.size(); ++b)
      if (intersects(boxes[a], boxes[b])) return false;
  return true;
}

void subarray_suite(Verdict& v) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 1000 && v.ok; ++trial) {
    const std::size_t n = uniform_size(rng, 1, 256);
    std::vector<double> a(n);
    for (double& x : a) x = static_cast<double>(rng() % 10);
    const std::size_t w = uniform_size(rng, 1, n);
    const double threshold = static_cast<double>(rng() % (1 + 9 * w));
    const auto fast = max_subarray_fl(a, w, threshold);
    const auto slow = max_subarray_fl_oracle(a, w, threshold);
    v.require(fast == slow, "mismatch at case " + std::to_string(trial));
  }
}

void rect_sum_suite(Verdict& v) {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 1000 && v.ok; ++trial) {
    const SaliencyMap map = random_integer_map(rng, uniform_size(rng, 1, 64), uniform_size(rng, 1, 64));
    const IntegralMap integral = build_integral(map);
    const CropBox box = testing::random_box(rng, map.rows(), map.cols());
    v.require(rect_sum(integral, box) == naive_box_sum(map, box),
              "mismatch at case " + std::to_string(trial));
  }
}

void far_crop_suite(Verdict& v) {
  std::mt19937_64 rng(103);
  int found = 0;
  for (int trial = 0; trial < 1000 && v.ok; ++trial) {
    const double ratio = std::array{0.5, 1.0, 2.0}[trial % 3];
    const SaliencyMap map = random_integer_map(rng, uniform_size(rng, 1, 16), uniform_size(rng, 1, 16));
    const double threshold = 0.5 * map.total();
    const auto fast = smallest_far_crop(map, build_column_integral(map), ratio, threshold).box;
    const auto slow = far_crop_oracle(map, ratio, threshold);
    const bool same = fast.has_value() == slow.has_value() &&
                      (!fast || (fast->area() == slow->area() && fast->mass == slow->mass));
    v.require(same, "mismatch at case " + std::to_string(trial));
    found += fast.has_value();
  }
  std::printf("  1000 maps, %d with a feasible crop\n", found);
  v.require(found >= 500, "fewer than 500 cases produced a crop");
}

void greedy_suite(Verdict& v) {
  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 240 && v.ok; ++trial) {
    PartitionConfig config;
    config.k = uniform_size(rng, 1, 3);
    config.ratio = std::array{0.5, 1.0, 2.0}[trial % 3];
    config.strict_disjoint = trial % 4 != 3;
    SaliencyMap map = random_integer_map(rng, uniform_size(rng, 1, 16), uniform_size(rng, 1, 16));
    PartitionResult result = partition(map, config);
    const auto replay = testing::replay_greedy(map, config);
    bool same = result.rounds.size() == replay.size();
    for (std::size_t i = 0; same && i < replay.size(); ++i) {
      const auto& got = result.rounds[i];
      same = got.threshold == replay[i].threshold && got.found() == replay[i].box.has_value() &&
             (!got.box || (got.box->area() == replay[i].box->area() &&
                           got.box->mass == replay[i].box->mass));
    }
    v.require(same, "round mismatch at case " + std::to_string(trial));
    greedy_cases.push_back({std::move(map), config, std::move(result)});
  }
}

void conservation_suite(Verdict& v) {
  v.require(!greedy_cases.empty(), "suite 4 produced no cases");
  for (std::size_t i = 0; i < greedy_cases.size() && v.ok; ++i) {
    const GreedyCase& c = greedy_cases[i];
    SaliencyMap current = c.map;
    double removed = 0.0;
    for (const RoundDiagnostics& round : c.result.rounds) {
      if (!round.box) continue;
      Suppressed s = suppress(current, *round.box);
      removed += s.removed;
      v.require(naive_box_sum(s.map, *round.box) == 0.0,
                "suppressed box re-sums to nonzero at case " + std::to_string(i));
      current = std::move(s.map);
    }
    v.require(removed + c.result.remaining_mass == c.map.total(),
              "mass not conserved at case " + std::to_string(i));
    v.require(c.result.initial_mass == c.map.total(),
              "initial mass wrong at case " + std::to_string(i));
  }
}

bool check_linearity(Verdict& v, bool strict, const char* label, std::uint64_t seed) {
  const std::size_t m = 512;
  const SaliencyMap map = random_scene(m, 512, seed);
  std::vector<double> per_k;
  double k8_seconds = 0;
  for (std::size_t k = 1; k <= 8; ++k) {
    PartitionConfig config;
    config.k = k;
    config.strict_disjoint = strict;
    const auto start = std::chrono::steady_clock::now();
    PartitionResult result = partition(map, config);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (k == 8) k8_seconds = s;
    std::uint64_t calls = 0;
    for (const RoundDiagnostics& r : result.rounds) calls += r.windows_searched;
    std::printf("  %s k=%zu calls=%llu bound=%zu boxes=%zu\n", label, k,
                static_cast<unsigned long long>(calls), k * 2 * m, result.boxes.size());
    v.require(calls <= k * 2 * m, std::string(label) + " calls exceed k*2m at k=" + std::to_string(k));
    per_k.push_back(static_cast<double>(calls) / static_cast<double>(k));
    if (strict) linearity_results.push_back(std::move(result));
  }
  for (std::size_t i = 1; i < per_k.size(); ++i) {
    v.require(per_k[i] <= 1.25 * per_k[i - 1],
              std::string(label) + " calls/k grew by more than 1.25x at k=" + std::to_string(i + 1));
  }
  std::printf("  %s k=8 wall %.3f s\n", label, k8_seconds);
  v.require(k8_seconds < 2.0, std::string(label) + " k=8 took over 2 s");
  return v.ok;
}

void linearity_suite(Verdict& v) {
  check_linearity(v, true, "strict", 1);
  check_linearity(v, false, "non-strict", 1);
}

void disjointness_suite(Verdict& v) {
  std::size_t checked = 0;
  for (std::size_t i = 0; i < greedy_cases.size(); ++i) {
    if (!greedy_cases[i].config.strict_disjoint) continue;
    ++checked;
    v.require(pairwise_disjoint(greedy_cases[i].result.boxes),
              "overlap in suite 4 case " + std::to_string(i));
  }
  for (std::size_t i = 0; i < linearity_results.size(); ++i) {
    ++checked;
    v.require(pairwise_disjoint(linearity_results[i].boxes),
              "overlap in suite 6 at k=" + std::to_string(i + 1));
  }
  v.require(checked > 0, "no strict-mode results to check");
}

void figure_suite(Verdict& v) {
  const SaliencyMap map = testing::two_blob_scene();
  PartitionConfig config;
  config.k = 2;
  const PartitionResult result = partition(map, config);
  v.require(result.boxes.size() == 2, "expected 2 boxes");
  v.require(result.boundaries.size() == 1, "expected 1 boundary");
  if (!v.ok) return;
  const BoundaryLine& line = result.boundaries[0];
  // Blob supports: columns 2-3 and 11-13.
  v.require(line.orientation == Orientation::vertical, "boundary is not vertical");
  v.require(line.position > 3 && line.position < 11, "boundary not strictly between blobs");

  const RgbImage out = render_overlay(saliency_to_rgb(map), result);
  const Rgb red{255, 0, 0};
  const Rgb cyan{0, 255, 255};
  for (const CropBox& b : result.boxes) {
    bool perimeter_red = true;
    for (std::size_t c = b.left; c <= b.right; ++c)
      perimeter_red = perimeter_red && out.at(b.top, c) == red && out.at(b.bottom, c) == red;
    for (std::size_t r = b.top; r <= b.bottom; ++r)
      perimeter_red = perimeter_red && out.at(r, b.left) == red && out.at(r, b.right) == red;
    v.require(perimeter_red, "box perimeter not fully red");
  }
  bool cyan_column = true;
  for (std::size_t r = 0; r < out.rows; ++r) cyan_column = cyan_column && out.at(r, line.position) == cyan;
  v.require(cyan_column, "boundary column not cyan");
}

void cli_suite(Verdict& v) {
  using testing::golden;
  using testing::read_file;
  using testing::run_cli;
  testing::TempDir dir;

  const auto part = run_cli("partition --input two_blob.csv --k 2 --no-timing");
  v.require(part.exit_code == 0, "partition exit code");
  v.require(part.out == read_file(golden("partition_two_blob.json")), "partition JSON differs from golden");

  const auto crop = run_cli("crop --input single_pixel.csv --ratio 1 --threshold-fraction 0.5 --no-timing");
  v.require(crop.out == read_file(golden("crop_single_pixel.json")), "crop JSON differs from golden");

  v.require(run_cli("crop --input single_pixel.csv --threshold-fraction 1.1").exit_code == 1, "exit 1");
  v.require(run_cli("crop --input missing.csv --threshold-fraction 0.5").exit_code == 2, "exit 2");
  v.require(run_cli("partition --input uniform8.csv --k 2 --no-timing").exit_code == 3, "exit 3");
  const auto partial = run_cli("partition --input uniform8.csv --k 2 --allow-partial --no-timing");
  v.require(partial.exit_code == 4, "exit 4");
  v.require(partial.out == read_file(golden("partition_uniform8_partial.json")),
            "partial JSON differs from golden");

  const auto bench = run_cli("bench --rows 16 --cols 16 --k-max 1 --repeats 1");
  v.require(bench.out.substr(0, bench.out.find('\n')) == kBenchCsvHeader, "CSV header differs");

  const auto synth = run_cli("synth --rows 6 --cols 8 --blob 2,2,1.5,1 --blob 3,6,1,0.5 --out '" +
                             (dir / "s.salf").string() + "'");
  v.require(synth.exit_code == 0, "synth exit code");
  const std::string bytes = read_file(dir / "s.salf");
  v.require(bytes == read_file(golden("synth_two_blob.salf")), "raw-f32 differs from golden");
  const auto encoded = encode_raw_f32(load_saliency(dir / "s.salf", MapFormat::raw_f32));
  v.require(std::string(encoded.begin(), encoded.end()) == bytes, "raw-f32 round trip not bit-exact");
}

}  // namespace

int main() {
  criterion(1, "subarray oracle suite", 5, subarray_suite);
  criterion(2, "rectangle-sum suite", 5, rect_sum_suite);
  criterion(3, "far-crop oracle suite", 30, far_crop_suite);
  criterion(4, "greedy-round equivalence", 60, greedy_suite);
  criterion(5, "conservation and suppression", 0, conservation_suite);
  criterion(6, "linearity witness", 0, linearity_suite);
  criterion(7, "strict-mode disjointness", 0, disjointness_suite);
  criterion(8, "two-blob figure analogue", 0, figure_suite);
  criterion(9, "CLI contract", 0, cli_suite);
  return failures == 0 ? 0 : 1;
}
