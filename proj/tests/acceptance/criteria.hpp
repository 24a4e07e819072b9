#pragma once

// The fifteen acceptance criteria, shared by the acceptance binary and
// `srt check`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace srt::acceptance {

struct Result {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  double budget = 0;  // seconds
  std::string detail;
};

struct Options {
  std::uint64_t seed = 20240615;
  int threads = 0;
  std::string cli_path;  // when set, criterion 15 runs `<cli> check --suite all`
};

inline constexpr int kNumCriteria = 15;

/// Runs criterion `id` (1..14) and enforces its time budget.
Result run(int id, const Options& opts);

/// Runs 1..14, then 15: either the CLI suite as a subprocess or the
/// aggregate of the results already obtained.
std::vector<Result> run_all(const Options& opts, const std::function<void(const Result&)>& on_result = {});

/// "[PASS] 07 name (1.23 s / 30 s) detail"
std::string format_line(const Result& r);

}  // namespace srt::acceptance
