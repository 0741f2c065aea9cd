#pragma once

// Batch verification over (N, L, Q) grids and the brute-vs-closed-form benchmark.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cpident {

std::string_view tool_version();

enum class Suite { qseries, oracle, lemma1, lemma2, theorem, corollary, roots };

std::string_view suite_name(Suite s);
/// Throws std::invalid_argument for an unknown name.
Suite parse_suite(std::string_view name);
const std::vector<Suite>& all_suites();

/// "2,3", "2..8", "2,4..6".  Throws std::invalid_argument on malformed input
/// or a descending range.  Result is sorted and deduplicated.
std::vector<int> parse_int_list(std::string_view text);

struct RunConfig {
  std::vector<int> n_list;
  std::vector<int> l_list;
  /// nullopt selects every Q in [0, N-1].
  std::optional<std::vector<int>> q_list;
  std::vector<Suite> suites;
  int precision = 128;
  int threads = 1;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;

  /// Throws std::invalid_argument describing the first problem.
  void validate() const;
};

struct Record {
  int n = 0;
  int length = 0;
  int q = 0;
  Suite suite = Suite::qseries;
  bool pass = false;
  /// "exact" or "numeric"
  std::string kind;
  /// Ordered key/value pairs; values are decimal strings or short words.
  std::vector<std::pair<std::string, std::string>> details;
  double seconds = 0.0;
};

struct VerificationReport {
  RunConfig config;
  std::vector<Record> records;
  double seconds = 0.0;

  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }
};

/// Runs every suite on every grid cell.  A failing or throwing cell is
/// recorded and never stops the remaining cells.
VerificationReport run_verification(const RunConfig& config);

std::string to_json(const VerificationReport& report, bool include_timing = true);
std::string to_csv(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

/// The (mu, lambda) pairs exercised for one (N, L, Q) cell: parts in
/// [0, N-1], Sum(mu) = ell N + Q, Sum(lambda) = n N + Q, ell >= n.
/// Exhaustive when the admissible count is at most `exhaustive_limit`,
/// otherwise `sample_size` pairs drawn uniformly with a generator seeded
/// from (seed, N, L, Q).
struct PairSample {
  bool exhaustive = false;
  std::string admissible_count;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
};

PairSample admissible_pairs(int n, int length, int q, std::uint64_t seed, std::size_t exhaustive_limit = 10000,
                            std::size_t sample_size = 1000);

struct BenchRow {
  std::string composition;
  double brute_median = 0.0;
  double gen_median = 0.0;
};

struct BenchReport {
  int n = 0;
  int length = 0;
  int reps = 0;
  std::vector<BenchRow> rows;
  /// Sums of the per-composition medians.
  double brute_total = 0.0;
  double gen_total = 0.0;
  /// Single-pass brute enumeration (all m at once), for reference.
  double brute_single_pass_total = 0.0;

  double speedup() const { return gen_total > 0 ? brute_total / gen_total : 0.0; }
};

/// Every composition of N into L parts.  Both paths are compared exactly
/// before any timing; a mismatch throws std::logic_error.  The brute path
/// calls K_brute once per m and variant.
BenchReport run_bench(int n, int length, int reps);

std::string bench_to_text(const BenchReport& report);
std::string bench_to_json(const BenchReport& report);
std::string bench_to_csv(const BenchReport& report);

/// Root tables for `cpident roots`.
std::string roots_report(int n, int length, const std::optional<std::vector<int>>& q_list, int precision,
                         const std::string& format);

}  // namespace cpident
