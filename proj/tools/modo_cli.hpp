#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "modo/problems.hpp"
#include "modo/search.hpp"
#include "modo/vpo.hpp"

namespace modo::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kMismatch = 2, kResource = 3 };

enum class Algorithm { kTopDown, kBottomUp, kCoupled };

std::string to_string(Algorithm a);
Algorithm parse_algorithm(const std::string& name);

struct SolveConfig {
  Algorithm alg = Algorithm::kCoupled;
  bool filter = false;
  bool reduce = true;
  bool prune = true;
  bool arc_removal = true;
  std::optional<std::size_t> meet_layer;  // 1-based, as on the command line
  bool recover = false;
  double limit_sec = 0;                   // 0 = unlimited
  std::size_t limit_mb = 0;               // 0 = unlimited
};

struct Witness {
  ObjectiveVector point;               // original sense
  std::vector<std::int64_t> solution;  // as accepted by evaluate()
};

struct SolveOutcome {
  std::vector<ObjectiveVector> frontier;  // original sense, sorted
  SearchStats stats;
  ReductionStats reduction;
  std::size_t nodes_compiled = 0;
  std::size_t arcs_compiled = 0;
  std::size_t nodes = 0;  // after the pipeline
  std::size_t arcs = 0;
  double time_ms = 0;
  std::vector<Witness> witnesses;
};

// Compile -> VPO pipeline -> search (-> witness recovery). Throws the core
// exception types on bad input or exhausted budgets.
SolveOutcome solve(const Instance& inst, const SolveConfig& config);

// `labels_td labels_bu labels_coupled meet_layer time_ms` (meet_layer 1-based).
std::string stats_line(const SolveOutcome& outcome);

// One line per witness: `<point> : <solution>`.
std::string format_witnesses(const std::vector<Witness>& witnesses);

struct BenchCell {
  Instance instance;
  std::optional<std::uint64_t> seed;  // unset for instances read from files
  SolveConfig config;
};

// Parses a suite spec. One entry per non-blank, non-comment line:
//   <class> n=<n> K=<k> seed=<s|a..b> [alg=td,bu,coup] [filter=0,1] [M=<m>] [delta=<d>]
//   file <path> [alg=...] [filter=...]
// Comma lists and seed ranges expand to the cartesian product of cells.
// Relative paths resolve against `base_dir`.
std::vector<BenchCell> parse_suite(const std::string& text, const std::string& base_dir = ".");

std::string bench_csv_header();
// Runs every cell (in parallel up to `workers`) and returns CSV rows in suite order.
std::vector<std::string> run_bench(const std::vector<BenchCell>& cells, double limit_sec, std::size_t limit_mb,
                                   std::size_t workers);

// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace modo::cli
