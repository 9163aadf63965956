#include "modo_cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "modo/oracle.hpp"

namespace modo::cli {

namespace {

using Clock = std::chrono::steady_clock;

Limits make_limits(double limit_sec, std::size_t limit_mb) {
  Limits limits = limit_sec > 0 ? Limits::with_seconds(limit_sec) : Limits{};
  limits.memory_bytes = limit_mb * 1024 * 1024;
  return limits;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
  if (!out) throw InputError("write to '" + path + "' failed");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, sep)) {
    if (!cur.empty()) parts.push_back(cur);
  }
  return parts;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw InputError("bad integer for " + what + ": '" + s + "'");
  return v;
}

}  // namespace

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kTopDown: return "td";
    case Algorithm::kBottomUp: return "bu";
    case Algorithm::kCoupled: return "coup";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "td") return Algorithm::kTopDown;
  if (name == "bu") return Algorithm::kBottomUp;
  if (name == "coup") return Algorithm::kCoupled;
  throw InputError("unknown algorithm '" + name + "' (expected td, bu or coup)");
}

SolveOutcome solve(const Instance& inst, const SolveConfig& config) {
  const auto start = Clock::now();
  const Limits limits = make_limits(config.limit_sec, config.limit_mb);
  SolveOutcome outcome;

  CompileOptions copt;
  copt.limits = limits;
  CompiledInstance compiled = compile_instance(inst, copt);
  Network& net = compiled.network;
  outcome.nodes_compiled = net.num_nodes();
  outcome.arcs_compiled = net.num_arcs();

  PipelineOptions popt;
  popt.reduce = config.reduce;
  popt.prune = config.prune;
  popt.arc_removal = config.arc_removal;
  popt.limits = limits;
  outcome.reduction = apply_pipeline(net, popt);
  outcome.nodes = net.num_nodes();
  outcome.arcs = net.num_arcs();

  SearchOptions sopt;
  sopt.limits = limits;
  if (config.filter && compiled.topdown_filter) sopt.topdown_filter = &*compiled.topdown_filter;
  if (config.meet_layer) {
    if (*config.meet_layer < 1 || *config.meet_layer > net.num_layers()) {
      throw InputError("--meet-layer must lie in [1, " + std::to_string(net.num_layers()) + "]");
    }
    sopt.meet_layer = *config.meet_layer - 1;
  }

  SearchResult result;
  switch (config.alg) {
    case Algorithm::kTopDown: result = propagate_topdown(net, sopt); break;
    case Algorithm::kBottomUp: result = propagate_bottomup(net, sopt); break;
    case Algorithm::kCoupled: result = solve_bidirectional(net, sopt); break;
  }
  outcome.stats = result.stats;
  outcome.frontier = to_original_sense(inst, result.frontier);

  if (config.recover) {
    // Node merges splice decision suffixes, so witnesses are traced on a
    // fresh, unreduced network whose paths are exactly the DP's solutions.
    CompiledInstance plain = compile_instance(inst, copt);
    SearchOptions topt;
    topt.limits = limits;
    const TopDownTrace trace(plain.network, topt);
    for (const auto& point : outcome.frontier) {
      const auto decisions = trace.witness(to_canonical(inst, point));
      outcome.witnesses.push_back(Witness{point, decisions_to_solution(inst, decisions)});
    }
  }
  outcome.time_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return outcome;
}

std::string stats_line(const SolveOutcome& o) {
  std::ostringstream ss;
  ss << o.stats.labels_td << ' ' << o.stats.labels_bu << ' ' << o.stats.labels_coupled << ' '
     << o.stats.meet_layer + 1 << ' ' << static_cast<std::int64_t>(o.time_ms + 0.5);
  return ss.str();
}

std::string format_witnesses(const std::vector<Witness>& witnesses) {
  std::ostringstream ss;
  for (const auto& w : witnesses) {
    ss << to_string(w.point) << " :";
    for (auto v : w.solution) ss << ' ' << v;
    ss << '\n';
  }
  return ss.str();
}

// ---------------------------------------------------------------------------
// bench

std::vector<BenchCell> parse_suite(const std::string& text, const std::string& base_dir) {
  std::vector<BenchCell> cells;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    const std::string where = "suite line " + std::to_string(line_no) + ": ";

    try {
      std::vector<Algorithm> algs{Algorithm::kCoupled};
      std::vector<bool> filters{false};
      std::optional<std::size_t> n, k;
      std::vector<std::uint64_t> seeds;
      GenerateParams params;
      std::optional<std::string> path;
      std::size_t first = 1;
      if (tokens[0] == "file") {
        if (tokens.size() < 2) throw InputError("'file' needs a path");
        path = tokens[1];
        first = 2;
      }
      for (std::size_t i = first; i < tokens.size(); ++i) {
        const auto eq = tokens[i].find('=');
        if (eq == std::string::npos) throw InputError("expected key=value, got '" + tokens[i] + "'");
        const std::string key = tokens[i].substr(0, eq);
        const std::string value = tokens[i].substr(eq + 1);
        if (key == "alg") {
          algs.clear();
          for (const auto& a : split(value, ',')) algs.push_back(parse_algorithm(a));
        } else if (key == "filter") {
          filters.clear();
          for (const auto& f : split(value, ',')) filters.push_back(parse_int(f, "filter") != 0);
        } else if (key == "n") {
          n = static_cast<std::size_t>(parse_int(value, "n"));
        } else if (key == "K") {
          k = static_cast<std::size_t>(parse_int(value, "K"));
        } else if (key == "seed") {
          const auto dots = value.find("..");
          if (dots == std::string::npos) {
            seeds.push_back(static_cast<std::uint64_t>(parse_int(value, "seed")));
          } else {
            const auto lo = parse_int(value.substr(0, dots), "seed");
            const auto hi = parse_int(value.substr(dots + 2), "seed");
            if (lo > hi) throw InputError("empty seed range");
            for (auto s = lo; s <= hi; ++s) seeds.push_back(static_cast<std::uint64_t>(s));
          }
        } else if (key == "M") {
          params.max_abs_coefficient = parse_int(value, "M");
        } else if (key == "delta") {
          params.cardinality_ratio = std::stod(value);
        } else {
          throw InputError("unknown key '" + key + "'");
        }
      }
      if (algs.empty() || filters.empty()) throw InputError("empty alg or filter list");

      std::vector<std::pair<Instance, std::optional<std::uint64_t>>> instances;
      if (path) {
        std::filesystem::path p(*path);
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        instances.emplace_back(parse_instance(read_file(p.string())), std::nullopt);
      } else {
        const ProblemClass cls = parse_problem_class(tokens[0]);
        if (!n || !k || seeds.empty()) throw InputError("generated entries need n=, K= and seed=");
        for (auto s : seeds) instances.emplace_back(generate(cls, *n, *k, s, params), s);
      }
      for (const auto& [inst, seed] : instances) {
        for (auto alg : algs) {
          for (bool f : filters) {
            BenchCell cell{inst, seed, {}};
            cell.config.alg = alg;
            cell.config.filter = f;
            cells.push_back(std::move(cell));
          }
        }
      }
    } catch (const std::exception& e) {
      throw InputError(where + e.what());
    }
  }
  return cells;
}

std::string bench_csv_header() {
  return "class,n,K,seed,alg,filter,time_ms,frontier_size,nodes,arcs,labels,meet_layer,status,"
         "shifts,merges,arcs_removed,nodes_removed";
}

namespace {

std::string run_cell(const BenchCell& cell, double limit_sec, std::size_t limit_mb) {
  SolveConfig config = cell.config;
  config.limit_sec = limit_sec;
  config.limit_mb = limit_mb;
  std::ostringstream row;
  row << to_string(cell.instance.problem) << ',' << cell.instance.n << ',' << cell.instance.k << ',';
  if (cell.seed) row << *cell.seed;
  row << ',' << to_string(config.alg) << ',' << (config.filter ? 1 : 0) << ',';

  const auto start = Clock::now();
  try {
    const SolveOutcome o = solve(cell.instance, config);
    row << static_cast<std::int64_t>(o.time_ms + 0.5) << ',' << o.frontier.size() << ',' << o.nodes << ','
        << o.arcs << ',' << o.stats.labels_total() << ',' << o.stats.meet_layer + 1 << ",solved,"
        << o.reduction.shifts_applied << ',' << o.reduction.merges_applied << ',' << o.reduction.arcs_removed
        << ',' << o.reduction.nodes_removed;
  } catch (const ResourceError& e) {
    const auto ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    row << static_cast<std::int64_t>(ms + 0.5) << ",,,,,,"
        << (e.kind() == ResourceKind::kTime ? "timeout" : "memout") << ",,,,";
  }
  return row.str();
}

}  // namespace

std::vector<std::string> run_bench(const std::vector<BenchCell>& cells, double limit_sec, std::size_t limit_mb,
                                   std::size_t workers) {
  std::vector<std::string> rows(cells.size());
  workers = std::max<std::size_t>(1, std::min(workers, cells.size()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i; (i = next++) < cells.size() && !failed;) {
      try {
        rows[i] = run_cell(cells[i], limit_sec, limit_mb);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

// ---------------------------------------------------------------------------
// command line

namespace {

std::size_t bench_workers() {
  std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MODO_THREADS")) {
    const auto cap = parse_int(env, "MODO_THREADS");
    if (cap < 1) throw InputError("MODO_THREADS must be positive");
    workers = std::min(workers, static_cast<std::size_t>(cap));
  }
  return workers;
}

void add_solve_flags(CLI::App* cmd, SolveConfig& config, std::string& alg) {
  cmd->add_option("--alg", alg, "td | bu | coup")->check(CLI::IsMember({"td", "bu", "coup"}));
  cmd->add_flag("--filter", config.filter, "Use the problem's node comparator when it has one");
  cmd->add_flag("--no-reduce{false}", config.reduce, "Skip weight shifts and node merges");
  cmd->add_flag("--no-prune{false}", config.prune, "Skip parallel-arc pruning");
  cmd->add_flag("--no-arc-removal{false}", config.arc_removal, "Skip local arc removal");
  cmd->add_option("--meet-layer", config.meet_layer, "Force the coupling layer (1-based)");
  cmd->add_option("--limit-sec", config.limit_sec, "Wall-clock budget in seconds")->check(CLI::NonNegativeNumber);
  cmd->add_option("--limit-mb", config.limit_mb, "Approximate memory budget in MiB");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact multiobjective discrete optimization with network models"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  std::string gen_class, gen_out;
  std::size_t gen_n = 0, gen_k = 0;
  std::uint64_t gen_seed = 0;
  GenerateParams gen_params;
  gen->add_option("--class", gen_class, "knapsack | setcover | setpack | tsp | mccavp")->required();
  gen->add_option("--n", gen_n, "Variables (cities for tsp)")->required();
  gen->add_option("--K", gen_k, "Objectives")->required();
  gen->add_option("--seed", gen_seed, "PRNG seed")->required();
  gen->add_option("--M", gen_params.max_abs_coefficient, "mccavp coefficient bound");
  gen->add_option("--delta", gen_params.cardinality_ratio, "mccavp cardinality ratio");
  gen->add_option("-o,--output", gen_out, "Output path (stdout if omitted)");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Compute the Pareto frontier of an instance");
  SolveConfig solve_config;
  std::string solve_alg = "coup", solve_in, solve_out, witness_out;
  add_solve_flags(solve_cmd, solve_config, solve_alg);
  solve_cmd->add_flag("--recover", solve_config.recover, "Emit one witness solution per frontier point");
  solve_cmd->add_option("-i,--input", solve_in, "Instance file")->required();
  solve_cmd->add_option("-o,--output", solve_out, "Frontier file (stdout if omitted)");
  solve_cmd->add_option("--witness-out", witness_out, "Witness file (default: <output>.witness)");

  // verify
  auto* verify = app.add_subcommand("verify", "Compare the solver (or a frontier file) with the oracle");
  SolveConfig verify_config;
  std::string verify_alg = "coup", verify_in, verify_frontier;
  add_solve_flags(verify, verify_config, verify_alg);
  verify->add_option("-i,--input", verify_in, "Instance file")->required();
  verify->add_option("--frontier", verify_frontier, "Check this frontier file instead of solving");

  // bench
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite and emit CSV");
  std::string suite_path, bench_out;
  double bench_sec = 0;
  std::size_t bench_mb = 0;
  bench->add_option("--suite", suite_path, "Suite spec file")->required();
  bench->add_option("-o,--output", bench_out, "CSV path (stdout if omitted)");
  bench->add_option("--limit-sec", bench_sec, "Per-cell wall-clock budget")->check(CLI::NonNegativeNumber);
  bench->add_option("--limit-mb", bench_mb, "Per-cell memory budget in MiB");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      const Instance inst = generate(parse_problem_class(gen_class), gen_n, gen_k, gen_seed, gen_params);
      const std::string text = format_instance(inst);
      if (gen_out.empty()) {
        out << text;
      } else {
        write_file(gen_out, text);
      }
      return kOk;
    }

    if (*solve_cmd) {
      solve_config.alg = parse_algorithm(solve_alg);
      const Instance inst = parse_instance(read_file(solve_in));
      const SolveOutcome o = solve(inst, solve_config);
      const std::string frontier = format_frontier(inst.k, o.frontier);
      const std::string witnesses = format_witnesses(o.witnesses);
      if (solve_out.empty()) {
        out << frontier;
        if (solve_config.recover && witness_out.empty()) out << witnesses;
        err << stats_line(o) << '\n';
      } else {
        write_file(solve_out, frontier);
        out << stats_line(o) << '\n';
      }
      if (solve_config.recover) {
        if (witness_out.empty() && !solve_out.empty()) witness_out = solve_out + ".witness";
        if (!witness_out.empty()) write_file(witness_out, witnesses);
      }
      return kOk;
    }

    if (*verify) {
      verify_config.alg = parse_algorithm(verify_alg);
      const Instance inst = parse_instance(read_file(verify_in));
      const auto expected = brute_force_frontier(inst);
      std::vector<ObjectiveVector> actual;
      if (!verify_frontier.empty()) {
        actual = parse_frontier(read_file(verify_frontier));
        std::sort(actual.begin(), actual.end());
      } else {
        actual = solve(inst, verify_config).frontier;
      }
      if (actual == expected) {
        out << "PASS " << expected.size() << " frontier points\n";
        return kOk;
      }
      std::vector<ObjectiveVector> missing, extra;
      std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(), std::back_inserter(missing));
      std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(), std::back_inserter(extra));
      out << "FAIL oracle=" << expected.size() << " solver=" << actual.size() << '\n';
      for (const auto& p : missing) out << "- " << to_string(p) << '\n';
      for (const auto& p : extra) out << "+ " << to_string(p) << '\n';
      return kMismatch;
    }

    if (*bench) {
      const auto base = std::filesystem::path(suite_path).parent_path().string();
      const auto cells = parse_suite(read_file(suite_path), base.empty() ? "." : base);
      const auto rows = run_bench(cells, bench_sec, bench_mb, bench_workers());
      std::ostringstream csv;
      csv << bench_csv_header() << '\n';
      for (const auto& r : rows) csv << r << '\n';
      if (bench_out.empty()) {
        out << csv.str();
      } else {
        write_file(bench_out, csv.str());
      }
      return kOk;
    }
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace modo::cli
