#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "modo_cli.hpp"
#include "support.hpp"

using namespace modo;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "modo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("modo_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

std::vector<std::string> stats_fields(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> f;
  for (std::string t; ss >> t;) f.push_back(t);
  return f;
}

}  // namespace

TEST_SUITE("cli") {
  const std::string fixture = test::fixture_path("example1.modo");
  const std::string expected = "K 3 4\n6 7 19\n7 14 13\n8 13 17\n10 21 8\n";

  TEST_CASE("gen round-trips and is deterministic") {
    TempDir dir;
    REQUIRE(run({"gen", "--class", "knapsack", "--n", "20", "--K", "3", "--seed", "7", "-o", dir / "a.modo"}).code == 0);
    REQUIRE(run({"gen", "--class", "knapsack", "--n", "20", "--K", "3", "--seed", "7", "-o", dir / "b.modo"}).code == 0);
    const std::string a = slurp(dir / "a.modo");
    CHECK(a == slurp(dir / "b.modo"));
    CHECK(format_instance(parse_instance(a)) == a);
    CHECK(format_instance(parse_instance(a)) == format_instance(generate(ProblemClass::kKnapsack, 20, 3, 7)));

    REQUIRE(run({"gen", "--class", "setcover", "--n", "100", "--K", "4", "--seed", "1", "-o", dir / "c.modo"}).code == 0);
    CHECK(slurp(dir / "c.modo").find("\nm 20\n") != std::string::npos);
  }

  TEST_CASE("gen rejects bad parameters") {
    CHECK(run({"gen", "--class", "nope", "--n", "5", "--K", "2", "--seed", "1"}).code == cli::kUsage);
    CHECK(run({"gen", "--class", "knapsack", "--n", "5", "--K", "9", "--seed", "1"}).code == cli::kUsage);
    CHECK(run({"gen", "--class", "knapsack"}).code == cli::kUsage);
    CHECK(run({}).code == cli::kUsage);
  }

  TEST_CASE("solve the fixture with every algorithm") {
    TempDir dir;
    for (std::string alg : {"td", "bu", "coup"}) {
      const auto r = run({"solve", "--alg", alg, "-i", fixture, "-o", dir / (alg + ".f")});
      REQUIRE(r.code == 0);
      CHECK(slurp(dir / (alg + ".f")) == expected);
      CHECK(stats_fields(r.out).size() == 5);
    }
  }

  TEST_CASE("solve reports Example 5 label counts") {
    const auto r = run({"solve", "--alg", "coup", "--meet-layer", "5", "-i", fixture});
    REQUIRE(r.code == 0);
    CHECK(r.out == expected);
    const auto f = stats_fields(r.err);
    REQUIRE(f.size() == 5);
    CHECK(std::stoi(f[0]) + std::stoi(f[1]) == 25);
    CHECK(f[3] == "5");
    const auto td = stats_fields(run({"solve", "--alg", "td", "-i", fixture}).err);
    CHECK(td[0] == "36");
  }

  TEST_CASE("disabling VPOs keeps the frontier") {
    const auto r = run({"solve", "--no-reduce", "--no-prune", "--no-arc-removal", "-i", fixture});
    CHECK(r.code == 0);
    CHECK(r.out == expected);
    const auto full = cli::solve(test::example1(), {});
    cli::SolveConfig bare;
    bare.reduce = bare.prune = bare.arc_removal = false;
    const auto raw = cli::solve(test::example1(), bare);
    CHECK(raw.frontier == full.frontier);
    CHECK(raw.nodes > full.nodes);
    CHECK(raw.arcs > full.arcs);
  }

  TEST_CASE("solve --recover writes witnesses") {
    TempDir dir;
    const auto r = run({"solve", "--recover", "-i", fixture, "-o", dir / "f"});
    REQUIRE(r.code == 0);
    CHECK(slurp(dir / "f.witness") ==
          "6 7 19 : 0 0 1 0 1 1 0\n7 14 13 : 1 0 0 0 1 1 0\n8 13 17 : 0 1 0 0 1 1 0\n10 21 8 : 1 0 0 1 0 0 1\n");
  }

  TEST_CASE("solve errors") {
    CHECK(run({"solve", "-i", "/nonexistent/file"}).code == cli::kUsage);
    CHECK(run({"solve", "--alg", "xyz", "-i", fixture}).code == cli::kUsage);
    CHECK(run({"solve", "--meet-layer", "99", "-i", fixture}).code == cli::kUsage);
    TempDir dir;
    run({"gen", "--class", "tsp", "--n", "10", "--K", "3", "--seed", "1", "-o", dir / "t.modo"});
    CHECK(run({"solve", "--limit-mb", "1", "-i", dir / "t.modo"}).code == cli::kResource);
  }

  TEST_CASE("verify") {
    CHECK(run({"verify", "-i", fixture}).code == 0);
    TempDir dir;
    std::ofstream(dir / "bad.f") << "K 3 4\n6 7 19\n7 14 13\n8 13 17\n10 21 9\n";
    const auto r = run({"verify", "-i", fixture, "--frontier", dir / "bad.f"});
    CHECK(r.code == cli::kMismatch);
    CHECK(r.out.find("- 10 21 8") != std::string::npos);
    CHECK(r.out.find("+ 10 21 9") != std::string::npos);
    CHECK(run({"verify", "-i", fixture, "--frontier", test::fixture_path("example1.frontier")}).code == 0);
  }

  TEST_CASE("bench") {
    TempDir dir;
    std::ofstream(dir / "suite.txt") << "# three fixture runs\nfile " << fixture << " alg=td,bu,coup\n";
    REQUIRE(run({"bench", "--suite", dir / "suite.txt", "-o", dir / "out.csv"}).code == 0);
    std::istringstream csv(slurp(dir / "out.csv"));
    std::string line;
    std::getline(csv, line);
    CHECK(line == cli::bench_csv_header());
    int rows = 0;
    while (std::getline(csv, line)) {
      ++rows;
      std::vector<std::string> cols;
      std::stringstream ss(line);
      for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
      REQUIRE(cols.size() >= 13);
      CHECK(cols[0] == "setpack");
      CHECK(cols[7] == "4");
      CHECK(cols[12] == "solved");
    }
    CHECK(rows == 3);
  }

  TEST_CASE("bench timeout rows") {
    const auto cells = cli::parse_suite("knapsack n=40 K=4 seed=1 filter=0\n");
    REQUIRE(cells.size() == 1);
    const auto rows = cli::run_bench(cells, 0.001, 0, 1);
    CHECK(rows.front().find(",timeout,") != std::string::npos);
  }

  TEST_CASE("suite parsing") {
    const auto cells = cli::parse_suite("mccavp n=8 K=2 seed=1..3 alg=td,coup filter=0,1 M=100 delta=0.3 # x\n\n");
    CHECK(cells.size() == 12);
    CHECK(std::get<MccavpData>(cells.front().instance.payload).cardinality == 2);
    CHECK_THROWS_AS(cli::parse_suite("knapsack n=8 seed=1\n"), InputError);
    CHECK_THROWS_AS(cli::parse_suite("knapsack n=8 K=2 seed=1 bogus=3\n"), InputError);
  }
}
