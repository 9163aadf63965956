#pragma once

#include <string>
#include <vector>

#include "modo/network.hpp"
#include "modo/objective.hpp"
#include "modo/problems.hpp"

namespace modo::test {

inline std::string fixture_path(const std::string& name) { return std::string(MODO_FIXTURE_DIR) + "/" + name; }

// Example 1: set packing, n = 7, K = 3.
inline Instance example1() {
  Instance inst;
  inst.problem = ProblemClass::kSetPack;
  inst.n = 7;
  inst.k = 3;
  inst.sense = Sense::kMax;
  CoverPackData d;
  d.rows = {{0, 1, 2}, {1, 2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}};
  d.costs = {{4, 5, 3, 4, 2, 1, 2}, {8, 7, 1, 5, 3, 3, 8}, {2, 6, 8, 4, 6, 5, 2}};
  inst.payload = d;
  return inst;
}

inline std::vector<ObjectiveVector> points(std::initializer_list<std::initializer_list<std::int64_t>> list) {
  std::vector<ObjectiveVector> out;
  for (auto p : list) out.emplace_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<ObjectiveVector> example1_frontier() {
  return points({{6, 7, 19}, {8, 13, 17}, {7, 14, 13}, {10, 21, 8}});
}

// Frontier of a network straight from exhaustive path enumeration (canonical
// sense, offset included).
inline std::vector<ObjectiveVector> enumerated_frontier(const Network& net) {
  auto ws = all_path_weights(net);
  for (auto& w : ws) w += net.root_offset();
  return nd_filter(std::move(ws));
}

inline std::vector<ObjectiveVector> sorted_path_weights(const Network& net) {
  auto ws = all_path_weights(net);
  std::sort(ws.begin(), ws.end());
  return ws;
}

struct FuzzCase {
  Instance instance;
  std::uint64_t seed;
};

// Seeded instances at oracle scale: n in [8, 14] and K in {2, 3, 4} for the
// binary classes, n in [5, 8] and K in {3, 4} for TSP.
inline std::vector<FuzzCase> fuzz_corpus(ProblemClass cls, std::size_t count, std::uint64_t base_seed = 1000) {
  std::vector<FuzzCase> out;
  SplitMix64 pick(base_seed * 31 + static_cast<std::uint64_t>(cls));
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t seed = base_seed + i;
    std::size_t n, k;
    GenerateParams params;
    if (cls == ProblemClass::kTsp) {
      n = static_cast<std::size_t>(pick.uniform(5, 8));
      k = static_cast<std::size_t>(pick.uniform(3, 4));
    } else {
      n = static_cast<std::size_t>(pick.uniform(8, 14));
      k = static_cast<std::size_t>(pick.uniform(2, 4));
    }
    if (cls == ProblemClass::kMccavp) {
      params.max_abs_coefficient = pick.uniform(1, 5) * 50;
      params.cardinality_ratio = static_cast<double>(pick.uniform(1, 5)) / 10.0;
    }
    if (cls == ProblemClass::kSetCover || cls == ProblemClass::kSetPack) {
      // n/5 rows of 10 ones barely constrain anything at n <= 14; vary row
      // count and density so tight and loose instances both occur.
      const auto ones = pick.uniform(2, 6);
      params.ones_per_row = ones == 6 ? 10 : static_cast<std::size_t>(ones);
      params.rows = i % 3 == 0 ? 0 : static_cast<std::size_t>(pick.uniform(2, 6));
    }
    out.push_back(FuzzCase{generate(cls, n, k, seed, params), seed});
  }
  return out;
}

inline const std::vector<ProblemClass>& all_classes() {
  static const std::vector<ProblemClass> classes{ProblemClass::kKnapsack, ProblemClass::kSetCover,
                                                 ProblemClass::kSetPack, ProblemClass::kTsp,
                                                 ProblemClass::kMccavp};
  return classes;
}

}  // namespace modo::test
