#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "modo/network.hpp"
#include "modo/objective.hpp"
#include "modo/recursion.hpp"
#include "modo/search.hpp"

namespace modo {

enum class ProblemClass { kKnapsack, kSetCover, kSetPack, kTsp, kMccavp };
enum class Sense { kMin, kMax };

std::string to_string(ProblemClass c);
ProblemClass parse_problem_class(const std::string& name);
Sense natural_sense(ProblemClass c);

struct KnapsackData {
  std::int64_t capacity = 0;
  std::vector<std::int64_t> weights;               // n
  std::vector<std::vector<std::int64_t>> profits;  // K x n
};

struct CoverPackData {
  // Each row lists the 0-based columns with a one entry, ascending.
  std::vector<std::vector<std::size_t>> rows;
  std::vector<std::vector<std::int64_t>> costs;  // K x n
};

struct TspData {
  std::vector<std::vector<std::vector<std::int64_t>>> distances;  // K x n x n
};

struct MccavpData {
  std::int64_t cardinality = 0;
  std::vector<std::vector<std::int64_t>> a;  // K x n
  std::vector<std::int64_t> b;               // K
};

struct Instance {
  ProblemClass problem = ProblemClass::kKnapsack;
  std::size_t n = 0;
  std::size_t k = 0;
  Sense sense = Sense::kMax;
  std::variant<KnapsackData, CoverPackData, TspData, MccavpData> payload;
};

// Throws InputError when the payload disagrees with (problem, n, k, sense).
void validate(const Instance& inst);

// ---------------------------------------------------------------------------
// Recursive models. Rewards are in the canonical maximize sense.

// Dynamic bitset with canonical byte serialization.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}
  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool on = true) {
    const auto mask = std::uint64_t{1} << (i % 64);
    words_[i / 64] = on ? (words_[i / 64] | mask) : (words_[i / 64] & ~mask);
  }
  bool none() const;
  bool all() const;
  std::string key() const;
  friend bool operator==(const Bits&, const Bits&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class KnapsackModel {
 public:
  // Total weight packed so far.
  using State = std::int64_t;

  explicit KnapsackModel(const Instance& inst);
  std::size_t stages() const { return data_.weights.size(); }
  std::size_t objectives() const { return data_.profits.size(); }
  State initial_state() const { return 0; }
  std::vector<std::int64_t> feasible_values(std::size_t j, const State& s) const;
  State transition(std::size_t j, const State& s, std::int64_t v) const;
  ObjectiveVector reward(std::size_t j, const State& s, std::int64_t v) const;
  std::string state_key(const State& s) const;
  // Less weight used means every completion of the heavier state is
  // available to the lighter one.
  bool node_dominates(std::size_t, const State& dominated, const State& dominating) const {
    return dominating < dominated;
  }

 private:
  KnapsackData data_;
};

class SetPackingModel {
 public:
  // Bit i set: constraint i is tight or has no free variable left.
  using State = Bits;

  explicit SetPackingModel(const Instance& inst);
  std::size_t stages() const { return n_; }
  std::size_t objectives() const { return data_.costs.size(); }
  State initial_state() const { return Bits(data_.rows.size()); }
  std::vector<std::int64_t> feasible_values(std::size_t j, const State& s) const;
  State transition(std::size_t j, const State& s, std::int64_t v) const;
  ObjectiveVector reward(std::size_t j, const State& s, std::int64_t v) const;
  std::string state_key(const State& s) const { return s.key(); }

 private:
  std::size_t n_;
  CoverPackData data_;
  std::vector<std::vector<std::size_t>> rows_of_;  // column -> rows containing it
  std::vector<std::size_t> last_column_;           // row -> largest column index
};

class SetCoveringModel {
 public:
  // Bit i set: constraint i is not yet covered.
  using State = Bits;

  explicit SetCoveringModel(const Instance& inst);
  std::size_t stages() const { return n_; }
  std::size_t objectives() const { return data_.costs.size(); }
  State initial_state() const;
  std::vector<std::int64_t> feasible_values(std::size_t j, const State& s) const;
  State transition(std::size_t j, const State& s, std::int64_t v) const;
  ObjectiveVector reward(std::size_t j, const State& s, std::int64_t v) const;
  std::string state_key(const State& s) const { return s.key(); }

 private:
  std::size_t n_;
  CoverPackData data_;
  std::vector<std::vector<std::size_t>> rows_of_;
  std::vector<std::size_t> last_column_;
};

class TspModel {
 public:
  struct State {
    std::uint64_t unvisited = 0;  // bit c: city c (0-based) still to visit
    std::size_t last = 0;
    friend bool operator==(const State&, const State&) = default;
  };

  // Stage j < n-1 picks the city at tour position j+2 (1-based); the final
  // stage is the synthetic return to the first city (decision 1).
  explicit TspModel(const Instance& inst);
  std::size_t stages() const { return n_; }
  std::size_t objectives() const { return data_.distances.size(); }
  State initial_state() const;
  std::vector<std::int64_t> feasible_values(std::size_t j, const State& s) const;
  State transition(std::size_t j, const State& s, std::int64_t v) const;
  ObjectiveVector reward(std::size_t j, const State& s, std::int64_t v) const;
  std::string state_key(const State& s) const;

 private:
  std::size_t n_;
  TspData data_;
};

class MccavpModel {
 public:
  struct State {
    ObjectiveVector theta;  // partial evaluation of each a^k x
    std::int64_t count = 0; // variables set to one
    friend bool operator==(const State&, const State&) = default;
  };

  // theta starts at zero and rewards telescope to -(|a^k x - b_k| - |b_k|);
  // the root offset -|b_k| restores the true (negated) objective.
  explicit MccavpModel(const Instance& inst);
  std::size_t stages() const { return n_; }
  std::size_t objectives() const { return data_.b.size(); }
  State initial_state() const;
  std::vector<std::int64_t> feasible_values(std::size_t j, const State& s) const;
  State transition(std::size_t j, const State& s, std::int64_t v) const;
  ObjectiveVector reward(std::size_t j, const State& s, std::int64_t v) const;
  std::string state_key(const State& s) const;
  ObjectiveVector root_offset() const;

 private:
  std::size_t n_;
  MccavpData data_;
};

using AnyModel = std::variant<KnapsackModel, SetPackingModel, SetCoveringModel, TspModel, MccavpModel>;

AnyModel build_model(const Instance& inst);

// Compiled network plus the node comparator the problem class offers for
// top-down label filtering (knapsack only).
struct CompiledInstance {
  Network network;
  std::optional<NodeDominance> topdown_filter;
};

CompiledInstance compile_instance(const Instance& inst, const CompileOptions& options = {});

// ---------------------------------------------------------------------------
// Direct evaluation (independent of the models above).

struct Evaluation {
  bool feasible = false;
  ObjectiveVector value;  // original sense
};

// `x` has n entries; for TSP it is a tour (1-based cities) starting at 1.
Evaluation evaluate(const Instance& inst, const std::vector<std::int64_t>& x);

// Maps an arc-decision sequence of a compiled network to the solution vector
// accepted by evaluate().
std::vector<std::int64_t> decisions_to_solution(const Instance& inst, const std::vector<std::int64_t>& decisions);

// Canonical (maximize) frontier -> original-sense frontier, sorted ascending.
std::vector<ObjectiveVector> to_original_sense(const Instance& inst, std::vector<ObjectiveVector> frontier);
// Original-sense objective vector -> canonical (maximize) vector.
ObjectiveVector to_canonical(const Instance& inst, const ObjectiveVector& value);

// ---------------------------------------------------------------------------
// Seeded generation.

// SplitMix64 with rejection sampling for unbiased integer ranges.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

struct GenerateParams {
  std::int64_t max_abs_coefficient = 50;  // M (mccavp)
  double cardinality_ratio = 0.5;         // delta (mccavp)
  std::size_t ones_per_row = 10;          // cover/pack, capped at n
  std::size_t rows = 0;                   // cover/pack; 0 = max(1, n/5)
};

Instance generate(ProblemClass problem, std::size_t n, std::size_t k, std::uint64_t seed,
                  const GenerateParams& params = {});

// ---------------------------------------------------------------------------
// Text formats.

void write_instance(std::ostream& out, const Instance& inst);
std::string format_instance(const Instance& inst);
Instance read_instance(std::istream& in);
Instance parse_instance(const std::string& text);

// `K <k> <count>` then one point per line.
std::string format_frontier(std::size_t k, const std::vector<ObjectiveVector>& points);
std::vector<ObjectiveVector> parse_frontier(const std::string& text);

}  // namespace modo
