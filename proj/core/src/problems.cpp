#include "modo/problems.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace modo {

namespace {

template <class T>
void append_bytes(std::string& key, const T& value) {
  char buf[sizeof(T)];
  std::memcpy(buf, &value, sizeof(T));
  key.append(buf, sizeof(T));
}

ObjectiveVector column(const std::vector<std::vector<std::int64_t>>& rows, std::size_t j, std::int64_t scale) {
  ObjectiveVector out(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) out[k] = rows[k][j] * scale;
  return out;
}

std::int64_t checked_abs(std::int64_t x) {
  if (x == INT64_MIN) throw OverflowError("absolute value overflow");
  return x < 0 ? -x : x;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

void check_matrix(const std::vector<std::vector<std::int64_t>>& m, std::size_t rows, std::size_t cols,
                  const std::string& name) {
  require(m.size() == rows, name + ": expected " + std::to_string(rows) + " rows");
  for (const auto& r : m) require(r.size() == cols, name + ": expected " + std::to_string(cols) + " columns");
}

std::pair<std::vector<std::vector<std::size_t>>, std::vector<std::size_t>> index_rows(const CoverPackData& d,
                                                                                     std::size_t n) {
  std::vector<std::vector<std::size_t>> rows_of(n);
  std::vector<std::size_t> last(d.rows.size(), 0);
  for (std::size_t i = 0; i < d.rows.size(); ++i) {
    for (std::size_t c : d.rows[i]) rows_of[c].push_back(i);
    last[i] = d.rows[i].back();
  }
  return {std::move(rows_of), std::move(last)};
}

}  // namespace

// ---------------------------------------------------------------------------

std::string to_string(ProblemClass c) {
  switch (c) {
    case ProblemClass::kKnapsack: return "knapsack";
    case ProblemClass::kSetCover: return "setcover";
    case ProblemClass::kSetPack: return "setpack";
    case ProblemClass::kTsp: return "tsp";
    case ProblemClass::kMccavp: return "mccavp";
  }
  return "unknown";
}

ProblemClass parse_problem_class(const std::string& name) {
  for (auto c : {ProblemClass::kKnapsack, ProblemClass::kSetCover, ProblemClass::kSetPack, ProblemClass::kTsp,
                 ProblemClass::kMccavp}) {
    if (to_string(c) == name) return c;
  }
  throw InputError("unknown problem class '" + name + "'");
}

Sense natural_sense(ProblemClass c) {
  switch (c) {
    case ProblemClass::kKnapsack:
    case ProblemClass::kSetPack: return Sense::kMax;
    default: return Sense::kMin;
  }
}

void validate(const Instance& inst) {
  require(inst.n >= 1, "instance needs at least one variable");
  require(inst.k >= 1 && inst.k <= kMaxObjectives, "objective count out of range");
  require(inst.sense == natural_sense(inst.problem), "sense does not match problem class");
  switch (inst.problem) {
    case ProblemClass::kKnapsack: {
      const auto* d = std::get_if<KnapsackData>(&inst.payload);
      require(d != nullptr, "knapsack instance without knapsack payload");
      require(d->weights.size() == inst.n, "knapsack: weight vector has wrong length");
      require(d->capacity >= 0, "knapsack: negative capacity");
      for (auto w : d->weights) require(w >= 1, "knapsack: weights must be positive");
      check_matrix(d->profits, inst.k, inst.n, "knapsack profits");
      break;
    }
    case ProblemClass::kSetCover:
    case ProblemClass::kSetPack: {
      const auto* d = std::get_if<CoverPackData>(&inst.payload);
      require(d != nullptr, "cover/pack instance without matrix payload");
      for (const auto& row : d->rows) {
        require(!row.empty(), "cover/pack: empty constraint row");
        require(std::is_sorted(row.begin(), row.end()) &&
                    std::adjacent_find(row.begin(), row.end()) == row.end(),
                "cover/pack: row columns must be strictly increasing");
        require(row.back() < inst.n, "cover/pack: column index out of range");
      }
      check_matrix(d->costs, inst.k, inst.n, "cover/pack costs");
      break;
    }
    case ProblemClass::kTsp: {
      const auto* d = std::get_if<TspData>(&inst.payload);
      require(d != nullptr, "tsp instance without distance payload");
      require(inst.n >= 2 && inst.n <= 64, "tsp: city count must lie in [2, 64]");
      require(d->distances.size() == inst.k, "tsp: expected one distance matrix per objective");
      for (const auto& m : d->distances) {
        check_matrix(m, inst.n, inst.n, "tsp distances");
        for (std::size_t i = 0; i < inst.n; ++i) {
          require(m[i][i] == 0, "tsp: nonzero diagonal");
          for (std::size_t j = 0; j < inst.n; ++j) require(m[i][j] == m[j][i], "tsp: asymmetric distances");
        }
      }
      break;
    }
    case ProblemClass::kMccavp: {
      const auto* d = std::get_if<MccavpData>(&inst.payload);
      require(d != nullptr, "mccavp instance without coefficient payload");
      require(d->cardinality >= 0, "mccavp: negative cardinality bound");
      check_matrix(d->a, inst.k, inst.n, "mccavp coefficients");
      require(d->b.size() == inst.k, "mccavp: target vector has wrong length");
      break;
    }
  }
}

// ---------------------------------------------------------------------------

bool Bits::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool Bits::all() const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (!test(i)) return false;
  }
  return true;
}

std::string Bits::key() const {
  std::string key;
  for (auto w : words_) append_bytes(key, w);
  return key;
}

// ---------------------------------------------------------------------------

KnapsackModel::KnapsackModel(const Instance& inst) : data_(std::get<KnapsackData>(inst.payload)) {}

std::vector<std::int64_t> KnapsackModel::feasible_values(std::size_t j, const State& s) const {
  if (s + data_.weights[j] <= data_.capacity) return {0, 1};
  return {0};
}

KnapsackModel::State KnapsackModel::transition(std::size_t j, const State& s, std::int64_t v) const {
  return s + v * data_.weights[j];
}

ObjectiveVector KnapsackModel::reward(std::size_t j, const State&, std::int64_t v) const {
  return column(data_.profits, j, v);
}

std::string KnapsackModel::state_key(const State& s) const {
  std::string key;
  append_bytes(key, s);
  return key;
}

// ---------------------------------------------------------------------------

SetPackingModel::SetPackingModel(const Instance& inst)
    : n_(inst.n), data_(std::get<CoverPackData>(inst.payload)) {
  std::tie(rows_of_, last_column_) = index_rows(data_, n_);
}

std::vector<std::int64_t> SetPackingModel::feasible_values(std::size_t j, const State& s) const {
  for (std::size_t i : rows_of_[j]) {
    if (s.test(i)) return {0};
  }
  return {0, 1};
}

SetPackingModel::State SetPackingModel::transition(std::size_t j, const State& s, std::int64_t v) const {
  State next = s;
  for (std::size_t i : rows_of_[j]) {
    // Rows ending at j are resolved either way; earlier rows become tight.
    if (last_column_[i] == j || v == 1) next.set(i);
  }
  return next;
}

ObjectiveVector SetPackingModel::reward(std::size_t j, const State&, std::int64_t v) const {
  return column(data_.costs, j, v);
}

// ---------------------------------------------------------------------------

SetCoveringModel::SetCoveringModel(const Instance& inst)
    : n_(inst.n), data_(std::get<CoverPackData>(inst.payload)) {
  std::tie(rows_of_, last_column_) = index_rows(data_, n_);
}

SetCoveringModel::State SetCoveringModel::initial_state() const {
  Bits s(data_.rows.size());
  for (std::size_t i = 0; i < data_.rows.size(); ++i) s.set(i);
  return s;
}

std::vector<std::int64_t> SetCoveringModel::feasible_values(std::size_t j, const State& s) const {
  for (std::size_t i : rows_of_[j]) {
    if (s.test(i) && last_column_[i] == j) return {1};
  }
  return {0, 1};
}

SetCoveringModel::State SetCoveringModel::transition(std::size_t j, const State& s, std::int64_t v) const {
  State next = s;
  if (v == 1) {
    for (std::size_t i : rows_of_[j]) next.set(i, false);
  }
  return next;
}

ObjectiveVector SetCoveringModel::reward(std::size_t j, const State&, std::int64_t v) const {
  return column(data_.costs, j, -v);
}

// ---------------------------------------------------------------------------

TspModel::TspModel(const Instance& inst) : n_(inst.n), data_(std::get<TspData>(inst.payload)) {}

TspModel::State TspModel::initial_state() const {
  State s;
  for (std::size_t c = 1; c < n_; ++c) s.unvisited |= std::uint64_t{1} << c;
  s.last = 0;
  return s;
}

std::vector<std::int64_t> TspModel::feasible_values(std::size_t j, const State& s) const {
  if (j + 1 == n_) return {1};
  std::vector<std::int64_t> values;
  for (std::size_t c = 1; c < n_; ++c) {
    if ((s.unvisited >> c) & 1U) values.push_back(static_cast<std::int64_t>(c) + 1);
  }
  return values;
}

TspModel::State TspModel::transition(std::size_t, const State& s, std::int64_t v) const {
  const auto city = static_cast<std::size_t>(v - 1);
  return State{s.unvisited & ~(std::uint64_t{1} << city), city};
}

ObjectiveVector TspModel::reward(std::size_t, const State& s, std::int64_t v) const {
  const auto city = static_cast<std::size_t>(v - 1);
  ObjectiveVector out(data_.distances.size());
  for (std::size_t k = 0; k < data_.distances.size(); ++k) out[k] = -data_.distances[k][s.last][city];
  return out;
}

std::string TspModel::state_key(const State& s) const {
  std::string key;
  append_bytes(key, s.unvisited);
  append_bytes(key, static_cast<std::uint64_t>(s.last));
  return key;
}

// ---------------------------------------------------------------------------

MccavpModel::MccavpModel(const Instance& inst) : n_(inst.n), data_(std::get<MccavpData>(inst.payload)) {}

MccavpModel::State MccavpModel::initial_state() const { return State{ObjectiveVector(data_.b.size()), 0}; }

std::vector<std::int64_t> MccavpModel::feasible_values(std::size_t, const State& s) const {
  if (s.count + 1 <= data_.cardinality) return {0, 1};
  return {0};
}

MccavpModel::State MccavpModel::transition(std::size_t j, const State& s, std::int64_t v) const {
  return State{s.theta + column(data_.a, j, v), s.count + v};
}

ObjectiveVector MccavpModel::reward(std::size_t j, const State& s, std::int64_t v) const {
  ObjectiveVector out(data_.b.size());
  for (std::size_t k = 0; k < data_.b.size(); ++k) {
    const std::int64_t before = checked_abs(s.theta[k] - data_.b[k]);
    const std::int64_t after = checked_abs(s.theta[k] + data_.a[k][j] * v - data_.b[k]);
    out[k] = before - after;
  }
  return out;
}

std::string MccavpModel::state_key(const State& s) const {
  std::string key;
  for (auto t : s.theta) append_bytes(key, t);
  append_bytes(key, s.count);
  return key;
}

ObjectiveVector MccavpModel::root_offset() const {
  ObjectiveVector out(data_.b.size());
  for (std::size_t k = 0; k < data_.b.size(); ++k) out[k] = -checked_abs(data_.b[k]);
  return out;
}

// ---------------------------------------------------------------------------

AnyModel build_model(const Instance& inst) {
  validate(inst);
  switch (inst.problem) {
    case ProblemClass::kKnapsack: return KnapsackModel(inst);
    case ProblemClass::kSetPack: return SetPackingModel(inst);
    case ProblemClass::kSetCover: return SetCoveringModel(inst);
    case ProblemClass::kTsp: return TspModel(inst);
    case ProblemClass::kMccavp: return MccavpModel(inst);
  }
  throw InputError("unknown problem class");
}

CompiledInstance compile_instance(const Instance& inst, const CompileOptions& options) {
  return std::visit(
      [&](const auto& model) -> CompiledInstance {
        using M = std::decay_t<decltype(model)>;
        auto compiled = compile(model, options);
        CompiledInstance out{std::move(compiled.network), std::nullopt};
        if constexpr (std::is_same_v<M, KnapsackModel>) {
          auto states = std::make_shared<std::vector<KnapsackModel::State>>(std::move(compiled.states));
          NodeDominance dom;
          dom.dominates = [states](NodeId u, NodeId v) { return (*states)[v] < (*states)[u]; };
          dom.rank = [states](NodeId u) { return (*states)[u]; };
          out.topdown_filter = std::move(dom);
        }
        return out;
      },
      build_model(inst));
}

// ---------------------------------------------------------------------------

Evaluation evaluate(const Instance& inst, const std::vector<std::int64_t>& x) {
  if (x.size() != inst.n) throw DimensionError("solution vector has wrong length");
  Evaluation ev;
  ev.value = ObjectiveVector(inst.k);
  const bool binary = std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0 || v == 1; });

  switch (inst.problem) {
    case ProblemClass::kKnapsack: {
      const auto& d = std::get<KnapsackData>(inst.payload);
      std::int64_t used = 0;
      for (std::size_t j = 0; j < inst.n; ++j) {
        used += x[j] * d.weights[j];
        for (std::size_t k = 0; k < inst.k; ++k) ev.value[k] += x[j] * d.profits[k][j];
      }
      ev.feasible = binary && used <= d.capacity;
      break;
    }
    case ProblemClass::kSetCover:
    case ProblemClass::kSetPack: {
      const auto& d = std::get<CoverPackData>(inst.payload);
      bool ok = binary;
      for (const auto& row : d.rows) {
        std::int64_t sum = 0;
        for (std::size_t c : row) sum += x[c];
        ok = ok && (inst.problem == ProblemClass::kSetCover ? sum >= 1 : sum <= 1);
      }
      for (std::size_t j = 0; j < inst.n; ++j) {
        for (std::size_t k = 0; k < inst.k; ++k) ev.value[k] += x[j] * d.costs[k][j];
      }
      ev.feasible = ok;
      break;
    }
    case ProblemClass::kTsp: {
      const auto& d = std::get<TspData>(inst.payload);
      std::vector<char> seen(inst.n, 0);
      bool ok = x[0] == 1;
      for (auto c : x) {
        if (c < 1 || c > static_cast<std::int64_t>(inst.n) || seen[c - 1]) {
          ok = false;
          break;
        }
        seen[c - 1] = 1;
      }
      ev.feasible = ok;
      if (ok) {
        for (std::size_t i = 0; i < inst.n; ++i) {
          const auto from = static_cast<std::size_t>(x[i] - 1);
          const auto to = static_cast<std::size_t>(x[(i + 1) % inst.n] - 1);
          for (std::size_t k = 0; k < inst.k; ++k) ev.value[k] += d.distances[k][from][to];
        }
      }
      break;
    }
    case ProblemClass::kMccavp: {
      const auto& d = std::get<MccavpData>(inst.payload);
      const std::int64_t ones = std::accumulate(x.begin(), x.end(), std::int64_t{0});
      for (std::size_t k = 0; k < inst.k; ++k) {
        std::int64_t dot = 0;
        for (std::size_t j = 0; j < inst.n; ++j) dot += d.a[k][j] * x[j];
        ev.value[k] = checked_abs(dot - d.b[k]);
      }
      ev.feasible = binary && ones <= d.cardinality;
      break;
    }
  }
  return ev;
}

std::vector<std::int64_t> decisions_to_solution(const Instance& inst, const std::vector<std::int64_t>& decisions) {
  if (decisions.size() != inst.n) throw DimensionError("decision sequence has wrong length");
  if (inst.problem != ProblemClass::kTsp) return decisions;
  std::vector<std::int64_t> tour{1};
  tour.insert(tour.end(), decisions.begin(), decisions.end() - 1);
  return tour;
}

std::vector<ObjectiveVector> to_original_sense(const Instance& inst, std::vector<ObjectiveVector> frontier) {
  if (inst.sense == Sense::kMin) return negate_all(std::move(frontier));
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

ObjectiveVector to_canonical(const Instance& inst, const ObjectiveVector& value) {
  return inst.sense == Sense::kMin ? -value : value;
}

}  // namespace modo

// ---------------------------------------------------------------------------

namespace modo {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InputError("uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == UINT64_MAX) return static_cast<std::int64_t>(next());
  const std::uint64_t range = span + 1;
  // Largest multiple of `range` representable; draws at or above it are rejected.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range + 1) % range;
  std::uint64_t x;
  do {
    x = next();
  } while (x > limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
}

namespace {

std::vector<std::vector<std::int64_t>> draw_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols,
                                                   std::int64_t lo, std::int64_t hi) {
  std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols));
  for (auto& r : m) {
    for (auto& x : r) x = rng.uniform(lo, hi);
  }
  return m;
}

std::int64_t floor_half(std::int64_t x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

}  // namespace

Instance generate(ProblemClass problem, std::size_t n, std::size_t k, std::uint64_t seed,
                  const GenerateParams& params) {
  if (n < 1) throw InputError("generate: n must be positive");
  if (k < 1 || k > kMaxObjectives) throw InputError("generate: K out of range");
  SplitMix64 rng(seed);
  Instance inst;
  inst.problem = problem;
  inst.n = n;
  inst.k = k;
  inst.sense = natural_sense(problem);

  switch (problem) {
    case ProblemClass::kKnapsack: {
      KnapsackData d;
      d.weights = draw_matrix(rng, 1, n, 1, 1000).front();
      d.profits = draw_matrix(rng, k, n, 1, 1000);
      const std::int64_t total = std::accumulate(d.weights.begin(), d.weights.end(), std::int64_t{0});
      d.capacity = (total + 1) / 2;
      inst.payload = std::move(d);
      break;
    }
    case ProblemClass::kSetCover:
    case ProblemClass::kSetPack: {
      if (params.ones_per_row < 1) throw InputError("generate: ones_per_row must be positive");
      CoverPackData d;
      const std::size_t m = params.rows != 0 ? params.rows : std::max<std::size_t>(1, n / 5);
      const std::size_t ones = std::min(params.ones_per_row, n);
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        for (std::size_t t = 0; t < ones; ++t) {
          const auto r = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(t), static_cast<std::int64_t>(n - 1)));
          std::swap(perm[t], perm[r]);
        }
        std::vector<std::size_t> row(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(ones));
        std::sort(row.begin(), row.end());
        d.rows.push_back(std::move(row));
      }
      d.costs = draw_matrix(rng, k, n, 1, 1000);
      inst.payload = std::move(d);
      break;
    }
    case ProblemClass::kTsp: {
      if (n < 2 || n > 64) throw InputError("generate: tsp needs 2 <= n <= 64");
      TspData d;
      for (std::size_t obj = 0; obj < k; ++obj) {
        std::vector<std::pair<std::int64_t, std::int64_t>> pts(n);
        for (auto& [x, y] : pts) {
          x = rng.uniform(0, 1000);
          y = rng.uniform(0, 1000);
        }
        std::vector<std::vector<std::int64_t>> dist(n, std::vector<std::int64_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            const double dx = static_cast<double>(pts[i].first - pts[j].first);
            const double dy = static_cast<double>(pts[i].second - pts[j].second);
            dist[i][j] = std::llround(std::sqrt(dx * dx + dy * dy));
          }
        }
        d.distances.push_back(std::move(dist));
      }
      inst.payload = std::move(d);
      break;
    }
    case ProblemClass::kMccavp: {
      if (params.max_abs_coefficient < 1) throw InputError("generate: M must be positive");
      if (!(params.cardinality_ratio >= 0.0 && params.cardinality_ratio <= 1.0)) {
        throw InputError("generate: delta must lie in [0, 1]");
      }
      MccavpData d;
      d.a = draw_matrix(rng, k, n, -params.max_abs_coefficient, params.max_abs_coefficient);
      for (const auto& row : d.a) {
        d.b.push_back(floor_half(std::accumulate(row.begin(), row.end(), std::int64_t{0})));
      }
      // The epsilon keeps e.g. 10 * 0.3 from flooring to 2.
      d.cardinality = static_cast<std::int64_t>(std::floor(static_cast<double>(n) * params.cardinality_ratio + 1e-9));
      inst.payload = std::move(d);
      break;
    }
  }
  return inst;
}

// ---------------------------------------------------------------------------

namespace {

template <class T>
void write_row(std::ostream& out, const char* tag, const std::vector<T>& values, std::int64_t bias = 0) {
  if (tag != nullptr) out << tag;
  bool first = tag == nullptr;
  for (const auto& v : values) {
    if (!first) out << ' ';
    out << static_cast<std::int64_t>(v) + bias;
    first = false;
  }
  out << '\n';
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line split into tokens.
  std::vector<std::string> tokens(const char* what) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::istringstream ss(line);
      std::vector<std::string> out;
      std::string t;
      while (ss >> t) out.push_back(t);
      if (!out.empty()) return out;
    }
    throw InputError(std::string("unexpected end of input, expected ") + what);
  }

  std::vector<std::int64_t> ints(const char* tag, std::size_t count) {
    auto t = tokens(tag != nullptr ? tag : "integer row");
    std::size_t start = 0;
    if (tag != nullptr) {
      if (t.front() != tag) fail(std::string("expected '") + tag + "'");
      start = 1;
    }
    if (t.size() - start != count) {
      fail("expected " + std::to_string(count) + " values, got " + std::to_string(t.size() - start));
    }
    std::vector<std::int64_t> out;
    for (std::size_t i = start; i < t.size(); ++i) out.push_back(to_int(t[i]));
    return out;
  }

  std::vector<std::int64_t> any_ints() {
    std::vector<std::int64_t> out;
    for (const auto& t : tokens("integer row")) out.push_back(to_int(t));
    return out;
  }

  std::int64_t to_int(const std::string& s) const {
    std::int64_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) fail("bad integer '" + s + "'");
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("line " + std::to_string(line_no_) + ": " + what);
  }

  bool at_end() {
    std::string rest;
    while (std::getline(in_, rest)) {
      if (rest.find_first_not_of(" \t\r") != std::string::npos) return false;
    }
    return true;
  }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

std::size_t header_field(const LineReader& r, const std::string& token, const std::string& key) {
  if (token.rfind(key + "=", 0) != 0) r.fail("expected " + key + "=<int>");
  const auto v = r.to_int(token.substr(key.size() + 1));
  if (v < 0) r.fail(key + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

}  // namespace

void write_instance(std::ostream& out, const Instance& inst) {
  validate(inst);
  out << "MODO " << to_string(inst.problem) << " n=" << inst.n << " K=" << inst.k
      << " sense=" << (inst.sense == Sense::kMin ? "min" : "max") << '\n';
  switch (inst.problem) {
    case ProblemClass::kKnapsack: {
      const auto& d = std::get<KnapsackData>(inst.payload);
      out << "W " << d.capacity << '\n';
      write_row(out, "w", d.weights);
      for (const auto& p : d.profits) write_row(out, "p", p);
      break;
    }
    case ProblemClass::kSetCover:
    case ProblemClass::kSetPack: {
      const auto& d = std::get<CoverPackData>(inst.payload);
      out << "m " << d.rows.size() << '\n';
      for (const auto& row : d.rows) write_row(out, nullptr, row, 1);
      for (const auto& c : d.costs) write_row(out, "c", c);
      break;
    }
    case ProblemClass::kTsp: {
      for (const auto& m : std::get<TspData>(inst.payload).distances) {
        for (const auto& row : m) write_row(out, nullptr, row);
      }
      break;
    }
    case ProblemClass::kMccavp: {
      const auto& d = std::get<MccavpData>(inst.payload);
      out << "C " << d.cardinality << '\n';
      for (const auto& a : d.a) write_row(out, "a", a);
      write_row(out, "b", d.b);
      break;
    }
  }
}

std::string format_instance(const Instance& inst) {
  std::ostringstream out;
  write_instance(out, inst);
  return out.str();
}

Instance read_instance(std::istream& in) {
  LineReader r(in);
  const auto head = r.tokens("header");
  if (head.size() != 5 || head[0] != "MODO") r.fail("expected 'MODO <class> n=<n> K=<k> sense=<min|max>'");
  Instance inst;
  inst.problem = parse_problem_class(head[1]);
  inst.n = header_field(r, head[2], "n");
  inst.k = header_field(r, head[3], "K");
  if (head[4] == "sense=min") {
    inst.sense = Sense::kMin;
  } else if (head[4] == "sense=max") {
    inst.sense = Sense::kMax;
  } else {
    r.fail("expected sense=min or sense=max");
  }
  if (inst.k < 1 || inst.k > kMaxObjectives) r.fail("K out of range");

  switch (inst.problem) {
    case ProblemClass::kKnapsack: {
      KnapsackData d;
      d.capacity = r.ints("W", 1).front();
      d.weights = r.ints("w", inst.n);
      for (std::size_t k = 0; k < inst.k; ++k) d.profits.push_back(r.ints("p", inst.n));
      inst.payload = std::move(d);
      break;
    }
    case ProblemClass::kSetCover:
    case ProblemClass::kSetPack: {
      CoverPackData d;
      const auto m = r.ints("m", 1).front();
      if (m < 0) r.fail("m must be nonnegative");
      for (std::int64_t i = 0; i < m; ++i) {
        std::vector<std::size_t> row;
        for (auto c : r.any_ints()) {
          if (c < 1 || static_cast<std::size_t>(c) > inst.n) r.fail("column index out of range");
          row.push_back(static_cast<std::size_t>(c - 1));
        }
        d.rows.push_back(std::move(row));
      }
      for (std::size_t k = 0; k < inst.k; ++k) d.costs.push_back(r.ints("c", inst.n));
      inst.payload = std::move(d);
      break;
    }
    case ProblemClass::kTsp: {
      TspData d;
      for (std::size_t k = 0; k < inst.k; ++k) {
        std::vector<std::vector<std::int64_t>> m;
        for (std::size_t i = 0; i < inst.n; ++i) m.push_back(r.ints(nullptr, inst.n));
        d.distances.push_back(std::move(m));
      }
      inst.payload = std::move(d);
      break;
    }
    case ProblemClass::kMccavp: {
      MccavpData d;
      d.cardinality = r.ints("C", 1).front();
      for (std::size_t k = 0; k < inst.k; ++k) d.a.push_back(r.ints("a", inst.n));
      d.b = r.ints("b", inst.k);
      inst.payload = std::move(d);
      break;
    }
  }
  if (!r.at_end()) throw InputError("trailing content after instance payload");
  validate(inst);
  return inst;
}

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return read_instance(in);
}

std::string format_frontier(std::size_t k, const std::vector<ObjectiveVector>& points) {
  std::vector<ObjectiveVector> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream out;
  out << "K " << k << ' ' << sorted.size() << '\n';
  for (const auto& p : sorted) {
    if (p.size() != k) throw DimensionError("frontier point has wrong dimension");
    out << to_string(p) << '\n';
  }
  return out.str();
}

std::vector<ObjectiveVector> parse_frontier(const std::string& text) {
  std::istringstream in(text);
  LineReader r(in);
  const auto head = r.tokens("frontier header");
  if (head.size() != 3 || head[0] != "K") r.fail("expected 'K <k> <count>'");
  const auto k = r.to_int(head[1]);
  const auto count = r.to_int(head[2]);
  if (k < 1 || k > static_cast<std::int64_t>(kMaxObjectives) || count < 0) r.fail("bad frontier header");
  std::vector<ObjectiveVector> points;
  for (std::int64_t i = 0; i < count; ++i) {
    const auto row = r.ints(nullptr, static_cast<std::size_t>(k));
    points.emplace_back(std::span<const std::int64_t>(row));
  }
  if (!r.at_end()) throw InputError("trailing content after frontier points");
  return points;
}

}  // namespace modo
