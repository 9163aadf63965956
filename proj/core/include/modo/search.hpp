#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "modo/limits.hpp"
#include "modo/network.hpp"

namespace modo {

enum class Direction { kTopDown, kBottomUp };

// State-based dominance between nodes of one layer, used to discard labels.
//
// `dominates(u, v)` must be true only when v's completions dominate u's in
// the filtered direction (suffix subnetworks for top-down, prefix
// subnetworks for bottom-up); labels at u that are dominated by or equal to
// a label at v may then be dropped.
//
// When `rank` is set it must be a strict total order consistent with
// `dominates`: v dominates u iff rank(v) < rank(u). Filtering then runs in a
// single sorted sweep instead of over all ordered node pairs.
struct NodeDominance {
  std::function<bool(NodeId u, NodeId v)> dominates;
  std::function<std::int64_t(NodeId)> rank;
};

struct Label {
  ObjectiveVector value;
  // Arc that created the label and the index of its parent label at the
  // arc's other endpoint; kNoArc for seed labels.
  ArcId via = kNoArc;
  std::uint32_t parent = 0;
};

// Per-node label sets of one direction, indexed by NodeId.
struct LabelSets {
  Direction direction = Direction::kTopDown;
  std::vector<std::vector<Label>> by_node;

  const std::vector<Label>& at(NodeId u) const { return by_node.at(u); }
  std::size_t total(const Network& net, std::size_t layer) const;
};

struct SearchOptions {
  const NodeDominance* topdown_filter = nullptr;
  const NodeDominance* bottomup_filter = nullptr;
  std::size_t label_budget = 100'000'000;
  // Keep label sets of already-processed layers (needed for witness recovery).
  bool keep_all_layers = false;
  // Forces the bidirectional meeting layer (0-based) instead of the greedy rule.
  std::optional<std::size_t> meet_layer;
  Limits limits;
};

struct SearchStats {
  std::uint64_t labels_td = 0;
  std::uint64_t labels_bu = 0;
  std::uint64_t labels_coupled = 0;
  std::uint64_t labels_filtered = 0;
  // 0-based layer where the two directions met (n for pure top-down, 0 for
  // pure bottom-up).
  std::size_t meet_layer = 0;

  std::uint64_t labels_total() const { return labels_td + labels_bu; }
};

struct SearchResult {
  // Frontier in canonical (maximize) sense including the root offset,
  // sorted lexicographically ascending.
  std::vector<ObjectiveVector> frontier;
  SearchStats stats;
};

// Nondominated set of all pairwise sums.
std::vector<ObjectiveVector> couple_sets(const std::vector<ObjectiveVector>& z1,
                                         const std::vector<ObjectiveVector>& z2);

// Removes, for every ordered pair (u, v) of `nodes` with v dominating u, the
// labels of u that are dominated by or equal to a label of v. Returns the
// number of labels removed.
std::size_t filter_labels(std::span<const NodeId> nodes, LabelSets& labels,
                          const NodeDominance& dominance);

// Layer-by-layer label extension from the root. Returns PF(N) + root offset.
SearchResult propagate_topdown(const Network& net, const SearchOptions& options = {});

// Mirror image starting from the terminal.
SearchResult propagate_bottomup(const Network& net, const SearchOptions& options = {});

// Extends the direction with fewer labels on its current layer (ties go
// top-down) until the two fronts meet, then couples on the meeting layer.
SearchResult solve_bidirectional(const Network& net, const SearchOptions& options = {});

// Top-down pass that keeps every layer's labels and predecessors so that
// witnesses can be traced back from the terminal.
class TopDownTrace {
 public:
  explicit TopDownTrace(const Network& net, const SearchOptions& options = {});

  const std::vector<ObjectiveVector>& frontier() const { return frontier_; }
  // Decision sequence of one root-terminal path whose weight plus the root
  // offset equals `target`. Throws InputError if `target` is not a frontier
  // point.
  std::vector<std::int64_t> witness(const ObjectiveVector& target) const;
  // Arc path behind `witness`.
  std::vector<ArcId> witness_path(const ObjectiveVector& target) const;

 private:
  const Network* net_;
  LabelSets labels_;
  std::vector<ObjectiveVector> frontier_;
};

// One-shot convenience wrapper around TopDownTrace.
std::vector<std::int64_t> recover_solution(const Network& net, const ObjectiveVector& target);

}  // namespace modo
