#pragma once

#include <cstddef>

#include "modo/limits.hpp"
#include "modo/network.hpp"

namespace modo {

// Validity-preserving operations: each one shrinks (or reshapes) a network
// without changing the nondominated set of its root-terminal path weights.

struct ReductionStats {
  std::size_t nodes_removed = 0;
  std::size_t arcs_removed = 0;
  std::size_t shifts_applied = 0;
  std::size_t merges_applied = 0;

  ReductionStats& operator+=(const ReductionStats& o) {
    nodes_removed += o.nodes_removed;
    arcs_removed += o.arcs_removed;
    shifts_applied += o.shifts_applied;
    merges_applied += o.merges_applied;
    return *this;
  }
};

// Subtracts `c` from every arc leaving `u` and adds it to every arc entering
// `u`. Path weights are unchanged. `u` must not be the root or terminal.
void weight_shift(Network& net, NodeId u, const ObjectiveVector& c);

// Merges `u2` into `u1` when their outgoing arcs match one-to-one on
// (head, weight): u2's outgoing arcs are deleted, its incoming arcs are
// redirected to u1, and u2 is removed. Returns false (and leaves the network
// untouched) when the outgoing multisets differ.
bool node_merge(Network& net, NodeId u1, NodeId u2);

// Bottom-up reduction: for every layer from the penultimate up to layer 1,
// shifts each node by the componentwise minimum of its outgoing arc weights,
// then merges all mergeable nodes of the layer.
ReductionStats reduce_sweep(Network& net, const Limits& limits = {});

// Removes every arc whose weight is dominated by, or equal to, the weight of
// a parallel arc (one survivor per equal group). Returns the number removed.
std::size_t prune_parallel_arcs(Network& net);

// Whether {u, v} is an isolating pair: the subnetwork of nodes and arcs on
// u-v paths exchanges arcs with the rest only by entering u and leaving v.
bool is_isolating(const Network& net, NodeId u, NodeId v);

struct ArcRemovalOptions {
  std::size_t delta = 2;
  // Subnetworks with more paths than this are skipped.
  std::size_t max_paths = 4096;
  Limits limits;
};

// For every isolating pair (u, v) exactly `delta` layers apart, removes each
// arc of the u-v subnetwork whose removal leaves the subnetwork's frontier
// unchanged; stranded nodes are then deleted. Returns {nodes, arcs} removed.
ReductionStats local_arc_removal(Network& net, const ArcRemovalOptions& options = {});

struct PipelineOptions {
  bool reduce = true;
  bool prune = true;
  bool arc_removal = true;
  std::size_t delta = 2;
  Limits limits;
};

// reduce_sweep -> prune_parallel_arcs -> local_arc_removal, each optional.
ReductionStats apply_pipeline(Network& net, const PipelineOptions& options = {});

}  // namespace modo
