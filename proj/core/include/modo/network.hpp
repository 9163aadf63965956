#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modo/objective.hpp"

namespace modo {

using NodeId = std::uint32_t;
using ArcId = std::uint32_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr ArcId kNoArc = std::numeric_limits<ArcId>::max();

struct Node {
  std::size_t layer = 0;
  // Canonical serialization of the DP state that produced the node (may be
  // empty for hand-built networks).
  std::string state_key;
  std::vector<ArcId> in;
  std::vector<ArcId> out;
  bool alive = true;
  // Entries of in/out that no longer belong there (removed or redirected
  // arcs); dropped on the next access through Network.
  std::uint32_t in_stale = 0;
  std::uint32_t out_stale = 0;
};

struct Arc {
  NodeId tail = kNoNode;
  NodeId head = kNoNode;
  ObjectiveVector weight;
  // Variable value encoded by the arc; empty for synthetic arcs.
  std::optional<std::int64_t> decision;
  bool alive = true;
};

// Layered acyclic multi-digraph whose root-to-terminal path weights encode
// the images of a problem's feasible solutions.
//
// Layers are numbered 0..n: layer 0 holds the root, layer n the terminal.
// Arcs only connect layer j to layer j+1. Removed nodes and arcs are
// tombstoned, so ids stay stable for the lifetime of the network.
class Network {
 public:
  Network(std::size_t objectives, std::size_t num_layers);

  std::size_t objectives() const noexcept { return k_; }
  std::size_t num_layers() const noexcept { return layers_.size(); }
  // Number of variables, i.e. arc layers.
  std::size_t stages() const noexcept { return layers_.size() - 1; }

  NodeId add_node(std::size_t layer, std::string state_key = {});
  ArcId add_arc(NodeId tail, NodeId head, ObjectiveVector weight,
                std::optional<std::int64_t> decision = std::nullopt);

  void remove_arc(ArcId a);
  // Removes the node together with its incident arcs.
  void remove_node(NodeId u);
  // Moves the head of `a` to `new_head` (same layer as the old head).
  void redirect_head(ArcId a, NodeId new_head);
  void set_weight(ArcId a, const ObjectiveVector& w);

  // Removes, to fixpoint, every non-root node without incoming arcs and every
  // non-terminal node without outgoing arcs. Returns {nodes, arcs} removed.
  std::pair<std::size_t, std::size_t> remove_orphans();

  // Live nodes of layer j in insertion order.
  // Live nodes of layer j in insertion order. Removed ids are dropped lazily,
  // so do not hold the reference across a remove_node() on the same layer.
  const std::vector<NodeId>& layer(std::size_t j) const;
  std::vector<std::size_t> layer_sizes() const;

  NodeId root() const;
  NodeId terminal() const;

  // Adjacency lists are compacted lazily; as with layer(), do not hold them
  // across a mutation of the same node.
  const Node& node(NodeId u) const { return compact(u); }
  const Arc& arc(ArcId a) const { return arcs_.at(a); }
  const std::vector<ArcId>& out_arcs(NodeId u) const { return compact(u).out; }
  const std::vector<ArcId>& in_arcs(NodeId u) const { return compact(u).in; }

  std::size_t num_nodes() const noexcept { return live_nodes_; }
  std::size_t num_arcs() const noexcept { return live_arcs_; }
  // Upper bounds on ids ever handed out (for sizing side tables).
  std::size_t node_capacity() const noexcept { return nodes_.size(); }
  std::size_t arc_capacity() const noexcept { return arcs_.size(); }

  // Constant added to every path weight when reporting objective values.
  const ObjectiveVector& root_offset() const noexcept { return root_offset_; }
  void set_root_offset(const ObjectiveVector& offset);

 private:
  const Node& compact(NodeId u) const;

  std::size_t k_;
  mutable std::vector<std::vector<NodeId>> layers_;
  mutable std::vector<char> stale_;  // layer holds removed ids
  mutable std::vector<Node> nodes_;
  std::vector<Arc> arcs_;
  std::size_t live_nodes_ = 0;
  std::size_t live_arcs_ = 0;
  ObjectiveVector root_offset_;
};

// Checks the structural invariants: singleton first/last layer, arcs between
// consecutive layers, no orphans, consistent adjacency. Empty iff valid.
std::vector<std::string> validate(const Network& net);

// Sum of arc weights along a contiguous arc path. Throws InputError if the
// arcs do not chain head-to-tail.
ObjectiveVector path_weight(const Network& net, std::span<const ArcId> path);

// Number of root-terminal paths, saturating at UINT64_MAX.
std::uint64_t count_paths(const Network& net);

// Visits every u-v arc path (as an arc sequence). Stops early when the
// visitor returns false.
void for_each_path(const Network& net, NodeId from, NodeId to,
                   const std::function<bool(std::span<const ArcId>)>& visit);

// Weights of all root-terminal paths (multiset, unsorted, without the root
// offset). Throws ResourceError once more than `limit` paths exist.
std::vector<ObjectiveVector> all_path_weights(const Network& net,
                                              std::size_t limit = std::size_t{1} << 22);

// Byte-stable text dump: `N <layer> <index> <state_key_hex>` per node and
// `A <tail> <head> <decision> <w_1> ... <w_K>` per arc (endpoints written as
// layer:index), lines sorted.
std::string canonical_dump(const Network& net);

}  // namespace modo
