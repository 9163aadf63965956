#include "modo/vpo.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace modo {

namespace {

using Signature = std::vector<std::pair<NodeId, ObjectiveVector>>;

Signature out_signature(const Network& net, NodeId u) {
  Signature sig;
  sig.reserve(net.out_arcs(u).size());
  for (ArcId a : net.out_arcs(u)) sig.emplace_back(net.arc(a).head, net.arc(a).weight);
  std::sort(sig.begin(), sig.end());
  return sig;
}

// Caller guarantees u1 and u2 have equal signatures.
std::size_t merge_unchecked(Network& net, NodeId u1, NodeId u2) {
  const std::size_t dropped = net.out_arcs(u2).size();
  for (ArcId a : std::vector<ArcId>(net.out_arcs(u2))) net.remove_arc(a);
  for (ArcId a : std::vector<ArcId>(net.in_arcs(u2))) net.redirect_head(a, u1);
  net.remove_node(u2);
  return dropped;
}

bool is_endpoint(const Network& net, NodeId u) {
  const std::size_t layer = net.node(u).layer;
  return layer == 0 || layer + 1 == net.num_layers();
}

}  // namespace

void weight_shift(Network& net, NodeId u, const ObjectiveVector& c) {
  if (!net.node(u).alive) throw InputError("weight_shift on a removed node");
  if (is_endpoint(net, u)) throw InputError("weight_shift is not defined for the root or terminal");
  // Compute every new weight first so an overflow leaves the network intact.
  std::vector<std::pair<ArcId, ObjectiveVector>> updates;
  for (ArcId a : net.out_arcs(u)) updates.emplace_back(a, net.arc(a).weight - c);
  for (ArcId a : net.in_arcs(u)) updates.emplace_back(a, net.arc(a).weight + c);
  for (const auto& [a, w] : updates) net.set_weight(a, w);
}

bool node_merge(Network& net, NodeId u1, NodeId u2) {
  if (u1 == u2) throw InputError("node_merge needs two distinct nodes");
  if (net.node(u1).layer != net.node(u2).layer) throw InputError("node_merge across layers");
  if (!net.node(u1).alive || !net.node(u2).alive) throw InputError("node_merge on a removed node");
  if (is_endpoint(net, u1) || is_endpoint(net, u2)) {
    throw InputError("node_merge is not defined for the root or terminal");
  }
  if (out_signature(net, u1) != out_signature(net, u2)) return false;
  merge_unchecked(net, u1, u2);
  return true;
}

ReductionStats reduce_sweep(Network& net, const Limits& limits) {
  ReductionStats stats;
  if (net.num_layers() < 3) return stats;
  for (std::size_t j = net.num_layers() - 2; j >= 1; --j) {
    limits.check_deadline();
    const std::vector<NodeId> members = net.layer(j);
    for (NodeId u : members) {
      const auto& outs = net.out_arcs(u);
      if (outs.empty()) continue;
      ObjectiveVector c = net.arc(outs.front()).weight;
      for (ArcId a : outs) c = componentwise_min(c, net.arc(a).weight);
      if (!c.is_zero()) {
        weight_shift(net, u, c);
        ++stats.shifts_applied;
      }
    }
    std::map<Signature, NodeId> first_with;
    for (NodeId u : members) {
      auto [it, inserted] = first_with.try_emplace(out_signature(net, u), u);
      if (inserted) continue;
      stats.arcs_removed += merge_unchecked(net, it->second, u);
      ++stats.nodes_removed;
      ++stats.merges_applied;
    }
  }
  return stats;
}

std::size_t prune_parallel_arcs(Network& net) {
  std::size_t removed = 0;
  for (std::size_t j = 0; j + 1 < net.num_layers(); ++j) {
    for (NodeId u : net.layer(j)) {
      std::vector<ArcId> outs = net.out_arcs(u);
      std::sort(outs.begin(), outs.end(), [&](ArcId a, ArcId b) {
        const Arc& x = net.arc(a);
        const Arc& y = net.arc(b);
        if (x.head != y.head) return x.head < y.head;
        if (x.weight != y.weight) return y.weight < x.weight;
        return a < b;
      });
      std::vector<ArcId> doomed;
      std::size_t group_start = 0;
      for (std::size_t i = 0; i < outs.size(); ++i) {
        if (net.arc(outs[i]).head != net.arc(outs[group_start]).head) group_start = i;
        for (std::size_t s = group_start; s < i; ++s) {
          if (std::find(doomed.begin(), doomed.end(), outs[s]) != doomed.end()) continue;
          if (weakly_dominates(net.arc(outs[s]).weight, net.arc(outs[i]).weight)) {
            doomed.push_back(outs[i]);
            break;
          }
        }
      }
      for (ArcId a : doomed) net.remove_arc(a);
      removed += doomed.size();
    }
  }
  return removed;
}

namespace {

// Sorted ids of the nodes lying on some u-v path. Explores only the part of
// the network between the two layers that is reachable from u.
std::vector<NodeId> subnetwork_members(const Network& net, NodeId u, NodeId v) {
  const std::size_t lu = net.node(u).layer;
  const std::size_t lv = net.node(v).layer;
  std::vector<NodeId> forward{u};
  std::vector<NodeId> frontier{u};
  for (std::size_t j = lu; j < lv && !frontier.empty(); ++j) {
    std::vector<NodeId> next;
    for (NodeId w : frontier) {
      for (ArcId a : net.out_arcs(w)) next.push_back(net.arc(a).head);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    forward.insert(forward.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(forward.begin(), forward.end());
  auto reached = [&](NodeId w) { return std::binary_search(forward.begin(), forward.end(), w); };
  if (!reached(v)) return {};

  std::vector<NodeId> member{v};
  frontier = {v};
  for (std::size_t j = lv; j > lu && !frontier.empty(); --j) {
    std::vector<NodeId> prev;
    for (NodeId w : frontier) {
      for (ArcId a : net.in_arcs(w)) {
        if (reached(net.arc(a).tail)) prev.push_back(net.arc(a).tail);
      }
    }
    std::sort(prev.begin(), prev.end());
    prev.erase(std::unique(prev.begin(), prev.end()), prev.end());
    member.insert(member.end(), prev.begin(), prev.end());
    frontier = std::move(prev);
  }
  std::sort(member.begin(), member.end());
  return member;
}

}  // namespace

bool is_isolating(const Network& net, NodeId u, NodeId v) {
  if (net.node(u).layer >= net.node(v).layer) throw InputError("is_isolating requires layer(u) < layer(v)");
  const auto member = subnetwork_members(net, u, v);
  auto in_sub = [&](NodeId w) { return std::binary_search(member.begin(), member.end(), w); };
  for (NodeId w : member) {
    if (w != u) {
      for (ArcId a : net.in_arcs(w)) {
        if (!in_sub(net.arc(a).tail)) return false;
      }
    }
    if (w != v) {
      for (ArcId a : net.out_arcs(w)) {
        if (!in_sub(net.arc(a).head)) return false;
      }
    }
  }
  return true;
}

ReductionStats local_arc_removal(Network& net, const ArcRemovalOptions& options) {
  if (options.delta < 1) throw InputError("local_arc_removal needs delta >= 1");
  ReductionStats stats;
  if (options.delta >= net.num_layers()) return stats;

  struct SubPath {
    std::vector<ArcId> arcs;
    ObjectiveVector weight;
    bool alive = true;
  };

  for (std::size_t j = 0; j + options.delta < net.num_layers(); ++j) {
    options.limits.check_deadline();
    const std::vector<NodeId> members = net.layer(j);
    for (NodeId u : members) {
      if (!net.node(u).alive) continue;
      // Everything reachable from u within delta layers belongs to N[u, v]
      // when the pair is isolating, so v must be the only node reached.
      std::vector<NodeId> reach{u};
      for (std::size_t d = 0; d < options.delta && !reach.empty(); ++d) {
        std::vector<NodeId> next;
        for (NodeId w : reach) {
          for (ArcId a : net.out_arcs(w)) next.push_back(net.arc(a).head);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        reach = std::move(next);
      }
      if (reach.size() != 1) continue;
      const NodeId v = reach.front();
      if (!is_isolating(net, u, v)) continue;

      std::vector<SubPath> paths;
      bool too_many = false;
      for_each_path(net, u, v, [&](std::span<const ArcId> p) {
        if (paths.size() >= options.max_paths) {
          too_many = true;
          return false;
        }
        paths.push_back(SubPath{{p.begin(), p.end()}, path_weight(net, p), true});
        return true;
      });
      if (too_many || paths.size() < 2) continue;

      auto frontier_without = [&](ArcId skip) {
        std::vector<ObjectiveVector> ws;
        for (const auto& p : paths) {
          if (!p.alive) continue;
          if (skip != kNoArc && std::find(p.arcs.begin(), p.arcs.end(), skip) != p.arcs.end()) continue;
          ws.push_back(p.weight);
        }
        return nd_filter(std::move(ws));
      };
      const auto reference = frontier_without(kNoArc);

      std::vector<ArcId> arcs;
      for (const auto& p : paths) arcs.insert(arcs.end(), p.arcs.begin(), p.arcs.end());
      std::sort(arcs.begin(), arcs.end());
      arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

      for (ArcId a : arcs) {
        if (frontier_without(a) != reference) continue;
        for (auto& p : paths) {
          if (std::find(p.arcs.begin(), p.arcs.end(), a) != p.arcs.end()) p.alive = false;
        }
        net.remove_arc(a);
        ++stats.arcs_removed;
      }
      const auto [nodes, stranded_arcs] = net.remove_orphans();
      stats.nodes_removed += nodes;
      stats.arcs_removed += stranded_arcs;
    }
  }
  return stats;
}

ReductionStats apply_pipeline(Network& net, const PipelineOptions& options) {
  ReductionStats stats;
  if (options.reduce) stats += reduce_sweep(net, options.limits);
  if (options.prune) {
    options.limits.check_deadline();
    stats.arcs_removed += prune_parallel_arcs(net);
  }
  if (options.arc_removal) {
    ArcRemovalOptions ar;
    ar.delta = options.delta;
    ar.limits = options.limits;
    stats += local_arc_removal(net, ar);
  }
  return stats;
}

}  // namespace modo
