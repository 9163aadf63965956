#include "modo/search.hpp"

#include <algorithm>
#include <numeric>

namespace modo {

namespace {

const ObjectiveVector& label_value(const Label& l) { return l.value; }

void nd_labels(std::vector<Label>& labels) { detail::nd_filter_descending(labels, label_value); }

// Removes from `labels` every label weakly dominated by a point of `archive`.
std::size_t drop_dominated(std::vector<Label>& labels, const std::vector<ObjectiveVector>& archive) {
  const std::size_t before = labels.size();
  std::erase_if(labels, [&](const Label& l) {
    return std::any_of(archive.begin(), archive.end(),
                       [&](const ObjectiveVector& y) { return weakly_dominates(y, l.value); });
  });
  return before - labels.size();
}

class Propagator {
 public:
  Propagator(const Network& net, const SearchOptions& options) : net_(net), options_(options) {
    td_.direction = Direction::kTopDown;
    bu_.direction = Direction::kBottomUp;
    td_.by_node.resize(net.node_capacity());
    bu_.by_node.resize(net.node_capacity());
  }

  void seed_topdown() {
    td_.by_node[net_.root()] = {Label{net_.root_offset()}};
    stats_.labels_td += 1;
    live_ += 1;
  }

  void seed_bottomup() {
    bu_.by_node[net_.terminal()] = {Label{ObjectiveVector::zero(net_.objectives())}};
    stats_.labels_bu += 1;
    live_ += 1;
  }

  // Builds top-down labels of layer j+1 from those of layer j.
  void extend_topdown(std::size_t j) {
    options_.limits.check_deadline();
    for (NodeId v : net_.layer(j + 1)) {
      std::vector<Label> fresh;
      for (ArcId a : net_.in_arcs(v)) {
        const Arc& arc = net_.arc(a);
        const auto& parents = td_.by_node[arc.tail];
        for (std::uint32_t i = 0; i < parents.size(); ++i) {
          fresh.push_back(Label{parents[i].value + arc.weight, a, i});
        }
      }
      admit(fresh, stats_.labels_td);
      td_.by_node[v] = std::move(fresh);
    }
    if (options_.topdown_filter != nullptr) {
      const std::size_t removed = filter_labels(net_.layer(j + 1), td_, *options_.topdown_filter);
      stats_.labels_filtered += removed;
      live_ -= removed;
    }
    if (!options_.keep_all_layers) release(td_, j);
    check_memory();
  }

  // Builds bottom-up labels of layer j-1 from those of layer j.
  void extend_bottomup(std::size_t j) {
    options_.limits.check_deadline();
    for (NodeId u : net_.layer(j - 1)) {
      std::vector<Label> fresh;
      for (ArcId a : net_.out_arcs(u)) {
        const Arc& arc = net_.arc(a);
        const auto& children = bu_.by_node[arc.head];
        for (std::uint32_t i = 0; i < children.size(); ++i) {
          fresh.push_back(Label{children[i].value + arc.weight, a, i});
        }
      }
      admit(fresh, stats_.labels_bu);
      bu_.by_node[u] = std::move(fresh);
    }
    if (options_.bottomup_filter != nullptr) {
      const std::size_t removed = filter_labels(net_.layer(j - 1), bu_, *options_.bottomup_filter);
      stats_.labels_filtered += removed;
      live_ -= removed;
    }
    if (!options_.keep_all_layers) release(bu_, j);
    check_memory();
  }

  std::vector<ObjectiveVector> couple_on(std::size_t layer) {
    std::vector<ObjectiveVector> all;
    for (NodeId u : net_.layer(layer)) {
      std::vector<ObjectiveVector> down, up;
      for (const auto& l : td_.by_node[u]) down.push_back(l.value);
      for (const auto& l : bu_.by_node[u]) up.push_back(l.value);
      stats_.labels_coupled += static_cast<std::uint64_t>(down.size()) * up.size();
      auto coupled = couple_sets(down, up);
      all.insert(all.end(), coupled.begin(), coupled.end());
    }
    return nd_filter(std::move(all));
  }

  std::vector<ObjectiveVector> values_at(const LabelSets& sets, NodeId u, bool add_offset) const {
    std::vector<ObjectiveVector> out;
    for (const auto& l : sets.by_node[u]) {
      out.push_back(add_offset ? l.value + net_.root_offset() : l.value);
    }
    return nd_filter(std::move(out));
  }

  const LabelSets& topdown() const { return td_; }
  const LabelSets& bottomup() const { return bu_; }
  LabelSets take_topdown() { return std::move(td_); }
  SearchStats& stats() { return stats_; }

 private:
  void admit(std::vector<Label>& fresh, std::uint64_t& created) {
    created += fresh.size();
    if (live_ + fresh.size() > options_.label_budget) {
      throw ResourceError(ResourceKind::kLabels, "label budget exceeded");
    }
    nd_labels(fresh);
    live_ += fresh.size();
  }

  void release(LabelSets& sets, std::size_t layer) {
    for (NodeId u : net_.layer(layer)) {
      live_ -= sets.by_node[u].size();
      std::vector<Label>().swap(sets.by_node[u]);
    }
  }

  void check_memory() const {
    options_.limits.check_memory(live_ * sizeof(Label) + net_.num_nodes() * 160 + net_.num_arcs() * 112);
  }

  const Network& net_;
  const SearchOptions& options_;
  LabelSets td_;
  LabelSets bu_;
  SearchStats stats_;
  std::size_t live_ = 0;
};

}  // namespace

std::size_t LabelSets::total(const Network& net, std::size_t layer) const {
  std::size_t sum = 0;
  for (NodeId u : net.layer(layer)) sum += by_node.at(u).size();
  return sum;
}

std::vector<ObjectiveVector> couple_sets(const std::vector<ObjectiveVector>& z1,
                                         const std::vector<ObjectiveVector>& z2) {
  std::vector<ObjectiveVector> sums;
  sums.reserve(z1.size() * z2.size());
  for (const auto& a : z1) {
    for (const auto& b : z2) sums.push_back(a + b);
  }
  return nd_filter(std::move(sums));
}

std::size_t filter_labels(std::span<const NodeId> nodes, LabelSets& labels, const NodeDominance& dominance) {
  std::size_t removed = 0;
  if (nodes.size() < 2) return 0;
  if (dominance.rank) {
    std::vector<std::pair<std::int64_t, NodeId>> order;
    order.reserve(nodes.size());
    for (NodeId u : nodes) order.emplace_back(dominance.rank(u), u);
    std::sort(order.begin(), order.end());
    // Nondominated union of the labels of all strictly lower-ranked nodes.
    std::vector<ObjectiveVector> archive;
    std::size_t i = 0;
    while (i < order.size()) {
      std::size_t end = i;
      while (end < order.size() && order[end].first == order[i].first) ++end;
      for (std::size_t g = i; g < end; ++g) removed += drop_dominated(labels.by_node[order[g].second], archive);
      for (std::size_t g = i; g < end; ++g) {
        for (const auto& l : labels.by_node[order[g].second]) archive.push_back(l.value);
      }
      archive = nd_filter(std::move(archive));
      i = end;
    }
    return removed;
  }
  if (!dominance.dominates) return 0;
  // Compare against the unfiltered sets so the outcome does not depend on
  // the order in which pairs are visited.
  std::vector<std::vector<ObjectiveVector>> original;
  original.reserve(nodes.size());
  for (NodeId v : nodes) {
    std::vector<ObjectiveVector> vals;
    for (const auto& l : labels.by_node[v]) vals.push_back(l.value);
    original.push_back(std::move(vals));
  }
  for (std::size_t iu = 0; iu < nodes.size(); ++iu) {
    for (std::size_t iv = 0; iv < nodes.size(); ++iv) {
      if (iu == iv || !dominance.dominates(nodes[iu], nodes[iv])) continue;
      removed += drop_dominated(labels.by_node[nodes[iu]], original[iv]);
    }
  }
  return removed;
}

SearchResult propagate_topdown(const Network& net, const SearchOptions& options) {
  Propagator p(net, options);
  p.seed_topdown();
  const std::size_t n = net.stages();
  for (std::size_t j = 0; j < n; ++j) p.extend_topdown(j);
  SearchResult result;
  result.frontier = p.values_at(p.topdown(), net.terminal(), false);
  result.stats = p.stats();
  result.stats.meet_layer = n;
  return result;
}

SearchResult propagate_bottomup(const Network& net, const SearchOptions& options) {
  Propagator p(net, options);
  p.seed_bottomup();
  for (std::size_t j = net.stages(); j > 0; --j) p.extend_bottomup(j);
  SearchResult result;
  result.frontier = p.values_at(p.bottomup(), net.root(), true);
  result.stats = p.stats();
  result.stats.meet_layer = 0;
  return result;
}

SearchResult solve_bidirectional(const Network& net, const SearchOptions& options) {
  Propagator p(net, options);
  const std::size_t n = net.stages();
  p.seed_topdown();
  p.seed_bottomup();
  std::size_t down = 0;
  std::size_t up = n;
  if (options.meet_layer) {
    const std::size_t meet = *options.meet_layer;
    if (meet > n) throw InputError("meeting layer out of range");
    while (down < meet) p.extend_topdown(down++);
    while (up > meet) p.extend_bottomup(up--);
  } else {
    if (down < up) p.extend_topdown(down++);
    if (down < up) p.extend_bottomup(up--);
    while (down < up) {
      if (p.topdown().total(net, down) <= p.bottomup().total(net, up)) {
        p.extend_topdown(down++);
      } else {
        p.extend_bottomup(up--);
      }
    }
  }
  SearchResult result;
  result.frontier = p.couple_on(down);
  result.stats = p.stats();
  result.stats.meet_layer = down;
  return result;
}

TopDownTrace::TopDownTrace(const Network& net, const SearchOptions& options) : net_(&net) {
  SearchOptions keep = options;
  keep.keep_all_layers = true;
  Propagator p(net, keep);
  p.seed_topdown();
  for (std::size_t j = 0; j < net.stages(); ++j) p.extend_topdown(j);
  frontier_ = p.values_at(p.topdown(), net.terminal(), false);
  labels_ = p.take_topdown();
}

std::vector<ArcId> TopDownTrace::witness_path(const ObjectiveVector& target) const {
  const auto& finals = labels_.at(net_->terminal());
  auto it = std::find_if(finals.begin(), finals.end(), [&](const Label& l) { return l.value == target; });
  if (it == finals.end()) throw InputError("target " + to_string(target) + " is not a frontier point");
  std::vector<ArcId> path;
  const Label* at = &*it;
  while (at->via != kNoArc) {
    path.push_back(at->via);
    at = &labels_.at(net_->arc(at->via).tail)[at->parent];
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::int64_t> TopDownTrace::witness(const ObjectiveVector& target) const {
  std::vector<std::int64_t> decisions;
  for (ArcId a : witness_path(target)) {
    const auto& d = net_->arc(a).decision;
    if (!d) throw InputError("witness path crosses an arc without a decision");
    decisions.push_back(*d);
  }
  return decisions;
}

std::vector<std::int64_t> recover_solution(const Network& net, const ObjectiveVector& target) {
  return TopDownTrace(net).witness(target);
}

}  // namespace modo
