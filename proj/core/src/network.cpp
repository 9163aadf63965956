#include "modo/network.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace modo {

Network::Network(std::size_t objectives, std::size_t num_layers)
    : k_(objectives), layers_(num_layers), stale_(num_layers, 0), root_offset_(objectives) {
  if (num_layers < 2) throw InputError("a network needs at least two layers");
}

NodeId Network::add_node(std::size_t layer, std::string state_key) {
  if (layer >= layers_.size()) throw InputError("node layer out of range");
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(Node{layer, std::move(state_key), {}, {}, true});
  layers_[layer].push_back(id);
  ++live_nodes_;
  return id;
}

ArcId Network::add_arc(NodeId tail, NodeId head, ObjectiveVector weight,
                       std::optional<std::int64_t> decision) {
  if (tail >= nodes_.size() || head >= nodes_.size() || !nodes_[tail].alive || !nodes_[head].alive) {
    throw InputError("arc endpoint is not a live node");
  }
  if (weight.size() != k_) throw DimensionError("arc weight has wrong dimension");
  const auto id = static_cast<ArcId>(arcs_.size());
  arcs_.push_back(Arc{tail, head, weight, decision, true});
  nodes_[tail].out.push_back(id);
  nodes_[head].in.push_back(id);
  ++live_arcs_;
  return id;
}

const Node& Network::compact(NodeId u) const {
  Node& node = nodes_.at(u);
  if (node.in_stale != 0) {
    std::erase_if(node.in, [&](ArcId a) { return !arcs_[a].alive || arcs_[a].head != u; });
    node.in_stale = 0;
  }
  if (node.out_stale != 0) {
    std::erase_if(node.out, [&](ArcId a) { return !arcs_[a].alive || arcs_[a].tail != u; });
    node.out_stale = 0;
  }
  return node;
}

void Network::remove_arc(ArcId a) {
  Arc& arc = arcs_.at(a);
  if (!arc.alive) return;
  arc.alive = false;
  ++nodes_[arc.tail].out_stale;
  ++nodes_[arc.head].in_stale;
  --live_arcs_;
}

void Network::remove_node(NodeId u) {
  Node& node = nodes_.at(u);
  if (!node.alive) return;
  compact(u);
  for (ArcId a : node.out) remove_arc(a);
  for (ArcId a : node.in) remove_arc(a);
  node.alive = false;
  std::vector<ArcId>().swap(node.in);
  std::vector<ArcId>().swap(node.out);
  node.in_stale = node.out_stale = 0;
  stale_[node.layer] = 1;
  --live_nodes_;
}

void Network::redirect_head(ArcId a, NodeId new_head) {
  Arc& arc = arcs_.at(a);
  if (!arc.alive) throw InputError("cannot redirect a removed arc");
  if (nodes_.at(new_head).layer != nodes_[arc.head].layer || !nodes_[new_head].alive) {
    throw InputError("redirect target must be a live node in the same layer");
  }
  ++nodes_[arc.head].in_stale;
  arc.head = new_head;
  nodes_[new_head].in.push_back(a);
}

void Network::set_weight(ArcId a, const ObjectiveVector& w) {
  if (w.size() != k_) throw DimensionError("arc weight has wrong dimension");
  arcs_.at(a).weight = w;
}

std::pair<std::size_t, std::size_t> Network::remove_orphans() {
  const NodeId r = layer(0).empty() ? kNoNode : layer(0).front();
  const NodeId t = layer(num_layers() - 1).empty() ? kNoNode : layer(num_layers() - 1).front();
  const std::size_t arcs_before = live_arcs_;
  std::size_t removed = 0;
  std::vector<NodeId> stack;
  auto orphaned = [&](NodeId u) {
    const Node& n = nodes_[u];
    return n.alive && ((u != r && n.in.size() == n.in_stale) || (u != t && n.out.size() == n.out_stale));
  };
  for (NodeId u = 0; u < nodes_.size(); ++u) {
    if (orphaned(u)) stack.push_back(u);
  }
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    if (!orphaned(u)) continue;
    std::vector<NodeId> neighbours;
    const Node& n = compact(u);
    for (ArcId a : n.in) neighbours.push_back(arcs_[a].tail);
    for (ArcId a : n.out) neighbours.push_back(arcs_[a].head);
    remove_node(u);
    ++removed;
    for (NodeId w : neighbours) {
      if (orphaned(w)) stack.push_back(w);
    }
  }
  return {removed, arcs_before - live_arcs_};
}

const std::vector<NodeId>& Network::layer(std::size_t j) const {
  auto& members = layers_.at(j);
  if (stale_[j]) {
    std::erase_if(members, [&](NodeId u) { return !nodes_[u].alive; });
    stale_[j] = 0;
  }
  return members;
}

std::vector<std::size_t> Network::layer_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(layers_.size());
  for (std::size_t j = 0; j < layers_.size(); ++j) sizes.push_back(layer(j).size());
  return sizes;
}

NodeId Network::root() const {
  const auto& first = layer(0);
  if (first.size() != 1) throw InputError("network has no unique root");
  return first.front();
}

NodeId Network::terminal() const {
  const auto& last = layer(num_layers() - 1);
  if (last.size() != 1) throw InputError("network has no unique terminal");
  return last.front();
}

void Network::set_root_offset(const ObjectiveVector& offset) {
  if (offset.size() != k_) throw DimensionError("root offset has wrong dimension");
  root_offset_ = offset;
}

std::vector<std::string> validate(const Network& net) {
  std::vector<std::string> issues;
  const std::size_t last = net.num_layers() - 1;
  if (net.layer(0).size() != 1) issues.push_back("first layer must hold exactly one node");
  if (net.layer(last).size() != 1) issues.push_back("last layer must hold exactly one node");
  const NodeId r = net.layer(0).size() == 1 ? net.layer(0).front() : kNoNode;
  const NodeId t = net.layer(last).size() == 1 ? net.layer(last).front() : kNoNode;
  for (std::size_t j = 0; j <= last; ++j) {
    if (net.layer(j).empty()) issues.push_back("layer " + std::to_string(j) + " is empty");
    std::vector<std::string> keys;
    for (NodeId u : net.layer(j)) {
      const Node& node = net.node(u);
      if (!node.alive) issues.push_back("dead node " + std::to_string(u) + " listed in layer");
      if (node.layer != j) issues.push_back("node " + std::to_string(u) + " listed in wrong layer");
      if (u != r && node.in.empty()) issues.push_back("node " + std::to_string(u) + " has no incoming arc");
      if (u != t && node.out.empty()) issues.push_back("node " + std::to_string(u) + " has no outgoing arc");
      if (!node.state_key.empty()) keys.push_back(node.state_key);
      for (ArcId a : node.out) {
        const Arc& arc = net.arc(a);
        if (!arc.alive || arc.tail != u) {
          issues.push_back("inconsistent outgoing arc " + std::to_string(a));
          continue;
        }
        if (!net.node(arc.head).alive) issues.push_back("arc " + std::to_string(a) + " enters a dead node");
        if (net.node(arc.head).layer != j + 1) {
          issues.push_back("arc " + std::to_string(a) + " does not connect consecutive layers");
        }
        if (arc.weight.size() != net.objectives()) {
          issues.push_back("arc " + std::to_string(a) + " has wrong weight dimension");
        }
      }
      for (ArcId a : node.in) {
        const Arc& arc = net.arc(a);
        if (!arc.alive || arc.head != u) issues.push_back("inconsistent incoming arc " + std::to_string(a));
      }
    }
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
      issues.push_back("layer " + std::to_string(j) + " repeats a state key");
    }
  }
  return issues;
}

ObjectiveVector path_weight(const Network& net, std::span<const ArcId> path) {
  ObjectiveVector total(net.objectives());
  NodeId at = kNoNode;
  for (ArcId a : path) {
    if (a >= net.arc_capacity() || !net.arc(a).alive) throw InputError("path uses a missing arc");
    const Arc& arc = net.arc(a);
    if (at != kNoNode && arc.tail != at) throw InputError("path is not contiguous");
    total += arc.weight;
    at = arc.head;
  }
  return total;
}

std::uint64_t count_paths(const Network& net) {
  std::vector<std::uint64_t> count(net.node_capacity(), 0);
  count[net.root()] = 1;
  for (std::size_t j = 0; j + 1 < net.num_layers(); ++j) {
    for (NodeId u : net.layer(j)) {
      for (ArcId a : net.out_arcs(u)) {
        auto& c = count[net.arc(a).head];
        if (__builtin_add_overflow(c, count[u], &c)) c = UINT64_MAX;
      }
    }
  }
  return count[net.terminal()];
}

void for_each_path(const Network& net, NodeId from, NodeId to,
                   const std::function<bool(std::span<const ArcId>)>& visit) {
  const std::size_t target_layer = net.node(to).layer;
  std::vector<ArcId> path;
  // Depth-first with an explicit cursor per depth.
  std::vector<std::size_t> cursor{0};
  std::vector<NodeId> at{from};
  if (from == to) {
    visit(path);
    return;
  }
  while (!at.empty()) {
    const NodeId u = at.back();
    std::size_t& c = cursor.back();
    const auto& outs = net.out_arcs(u);
    if (c >= outs.size() || net.node(u).layer >= target_layer) {
      at.pop_back();
      cursor.pop_back();
      if (!path.empty()) path.pop_back();
      continue;
    }
    const ArcId a = outs[c++];
    const NodeId h = net.arc(a).head;
    path.push_back(a);
    if (h == to) {
      if (!visit(path)) return;
      path.pop_back();
      continue;
    }
    at.push_back(h);
    cursor.push_back(0);
  }
}

std::vector<ObjectiveVector> all_path_weights(const Network& net, std::size_t limit) {
  std::vector<ObjectiveVector> weights;
  for_each_path(net, net.root(), net.terminal(), [&](std::span<const ArcId> p) {
    if (weights.size() >= limit) {
      throw ResourceError(ResourceKind::kEnumeration, "too many paths to enumerate");
    }
    weights.push_back(path_weight(net, p));
    return true;
  });
  return weights;
}

std::string canonical_dump(const Network& net) {
  std::vector<std::size_t> index(net.node_capacity(), 0);
  std::vector<std::string> lines;
  auto hex = [](const std::string& s) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    for (unsigned char ch : s) {
      out.push_back(kDigits[ch >> 4]);
      out.push_back(kDigits[ch & 15]);
    }
    return out.empty() ? std::string("-") : out;
  };
  for (std::size_t j = 0; j < net.num_layers(); ++j) {
    const auto& members = net.layer(j);
    for (std::size_t i = 0; i < members.size(); ++i) {
      index[members[i]] = i;
      lines.push_back("N " + std::to_string(j) + " " + std::to_string(i) + " " +
                      hex(net.node(members[i]).state_key));
    }
  }
  for (std::size_t j = 0; j < net.num_layers(); ++j) {
    for (NodeId u : net.layer(j)) {
      for (ArcId a : net.out_arcs(u)) {
        const Arc& arc = net.arc(a);
        std::ostringstream line;
        line << "A " << j << ':' << index[arc.tail] << ' ' << (j + 1) << ':' << index[arc.head] << ' ';
        if (arc.decision) {
          line << *arc.decision;
        } else {
          line << '-';
        }
        for (auto w : arc.weight) line << ' ' << w;
        lines.push_back(line.str());
      }
    }
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

}  // namespace modo
