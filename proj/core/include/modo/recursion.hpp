#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "modo/limits.hpp"
#include "modo/network.hpp"

namespace modo {

// A multiobjective recursive formulation over stages 0..stages()-1.
//
//   feasible_values(j, s) -> values v allowed at stage j in state s
//   transition(j, s, v)   -> successor state
//   reward(j, s, v)       -> K-dimensional reward (canonical maximize sense)
//   state_key(s)          -> exact canonical serialization of s
//
// Models may additionally expose `root_offset()` (added to every path weight).
template <class M>
concept DpModel = requires(const M& m, std::size_t stage, const typename M::State& s, std::int64_t v) {
  typename M::State;
  { m.stages() } -> std::convertible_to<std::size_t>;
  { m.objectives() } -> std::convertible_to<std::size_t>;
  { m.initial_state() } -> std::convertible_to<typename M::State>;
  { m.feasible_values(stage, s) } -> std::convertible_to<std::vector<std::int64_t>>;
  { m.transition(stage, s, v) } -> std::convertible_to<typename M::State>;
  { m.reward(stage, s, v) } -> std::convertible_to<ObjectiveVector>;
  { m.state_key(s) } -> std::convertible_to<std::string>;
};

template <class M>
concept HasRootOffset = requires(const M& m) {
  { m.root_offset() } -> std::convertible_to<ObjectiveVector>;
};

struct CompileOptions {
  std::size_t node_budget = 50'000'000;
  Limits limits;
};

// The compiled network together with the DP state of every node, indexed by
// NodeId (entries of removed nodes are stale).
template <class State>
struct Compiled {
  Network network;
  std::vector<State> states;
};

// Builds the state-transition graph of `model` breadth-first, one node per
// distinct state per layer. All stage-n transitions collapse into a single
// terminal node. States whose every completion is infeasible are pruned by a
// backward orphan sweep after the forward pass.
template <DpModel M>
Compiled<typename M::State> compile(const M& model, const CompileOptions& options = {}) {
  using State = typename M::State;
  const std::size_t n = model.stages();
  if (n < 1) throw InputError("model must have at least one stage");
  Compiled<State> out{Network(model.objectives(), n + 1), {}};
  Network& net = out.network;
  if constexpr (HasRootOffset<M>) net.set_root_offset(model.root_offset());

  const State initial = model.initial_state();
  out.states.push_back(initial);
  net.add_node(0, model.state_key(initial));

  std::unordered_map<std::string, NodeId> index;
  for (std::size_t j = 0; j < n; ++j) {
    options.limits.check_deadline();
    index.clear();
    const bool last = j + 1 == n;
    NodeId terminal = kNoNode;
    // Copy: net.layer(j) is stable here, but arcs added below touch nodes.
    const std::vector<NodeId> current = net.layer(j);
    for (NodeId u : current) {
      const State s = out.states[u];
      for (std::int64_t v : model.feasible_values(j, s)) {
        State next = model.transition(j, s, v);
        NodeId head;
        if (last) {
          if (terminal == kNoNode) {
            terminal = net.add_node(j + 1, model.state_key(next));
            out.states.push_back(std::move(next));
          }
          head = terminal;
        } else {
          std::string key = model.state_key(next);
          auto [it, inserted] = index.try_emplace(std::move(key), kNoNode);
          if (inserted) {
            if (net.num_nodes() >= options.node_budget) {
              throw ResourceError(ResourceKind::kNodes, "node budget exceeded while compiling");
            }
            it->second = net.add_node(j + 1, it->first);
            out.states.push_back(std::move(next));
          }
          head = it->second;
        }
        net.add_arc(u, head, model.reward(j, s, v), v);
      }
    }
    if (net.layer(j + 1).empty()) throw InputError("model has no feasible solution");
    options.limits.check_memory(net.num_nodes() * 160 + net.num_arcs() * 112);
  }
  net.remove_orphans();
  if (net.layer(0).empty() || net.layer(n).empty()) throw InputError("model has no feasible solution");
  return out;
}

}  // namespace modo
