#include <doctest.h>

#include <random>

#include "modo/oracle.hpp"
#include "modo/problems.hpp"
#include "modo/recursion.hpp"
#include "modo/search.hpp"
#include "modo/vpo.hpp"
#include "support.hpp"

using namespace modo;
using test::points;

namespace {

Network figure2() {
  Network net = compile(SetPackingModel(test::example1())).network;
  reduce_sweep(net);
  prune_parallel_arcs(net);
  return net;
}

std::vector<ObjectiveVector> values(const std::vector<Label>& labels) {
  std::vector<ObjectiveVector> out;
  for (const auto& l : labels) out.push_back(l.value);
  std::sort(out.begin(), out.end());
  return out;
}

// Raw (pre-ND) top-down extension into v from fully kept label sets.
std::vector<ObjectiveVector> raw_topdown(const Network& net, const LabelSets& td, NodeId v) {
  std::vector<ObjectiveVector> out;
  for (ArcId a : net.in_arcs(v)) {
    for (const auto& l : td.at(net.arc(a).tail)) out.push_back(l.value + net.arc(a).weight);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Runs one direction over every layer and returns the label sets of all nodes.
LabelSets all_labels(const Network& net, Direction dir) {
  // Forcing the meeting layer to an endpoint keeps one side's sets intact.
  LabelSets sets;
  sets.direction = dir;
  sets.by_node.resize(net.node_capacity());
  if (dir == Direction::kTopDown) {
    sets.by_node[net.root()] = {Label{net.root_offset()}};
    for (std::size_t j = 0; j + 1 < net.num_layers(); ++j) {
      for (NodeId v : net.layer(j + 1)) {
        std::vector<ObjectiveVector> raw = raw_topdown(net, sets, v);
        for (const auto& y : nd_filter(raw)) sets.by_node[v].push_back(Label{y});
      }
    }
  } else {
    sets.by_node[net.terminal()] = {Label{ObjectiveVector::zero(net.objectives())}};
    for (std::size_t j = net.num_layers() - 1; j > 0; --j) {
      for (NodeId u : net.layer(j - 1)) {
        std::vector<ObjectiveVector> raw;
        for (ArcId a : net.out_arcs(u)) {
          for (const auto& l : sets.at(net.arc(a).head)) raw.push_back(l.value + net.arc(a).weight);
        }
        for (const auto& y : nd_filter(raw)) sets.by_node[u].push_back(Label{y});
      }
    }
  }
  return sets;
}

bool some_node_has(const Network& net, const LabelSets& sets, std::size_t layer,
                   const std::vector<ObjectiveVector>& expected) {
  for (NodeId u : net.layer(layer)) {
    if (values(sets.at(u)) == expected) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("Figure 2 top-down labels at u^7_1") {
    const Network net = figure2();
    const TopDownTrace trace(net);
    CHECK(trace.frontier() == test::example1_frontier());
    const LabelSets td = all_labels(net, Direction::kTopDown);
    // The merged layer-7 node keeps three labels; three more were dominated.
    bool seen = false;
    for (NodeId u : net.layer(6)) {
      if (values(td.at(u)) != points({{8, 13, 17}, {6, 7, 19}, {7, 14, 13}})) continue;
      const auto raw = raw_topdown(net, td, u);
      for (auto y : {ObjectiveVector{6, 10, 11}, ObjectiveVector{4, 4, 13}, ObjectiveVector{5, 11, 7}}) {
        CHECK(std::find(raw.begin(), raw.end(), y) != raw.end());
      }
      seen = true;
    }
    CHECK(seen);
  }

  TEST_CASE("Figure 2 bottom-up labels") {
    const Network net = figure2();
    const LabelSets bu = all_labels(net, Direction::kBottomUp);
    CHECK(some_node_has(net, bu, 1, points({{3, 6, 11}, {6, 13, 6}})));
    CHECK(values(bu.at(net.root())) == test::example1_frontier());
    // (7,15,8) reaches the root but is dominated there.
    std::vector<ObjectiveVector> raw;
    for (ArcId a : net.out_arcs(net.root())) {
      for (const auto& l : bu.at(net.arc(a).head)) raw.push_back(l.value + net.arc(a).weight);
    }
    CHECK(std::find(raw.begin(), raw.end(), ObjectiveVector{7, 15, 8}) != raw.end());
  }

  TEST_CASE("Example 5 coupling at u^5_1") {
    const Network net = figure2();
    const LabelSets td = all_labels(net, Direction::kTopDown);
    const LabelSets bu = all_labels(net, Direction::kBottomUp);
    const auto expected = points({{8, 13, 17}, {6, 7, 19}, {7, 14, 13}, {7, 15, 8}, {6, 16, 4}});
    bool seen = false;
    for (NodeId u : net.layer(4)) {
      seen = seen || couple_sets(values(td.at(u)), values(bu.at(u))) == expected;
    }
    CHECK(seen);
  }

  TEST_CASE("Example 5 label counts") {
    const Network net = figure2();
    const auto td = propagate_topdown(net);
    const auto bu = propagate_bottomup(net);
    CHECK(td.stats.labels_td == 36);
    CHECK(bu.stats.labels_bu == 36);
    SearchOptions options;
    options.meet_layer = 4;  // layer 5 in 1-based numbering
    const auto coup = solve_bidirectional(net, options);
    CHECK(coup.stats.labels_td == 14);
    CHECK(coup.stats.labels_bu == 11);
    CHECK(coup.stats.labels_total() == 25);
    for (const auto* r : {&td, &bu, &coup}) CHECK(r->frontier == test::example1_frontier());
    // The greedy rule meets one layer lower.
    CHECK(solve_bidirectional(net).stats.meet_layer == 5);
  }

  TEST_CASE("couple_sets") {
    CHECK(couple_sets(points({{0, 0}}), points({{1, 2}, {0, 1}, {2, 1}})) == points({{1, 2}, {2, 1}}));
    std::mt19937_64 rng(9);
    std::vector<ObjectiveVector> a, b;
    for (int i = 0; i < 50; ++i) {
      a.push_back(ObjectiveVector{static_cast<std::int64_t>(rng() % 100), static_cast<std::int64_t>(rng() % 100),
                                  static_cast<std::int64_t>(rng() % 100)});
      b.push_back(ObjectiveVector{static_cast<std::int64_t>(rng() % 100), static_cast<std::int64_t>(rng() % 100),
                                  static_cast<std::int64_t>(rng() % 100)});
    }
    std::vector<ObjectiveVector> sums;
    for (const auto& x : a) {
      for (const auto& y : b) sums.push_back(x + y);
    }
    CHECK(sums.size() == 2500);
    CHECK(couple_sets(a, b) == nd_filter(sums));
  }

  TEST_CASE("filter_labels with the knapsack comparator") {
    // Node u holds state 5, node v state 3: v dominates u.
    Network net(2, 3);
    const NodeId r = net.add_node(0);
    const NodeId u = net.add_node(1);
    const NodeId v = net.add_node(1);
    const NodeId t = net.add_node(2);
    net.add_arc(r, u, ObjectiveVector{4, 4});
    net.add_arc(r, v, ObjectiveVector{5, 6});
    net.add_arc(u, t, ObjectiveVector{0, 0});
    net.add_arc(v, t, ObjectiveVector{0, 0});
    std::vector<std::int64_t> state(net.node_capacity(), 0);
    state[u] = 5;
    state[v] = 3;
    NodeDominance by_pairs;
    by_pairs.dominates = [&](NodeId a, NodeId b) { return state[b] < state[a]; };
    NodeDominance by_rank = by_pairs;
    by_rank.rank = [&](NodeId a) { return state[a]; };

    for (const auto* dom : {&by_pairs, &by_rank}) {
      LabelSets sets;
      sets.by_node.resize(net.node_capacity());
      sets.by_node[u] = {Label{ObjectiveVector{4, 4}}};
      sets.by_node[v] = {Label{ObjectiveVector{5, 6}}};
      CHECK(filter_labels(net.layer(1), sets, *dom) == 1);
      CHECK(sets.at(u).empty());
      CHECK(sets.at(v).size() == 1);
    }
    LabelSets sets;
    sets.by_node.resize(net.node_capacity());
    sets.by_node[u] = {Label{ObjectiveVector{4, 4}}};
    CHECK(filter_labels(net.layer(1), sets, NodeDominance{}) == 0);
  }

  TEST_CASE("single-path network and witnesses") {
    Network net(2, 4);
    NodeId prev = net.add_node(0);
    for (std::size_t j = 1; j < 4; ++j) {
      const NodeId u = net.add_node(j);
      net.add_arc(prev, u, ObjectiveVector{static_cast<std::int64_t>(j), 1}, static_cast<std::int64_t>(j % 2));
      prev = u;
    }
    CHECK(propagate_topdown(net).frontier == points({{6, 3}}));
    CHECK(recover_solution(net, ObjectiveVector{6, 3}) == std::vector<std::int64_t>{1, 0, 1});
    CHECK_THROWS_AS(recover_solution(net, ObjectiveVector{1, 1}), InputError);
  }

  TEST_CASE("Figure 2 witness for (10,21,8)") {
    const std::vector<std::int64_t> x4{1, 0, 0, 1, 0, 0, 1};
    CHECK(recover_solution(figure2(), ObjectiveVector{10, 21, 8}) == x4);
    CHECK(recover_solution(compile(SetPackingModel(test::example1())).network, ObjectiveVector{10, 21, 8}) == x4);
  }

  TEST_CASE("label budget and deadline") {
    const Network net = compile_instance(generate(ProblemClass::kKnapsack, 14, 3, 2)).network;
    SearchOptions tight;
    tight.label_budget = 5;
    CHECK_THROWS_AS(propagate_topdown(net, tight), ResourceError);
    SearchOptions late;
    late.limits.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    try {
      solve_bidirectional(net, late);
      FAIL("expected a timeout");
    } catch (const ResourceError& e) {
      CHECK(e.kind() == ResourceKind::kTime);
    }
  }

  TEST_CASE("algorithms agree and label sets stay antichains") {
    for (auto cls : test::all_classes()) {
      for (const auto& fc : test::fuzz_corpus(cls, 6, 700)) {
        Network net = compile_instance(fc.instance).network;
        apply_pipeline(net);
        const auto td = propagate_topdown(net).frontier;
        CHECK(propagate_bottomup(net).frontier == td);
        CHECK(solve_bidirectional(net).frontier == td);
        SearchOptions keep;
        keep.keep_all_layers = true;
        const TopDownTrace trace(net, keep);
        CHECK(trace.frontier() == td);
      }
    }
  }
}
