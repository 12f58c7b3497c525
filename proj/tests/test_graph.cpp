#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "mwlp/graph.hpp"
#include "mwlp/heuristics.hpp"
#include "mwlp/optimizer.hpp"
#include "mwlp/rng.hpp"
#include "test_support.hpp"

using namespace mwlp;
using testsupport::make_e1;

TEST_CASE("validate_graph accepts the reference instance") {
  REQUIRE_FALSE(validate_graph(make_e1()).has_value());
}

TEST_CASE("validate_graph names the first violated invariant") {
  Graph g = make_e1();
  g.importance[0] = 7.0;
  REQUIRE(validate_graph(g).value() == "depot importance nonzero");

  g = make_e1();
  g.set_edge(1, 1, 2.0);
  REQUIRE(validate_graph(g).value() == "nonzero diagonal");

  g = make_e1();
  g.importance[2] = -1.0;
  REQUIRE(validate_graph(g).value().find("negative") != std::string::npos);
}

TEST_CASE("validate_partition checks coverage, depots and disjointness") {
  const Graph g = make_e1();
  REQUIRE_FALSE(validate_partition(g, {{{0, 1}, {0, 2}}}).has_value());
  REQUIRE(validate_partition(g, {{{0, 1}, {0, 1, 2}}}).value() ==
          "node 1 in two subsets");
  REQUIRE(validate_partition(g, {{{0, 1}, {2}}}).value() ==
          "subset missing depot");
  REQUIRE(validate_partition(g, {{{0, 1}, {0}}}).value() ==
          "node 2 not covered");
  // A subset equal to {depot} alone is a legal idle crew.
  REQUIRE_FALSE(validate_partition(g, {{{0, 1, 2}, {0}}}).has_value());
}

TEST_CASE("validate_assignment checks paths against the shared graph") {
  const Graph g = make_e1();
  REQUIRE_FALSE(validate_assignment(g, {{{0, 1}, {0, 2}}}).has_value());
  REQUIRE(validate_assignment(g, {{{0, 1, 2}, {0, 2}}}).value() ==
          "node 2 appears twice");
  REQUIRE(validate_assignment(g, {{{1, 2}, {0}}}).value() ==
          "path does not begin at depot");
  REQUIRE(validate_assignment(g, {{{0, 1}, {0}}}).value() ==
          "node 2 missing from assignment");
}

TEST_CASE("partition_of forgets ordering") {
  REQUIRE(canonical_key(partition_of({{{0, 1}, {0, 2}}})) ==
          canonical_key(Partition{{{0, 1}, {0, 2}}}));
  REQUIRE(canonical_key(partition_of({{{0}, {0, 2, 1}}})) ==
          canonical_key(Partition{{{0}, {0, 1, 2}}}));
  REQUIRE(canonical_key(partition_of({{{0, 2, 1}}})) ==
          canonical_key(Partition{{{0, 1, 2}}}));
}

TEST_CASE("partition_of of any valid assignment is a valid partition") {
  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = testsupport::micro_instance(100 + trial, 8);
    const Partition p = random_initial_partition(g, 3, trial);
    const Assignment a = assignment_from_partition(g, p, Heuristic::Greedy);
    REQUIRE_FALSE(validate_assignment(g, a).has_value());
    REQUIRE_FALSE(validate_partition(g, partition_of(a)).has_value());
  }
}

TEST_CASE("canonical_key examples") {
  REQUIRE(canonical_key({{{0, 1}, {0, 2}}}) == canonical_key({{{0, 2}, {0, 1}}}));
  REQUIRE(canonical_key({{{0, 1}, {0, 2}}}) !=
          canonical_key({{{0, 1, 2}, {0}}}));
  REQUIRE(canonical_key({{{0, 2, 1}, {0}}}) == canonical_key({{{0, 1, 2}, {0}}}));
}

namespace {

// Restricted-growth strings: every set partition of {1..n} into <= max_parts
// blocks, padded with idle {0} subsets to exactly max_parts subsets.
void enumerate_padded_partitions(int n, int max_parts,
                                 std::vector<Partition>& out) {
  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  auto emit = [&] {
    const int parts = *std::max_element(assign.begin(), assign.end()) + 1;
    Partition p;
    p.subsets.assign(static_cast<std::size_t>(max_parts), {0});
    for (int v = 0; v < n; ++v) p.subsets[assign[v]].push_back(v + 1);
    for (auto& s : p.subsets) std::sort(s.begin(), s.end());
    (void)parts;
    out.push_back(std::move(p));
  };
  // Recursive enumeration with the restricted-growth property.
  std::function<void(int, int)> recurse = [&](int v, int used) {
    if (v == n) {
      emit();
      return;
    }
    for (int part = 0; part <= used && part < max_parts; ++part) {
      assign[v] = part;
      recurse(v + 1, std::max(used, part + 1));
    }
  };
  recurse(0, 0);
}

}  // namespace

TEST_CASE("canonical_key is a set-semantics identity on small partitions") {
  std::vector<Partition> partitions;
  enumerate_padded_partitions(4, 3, partitions);  // n = 5 graph: depot + 4
  REQUIRE(partitions.size() == 14);               // Bell(4) minus 4-block case

  // Distinct partitions map to distinct keys.
  std::set<std::string> keys;
  for (const Partition& p : partitions) keys.insert(canonical_key(p));
  REQUIRE(keys.size() == partitions.size());

  // Keys are invariant under subset order and within-subset order.
  Rng rng(11);
  for (const Partition& p : partitions) {
    const std::string reference = canonical_key(p);
    Partition shuffled = p;
    for (int round = 0; round < 8; ++round) {
      shuffle(rng, shuffled.subsets);
      for (auto& subset : shuffled.subsets) shuffle(rng, subset);
      REQUIRE(canonical_key(shuffled) == reference);
    }
  }
}
