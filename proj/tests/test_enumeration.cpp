#include <gtest/gtest.h>

#include "circalg/circalg.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace circalg;

namespace {

Multigraph triangle() { return cycle_graph(3); }

EdgeSubset edges(std::initializer_list<std::size_t> e) { return EdgeSubset::of(e); }

GainAssignment gains_of(std::initializer_list<Rational> values) { return GainAssignment(std::vector<Rational>(values)); }

bool contains_cycle(const std::vector<EdgeSubset>& cycles, EdgeSubset s) {
  for (auto c : cycles) {
    if (c.is_subset_of(s)) return true;
  }
  return false;
}

template <typename F>
void for_random_graphs(std::uint64_t seed, int count, std::size_t max_vertices, std::size_t max_edges, F&& f) {
  Rng rng(seed);
  for (int i = 0; i < count; ++i) f(random_multigraph(rng, max_vertices, max_edges), rng);
}

}  // namespace

TEST(Classify, Examples) {
  EXPECT_EQ(classify_subgraph(triangle(), EdgeSubset::full(3)).kind, SubgraphKind::OddCirclePseudoforest);
  EXPECT_EQ(classify_subgraph(triangle(), edges({0, 1})).kind, SubgraphKind::Forest);

  const auto c4 = classify_subgraph(cycle_graph(4), EdgeSubset::full(4));
  ASSERT_EQ(c4.kind, SubgraphKind::ContainsEvenCircuit);
  EXPECT_EQ(c4.witness->type, EvenCircuitType::EvenCycle);
  EXPECT_EQ(c4.witness->edges, EdgeSubset::full(4));

  const auto eight = classify_subgraph(figure_eight_graph(), EdgeSubset::full(6));
  ASSERT_EQ(eight.kind, SubgraphKind::ContainsEvenCircuit);
  EXPECT_EQ(eight.witness->type, EvenCircuitType::FigureEight);
  EXPECT_EQ(eight.witness->edges, EdgeSubset::full(6));
  EXPECT_FALSE(eight.pseudoforest);

  const auto cuff = classify_subgraph(handcuff_graph(), EdgeSubset::full(8));
  ASSERT_EQ(cuff.kind, SubgraphKind::ContainsEvenCircuit);
  EXPECT_EQ(cuff.witness->type, EvenCircuitType::Handcuff);
  EXPECT_EQ(cuff.witness->bridge, edges({6, 7}));
}

TEST(Classify, LoopsAndParallelEdges) {
  const Multigraph two_loops(1, {{0, 0}, {0, 0}});
  EXPECT_EQ(classify_subgraph(two_loops, edges({0})).kind, SubgraphKind::OddCirclePseudoforest);
  EXPECT_EQ(classify_subgraph(two_loops, edges({0, 1})).kind, SubgraphKind::ContainsEvenCircuit);

  const Multigraph parallel(2, {{0, 1}, {1, 0}});
  const auto c = classify_subgraph(parallel, edges({0, 1}));
  EXPECT_EQ(c.kind, SubgraphKind::ContainsEvenCircuit);
  EXPECT_EQ(c.witness->type, EvenCircuitType::EvenCycle);
}

TEST(Classify, AgreesWithOracle) {
  for_random_graphs(101, 60, 5, 8, [](const Multigraph& g, Rng&) {
    for_each_subset(g.num_edges(), 8, [&](EdgeSubset s) {
      const auto c = classify_subgraph(g, s);
      ASSERT_EQ(c.kind == SubgraphKind::Forest, oracle::forest(g, s));
      ASSERT_EQ(c.pseudoforest, oracle::pseudoforest(g, s));
      const bool ocp_or_forest = c.kind == SubgraphKind::Forest || c.kind == SubgraphKind::OddCirclePseudoforest;
      ASSERT_EQ(ocp_or_forest, oracle::odd_circle_pseudoforest(g, s));
      ASSERT_NE(c.kind, SubgraphKind::Other);
      if (c.witness) {
        ASSERT_TRUE(c.witness->edges.is_subset_of(s));
      }
    });
  });
}

TEST(Forests, Counts) {
  EXPECT_EQ(enumerate_spanning_forests(triangle()).size(), 7u);
  EXPECT_EQ(enumerate_spanning_forests(Multigraph(2, {{0, 1}})).size(), 2u);
  const auto loop = enumerate_spanning_forests(Multigraph(1, {{0, 0}}));
  ASSERT_EQ(loop.size(), 1u);
  EXPECT_TRUE(loop.front().empty());
}

TEST(Forests, CapExceeded) {
  EXPECT_THROW(enumerate_spanning_forests(bouquet_graph(5), 4), SizeLimitExceeded);
  EXPECT_THROW(enumerate_cycles(bouquet_graph(5), 4), SizeLimitExceeded);
}

TEST(ExternalActivity, Examples) {
  const auto natural = natural_ordering(3);
  EXPECT_EQ(external_activity(triangle(), edges({1, 2}), natural), 1u);
  EXPECT_EQ(external_activity(triangle(), edges({0, 2}), natural), 0u);
  EXPECT_EQ(external_activity(triangle(), EdgeSubset(), natural), 0u);
  EXPECT_THROW(external_activity(triangle(), EdgeSubset::full(3), natural), InvalidArgument);
  EXPECT_THROW(external_activity(triangle(), edges({0}), EdgeOrdering{0, 0, 1}), InvalidArgument);
}

TEST(ExternalActivity, SmallestOutsideEdgeOfSpanningTreeIsActive) {
  for_random_graphs(103, 80, 5, 8, [](const Multigraph& g, Rng& rng) {
    if (g.num_edges() == 0) return;
    const auto ordering = random_ordering(rng, g.num_edges());
    // Greedy maximal forest built from the larger edges first.
    EdgeSubset f;
    for (std::size_t i = 1; i <= g.num_edges(); ++i) {
      const std::size_t e = ordering[i % g.num_edges()];
      if (is_forest(g, f.with(e))) f = f.with(e);
    }
    if (!f.contains(ordering[0])) {
      EXPECT_GE(external_activity(g, f, ordering), 1u);
    }
  });
}

TEST(ActivityProfile, Examples) {
  const auto p = forest_activity_profile(triangle(), natural_ordering(3));
  EXPECT_EQ(p.graded, (std::vector<std::uint64_t>{1, 2, 3, 1}));
  EXPECT_EQ(p.counts, (std::map<std::size_t, std::uint64_t>{{0, 6}, {1, 1}}));
  EXPECT_EQ(p.total, 7u);

  const auto empty = forest_activity_profile(Multigraph(3, {}), natural_ordering(0));
  EXPECT_EQ(empty.counts, (std::map<std::size_t, std::uint64_t>{{0, 1}}));
  EXPECT_EQ(empty.graded, (std::vector<std::uint64_t>{1}));
}

TEST(ActivityProfile, CountsSumToTotal) {
  for_random_graphs(107, 40, 4, 7, [](const Multigraph& g, Rng& rng) {
    const auto ordering = random_ordering(rng, g.num_edges());
    for (const auto& p : {forest_activity_profile(g, ordering), even_activity_profile(g, ordering)}) {
      std::uint64_t sum = 0;
      for (auto [k, n] : p.counts) sum += n;
      ASSERT_EQ(sum, p.total);
      std::uint64_t graded = 0;
      for (auto n : p.graded) graded += n;
      ASSERT_EQ(graded, p.total);
    }
  });
}

TEST(Pseudoforests, Counts) {
  EXPECT_EQ(enumerate_odd_circle_pseudoforests(triangle()).size(), 8u);
  EXPECT_EQ(enumerate_odd_circle_pseudoforests(cycle_graph(4)).size(), 15u);
  EXPECT_EQ(enumerate_pseudoforests(cycle_graph(4)).size(), 16u);

  const auto full = EdgeSubset::full(6);
  for (auto s : enumerate_pseudoforests(figure_eight_graph())) EXPECT_NE(s, full);
  for (auto s : enumerate_odd_circle_pseudoforests(figure_eight_graph())) EXPECT_NE(s, full);
  EXPECT_FALSE(is_pseudoforest(figure_eight_graph(), full));
}

TEST(Pseudoforests, MatchOracleCounts) {
  for_random_graphs(109, 60, 5, 8, [](const Multigraph& g, Rng&) {
    ASSERT_EQ(enumerate_spanning_forests(g).size(), oracle::count_subsets(g, oracle::forest));
    ASSERT_EQ(enumerate_pseudoforests(g).size(), oracle::count_subsets(g, oracle::pseudoforest));
    ASSERT_EQ(enumerate_odd_circle_pseudoforests(g).size(), oracle::count_subsets(g, oracle::odd_circle_pseudoforest));
  });
}

TEST(EvenActivity, Examples) {
  EXPECT_EQ(even_activity(cycle_graph(4), edges({1, 2, 3}), natural_ordering(4)), 1u);
  EXPECT_EQ(even_activity(cycle_graph(4), edges({0, 1, 2}), natural_ordering(4)), 0u);
  for (auto f : enumerate_odd_circle_pseudoforests(triangle())) {
    EXPECT_EQ(even_activity(triangle(), f, natural_ordering(3)), 0u);
  }
  EXPECT_THROW(even_activity(cycle_graph(4), EdgeSubset::full(4), natural_ordering(4)), InvalidArgument);
}

TEST(EvenActivity, MatchesMinimalCircuitDefinition) {
  // Oracle: e is active iff some minimal non-OCP set J has e = min(J) and J - e inside F.
  for_random_graphs(113, 30, 4, 7, [](const Multigraph& g, Rng& rng) {
    const auto ordering = random_ordering(rng, g.num_edges());
    const auto position = ordering_positions(ordering, g.num_edges());
    std::vector<EdgeSubset> circuits;
    for_each_subset(g.num_edges(), 8, [&](EdgeSubset s) {
      if (oracle::minimal_non_ocp(g, s)) circuits.push_back(s);
    });
    for (auto f : enumerate_odd_circle_pseudoforests(g)) {
      std::size_t expected = 0;
      for (std::size_t e = 0; e < g.num_edges(); ++e) {
        if (f.contains(e)) continue;
        bool active = false;
        for (auto j : circuits) {
          if (!j.contains(e) || !j.without(e).is_subset_of(f)) continue;
          bool smallest = true;
          j.for_each([&](std::size_t x) { smallest = smallest && position[x] >= position[e]; });
          active = active || smallest;
        }
        expected += active ? 1 : 0;
      }
      ASSERT_EQ(even_activity(g, f, ordering), expected);
    }
  });
}

TEST(Cycles, Examples) {
  EXPECT_EQ(enumerate_cycles(triangle()).size(), 1u);
  EXPECT_EQ(enumerate_cycles(figure_eight_graph()).size(), 2u);
  EXPECT_EQ(enumerate_cycles(bouquet_graph(3)).size(), 3u);
  EXPECT_EQ(enumerate_cycles(Multigraph(2, {{0, 1}, {0, 1}, {1, 0}})).size(), 3u);
}

TEST(Cycles, MatchBruteForce) {
  for_random_graphs(127, 80, 5, 9, [](const Multigraph& g, Rng&) {
    auto expected = oracle::all_cycles(g);
    std::sort(expected.begin(), expected.end());
    ASSERT_EQ(enumerate_cycles(g), expected);
  });
}

TEST(CycleGain, Examples) {
  const auto g = triangle();
  const auto gains = gains_of({1, 2, 2});
  const auto s = EdgeSubset::full(3);
  EXPECT_EQ(cycle_gain(g, Orientation::identity(3), gains, s), 4);
  EXPECT_FALSE(is_gainless(g, Orientation::identity(3), gains, s));

  const auto reversed = Orientation::from_mask(3, 0b100);
  EXPECT_EQ(cycle_gain(g, reversed, gains, s), 1);
  EXPECT_TRUE(is_gainless(g, reversed, gains, s));

  EXPECT_THROW(cycle_gain(g, reversed, gains, edges({0, 1})), InvalidArgument);
}

TEST(CycleGain, DirectionsAreReciprocal) {
  static const std::vector<Rational> pool{1, -1, 2, -3, Rational(1, 2), Rational(5, 3)};
  for_random_graphs(131, 80, 4, 7, [](const Multigraph& g, Rng& rng) {
    const auto o = random_orientation(rng, g.num_edges());
    const auto gains = random_gains(rng, g.num_edges(), pool);
    for (auto c : enumerate_cycles(g)) {
      const Rational fwd = cycle_gain(g, o, gains, c, CycleDirection::Forward);
      const Rational back = cycle_gain(g, o, gains, c, CycleDirection::Backward);
      ASSERT_EQ(fwd * back, 1);
      if (c.size() == 1) continue;
      // Reorienting every edge of the cycle and inverting the gains keeps the value.
      Orientation flipped = o;
      std::vector<Rational> inv = gains.values();
      c.for_each([&](std::size_t e) {
        flipped.flips[e] = !flipped.flips[e];
        inv[e] = 1 / inv[e];
      });
      ASSERT_TRUE(cycle_gain(g, flipped, GainAssignment(inv), c) == fwd ||
                  cycle_gain(g, flipped, GainAssignment(inv), c) == back);
    }
  });
}

TEST(EnumerationProperties, Monotonicity) {
  for_random_graphs(137, 40, 4, 7, [](const Multigraph& g, Rng& rng) {
    for (auto f : enumerate_pseudoforests(g)) {
      if (f.empty()) continue;
      const std::size_t e = f.elements()[pick_index(rng, f.size())];
      ASSERT_TRUE(is_pseudoforest(g, f.without(e)));
      if (is_forest(g, f)) {
        ASSERT_TRUE(is_forest(g, f.without(e)));
      }
      if (is_odd_circle_pseudoforest(g, f)) {
        ASSERT_TRUE(is_odd_circle_pseudoforest(g, f.without(e)));
      }
    }
  });
}

TEST(EnumerationProperties, CountingIdentity) {
  for_random_graphs(139, 50, 5, 8, [](const Multigraph& g, Rng&) {
    const auto cycles = enumerate_cycles(g);
    std::uint64_t with_cycle = 0;
    for_each_subset(g.num_edges(), 8, [&](EdgeSubset s) { with_cycle += contains_cycle(cycles, s) ? 1 : 0; });
    ASSERT_EQ(enumerate_spanning_forests(g).size() + with_cycle, std::uint64_t{1} << g.num_edges());
  });
}

TEST(EvenCircuits, RecognizerMatchesMinimalNonOcp) {
  for_random_graphs(149, 60, 5, 8, [](const Multigraph& g, Rng&) {
    for_each_subset(g.num_edges(), 8, [&](EdgeSubset s) {
      ASSERT_EQ(is_even_circuit(g, s), oracle::minimal_non_ocp(g, s)) << format_edges(s);
    });
  });
  EXPECT_TRUE(is_even_circuit(handcuff_graph(), EdgeSubset::full(8)));
  EXPECT_TRUE(is_even_circuit(figure_eight_graph(), EdgeSubset::full(6)));
  EXPECT_FALSE(is_even_circuit(triangle(), EdgeSubset::full(3)));
}

TEST(EvenCircuits, DeletionGivesOddCirclePseudoforest) {
  for_random_graphs(151, 60, 5, 8, [](const Multigraph& g, Rng&) {
    for_each_subset(g.num_edges(), 8, [&](EdgeSubset s) {
      if (!is_even_circuit(g, s)) return;
      s.for_each([&](std::size_t e) { ASSERT_TRUE(is_odd_circle_pseudoforest(g, s.without(e))); });
    });
  });
}

TEST(EvenCircuits, WitnessDependenceIsInKernel) {
  for_random_graphs(157, 80, 5, 9, [](const Multigraph& g, Rng&) {
    const auto a = undirected_incidence(g);
    const auto c = classify_subgraph(g, EdgeSubset::full(g.num_edges()));
    if (!c.witness) return;
    const auto coeff = even_circuit_dependence(g, *c.witness);
    ASSERT_EQ(coeff.size(), g.num_edges());
    for (std::size_t e = 0; e < g.num_edges(); ++e) ASSERT_EQ(coeff[e] != 0, c.witness->edges.contains(e));
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      Rational sum = 0;
      for (std::size_t e = 0; e < g.num_edges(); ++e) sum += a(v, e) * coeff[e];
      ASSERT_EQ(sum, 0);
    }
  });
}

TEST(EvenCircuits, DependenceIffEvenCircuitUpToTenEdges) {
  for_random_graphs(163, 25, 6, 10, [](const Multigraph& g, Rng&) {
    const auto a = undirected_incidence(g);
    for_each_subset(g.num_edges(), 10, [&](EdgeSubset s) {
      const bool dependent = oracle::column_rank(a, s) < s.size();
      ASSERT_EQ(classify_subgraph(g, s).kind == SubgraphKind::ContainsEvenCircuit, dependent) << format_edges(s);
    });
  });
}
