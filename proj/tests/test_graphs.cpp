#include <gtest/gtest.h>

#include "circalg/circalg.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace circalg;

namespace {

// Triangle 0 -> 1 -> 2 -> 0.
Multigraph triangle() { return cycle_graph(3); }

GainAssignment gains_of(std::initializer_list<Rational> values) { return GainAssignment(std::vector<Rational>(values)); }

RationalVector column(const ExactMatrix& a, std::size_t c) { return a.column(c); }

RationalVector vec(std::initializer_list<Rational> values) { return RationalVector(values); }

Multigraph random_graph(Rng& rng) { return random_multigraph(rng, 5, 7); }

const std::vector<Rational>& gain_pool() {
  static const std::vector<Rational> pool{1, -1, 2, -2, 3, -3, Rational(1, 2), Rational(-2, 5)};
  return pool;
}

}  // namespace

TEST(Multigraph, RejectsBadEndpoints) {
  EXPECT_THROW(Multigraph(2, {{0, 2}}), InvalidArgument);
  EXPECT_NO_THROW(Multigraph(1, {{0, 0}, {0, 0}}));
}

TEST(GainAssignment, RejectsZeroGain) {
  EXPECT_THROW(gains_of({1, 0}), InvalidArgument);
}

TEST(Incidence, DirectedTriangle) {
  const auto a = directed_incidence(triangle());
  EXPECT_EQ(column(a, 0), vec({-1, 1, 0}));
  EXPECT_EQ(column(a, 1), vec({0, -1, 1}));
  EXPECT_EQ(column(a, 2), vec({1, 0, -1}));
}

TEST(Incidence, LoopColumns) {
  const Multigraph loop(2, {{1, 1}});
  EXPECT_EQ(column(directed_incidence(loop), 0), vec({0, 0}));
  EXPECT_EQ(column(undirected_incidence(loop), 0), vec({0, 2}));
  EXPECT_EQ(column(gain_incidence(loop, Orientation::identity(1), gains_of({-1})), 0), vec({0, -2}));
}

TEST(Incidence, UndirectedTriangleAndPath) {
  const auto a = undirected_incidence(triangle());
  EXPECT_EQ(column(a, 0), vec({1, 1, 0}));
  EXPECT_EQ(column(a, 1), vec({0, 1, 1}));
  EXPECT_EQ(column(a, 2), vec({1, 0, 1}));
  EXPECT_EQ(matrix_rank(undirected_incidence(Multigraph(3, {{0, 1}, {1, 2}}))), 2u);
}

TEST(Incidence, GainTriangle) {
  const auto a = gain_incidence(triangle(), Orientation::identity(3), gains_of({1, 2, 2}));
  EXPECT_EQ(column(a, 0), vec({-1, 1, 0}));
  EXPECT_EQ(column(a, 1), vec({0, -1, 2}));
  EXPECT_EQ(column(a, 2), vec({2, 0, -1}));
}

TEST(Incidence, LengthMismatch) {
  EXPECT_THROW(directed_incidence(triangle(), Orientation::identity(2)), DimensionMismatch);
  EXPECT_THROW(gain_incidence(triangle(), Orientation::identity(3), gains_of({1, 2})), DimensionMismatch);
}

TEST(Incidence, ConstantGainsRecoverDirectedAndUndirected) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_graph(rng);
    const auto o = random_orientation(rng, g.num_edges());
    const std::size_t m = g.num_edges();
    EXPECT_EQ(gain_incidence(g, o, GainAssignment::constant(m, 1)), directed_incidence(g, o));
    auto minus = gain_incidence(g, o, GainAssignment::constant(m, -1));
    for (std::size_t e = 0; e < m; ++e) minus = scale_column(minus, e, -1);
    EXPECT_EQ(minus, undirected_incidence(g));
  }
}

TEST(Incidence, ColumnSumsAndShape) {
  Rng rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = random_graph(rng);
    const auto o = random_orientation(rng, g.num_edges());
    const auto gains = random_gains(rng, g.num_edges(), gain_pool());
    const auto d = directed_incidence(g, o);
    const auto u = undirected_incidence(g);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      Rational ds = 0;
      Rational us = 0;
      for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        ds += d(v, e);
        us += u(v, e);
      }
      ASSERT_EQ(ds, 0);
      ASSERT_EQ(us, 2);
    }
    ASSERT_TRUE(is_generalized_incidence(d));
    ASSERT_TRUE(is_generalized_incidence(u));
    ASSERT_TRUE(is_generalized_incidence(gain_incidence(g, o, gains)));
  }
}

TEST(Reorient, FlipsEdgeAndInvertsGain) {
  const auto r = reorient_edge(triangle(), Orientation::identity(3), gains_of({1, 2, 2}), 2);
  EXPECT_FALSE(r.loop_noop);
  EXPECT_EQ(r.gains.values(), gains_of({1, 2, Rational(1, 2)}).values());
  EXPECT_EQ(r.orientation.flips, (std::vector<bool>{false, false, true}));
}

TEST(Reorient, LoopIsNoop) {
  const Multigraph g(1, {{0, 0}});
  const auto r = reorient_edge(g, Orientation::identity(1), gains_of({3}), 0);
  EXPECT_TRUE(r.loop_noop);
  EXPECT_EQ(r.gains.values(), gains_of({3}).values());
  EXPECT_EQ(r.orientation.flips, std::vector<bool>{false});
  EXPECT_THROW(reorient_edge(g, Orientation::identity(1), gains_of({3}), 1), InvalidArgument);
}

TEST(Reorient, ColumnIsRescaledAndHilbertUnchanged) {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_multigraph(rng, 4, 6);
    if (g.num_edges() == 0) continue;
    const auto o = random_orientation(rng, g.num_edges());
    const auto gains = random_gains(rng, g.num_edges(), gain_pool());
    const std::size_t e = pick_index(rng, g.num_edges());
    const auto r = reorient_edge(g, o, gains, e);
    const auto before = gain_incidence(g, o, gains);
    const auto after = gain_incidence(g, r.orientation, r.gains);
    if (!g.edge(e).is_loop()) {
      // The new column is the old one times -1/gain(e).
      ASSERT_EQ(after, scale_column(before, e, -1 / gains[e]));
    }
    ASSERT_EQ(hilbert_function(after), hilbert_function(before));

    const auto twice = reorient_edge(g, r.orientation, r.gains, e);
    ASSERT_EQ(twice.orientation.flips, o.flips);
    ASSERT_EQ(twice.gains.values(), gains.values());
  }
}

TEST(GainGraphFromMatrix, Examples) {
  const auto directed = gain_graph_from_matrix(directed_incidence(triangle()));
  EXPECT_EQ(directed.gains.values(), GainAssignment::constant(3, 1).values());
  EXPECT_EQ(directed.graph.num_vertices(), 3u);

  const auto undirected = gain_graph_from_matrix(undirected_incidence(triangle()));
  EXPECT_EQ(undirected.gains.values(), GainAssignment::constant(3, -1).values());

  ExactMatrix a(3, 1);
  a(1, 0) = 3;
  a(2, 0) = -6;
  const auto gg = gain_graph_from_matrix(a);
  EXPECT_EQ(gg.graph.edge(0).tail, 1u);
  EXPECT_EQ(gg.graph.edge(0).head, 2u);
  EXPECT_EQ(gg.gains[0], 2);
  EXPECT_EQ(gg.column_scale[0], -3);
}

TEST(GainGraphFromMatrix, Errors) {
  ExactMatrix a(3, 1);
  a(0, 0) = 1;
  a(1, 0) = 1;
  a(2, 0) = 1;
  EXPECT_THROW(gain_graph_from_matrix(a), NotGeneralizedIncidence);
  EXPECT_THROW(gain_graph_from_matrix(ExactMatrix(0, 1)), InvalidArgument);
}

TEST(GainGraphFromMatrix, SingleEntryColumns) {
  ExactMatrix a(2, 3);
  a(0, 0) = 4;
  a(1, 1) = -1;
  const auto gg = gain_graph_from_matrix(a);
  EXPECT_TRUE(gg.graph.edge(0).is_loop());
  EXPECT_EQ(gg.gains[0], 5);
  EXPECT_EQ(gg.gains[1], 2);
  EXPECT_EQ(gg.column_scale[1], -1);
  EXPECT_EQ(gg.gains[2], 1);
  const auto back = gain_incidence(gg.graph, gg.orientation, gg.gains);
  EXPECT_EQ(column(back, 2), vec({0, 0}));
}

TEST(GainGraphFromMatrix, RoundTripRescalesColumns) {
  Rng rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = 1 + rng() % 4;
    const std::size_t cols = 1 + rng() % 6;
    ExactMatrix a(rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t support = rng() % 3;
      for (std::size_t k = 0; k < support; ++k) a(rng() % rows, c) = testing_support::random_nonzero(rng);
    }
    ASSERT_TRUE(is_generalized_incidence(a));
    const auto gg = gain_graph_from_matrix(a);
    const auto back = gain_incidence(gg.graph, gg.orientation, gg.gains);
    ExactMatrix rescaled = back;
    for (std::size_t c = 0; c < cols; ++c) {
      ASSERT_NE(gg.column_scale[c], 0);
      rescaled = scale_column(rescaled, c, gg.column_scale[c]);
    }
    // Zero columns map to gain-1 loops, whose columns are zero as well.
    ASSERT_EQ(rescaled, a) << "trial " << trial;
    ASSERT_EQ(hilbert_function(back), hilbert_function(a));
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << cols); ++b) {
      ASSERT_EQ(oracle::column_rank(back, EdgeSubset(b)), oracle::column_rank(a, EdgeSubset(b)));
    }
  }
}
