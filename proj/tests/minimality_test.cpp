#include "twocograph/enumerate.hpp"
#include "twocograph/io.hpp"
#include "twocograph/minimality.hpp"
#include "twocograph/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace twocograph {
namespace {

std::vector<SmallGraph> classes_up_to(int n) {
  std::vector<SmallGraph> out;
  for (int m = 1; m <= n; ++m) {
    auto reps = oracle::isomorphism_class_representatives(m);
    out.insert(out.end(), reps.begin(), reps.end());
  }
  return out;
}

bool contains(const std::vector<InducedMinor>& closure, const SmallGraph& g, bool proper) {
  const CanonicalForm f = canonical_form(g);
  return std::any_of(closure.begin(), closure.end(),
                     [&](const InducedMinor& m) { return m.form == f && m.proper == proper; });
}

TEST(Minimality, Examples) {
  const MinimalityVerdict c5 = is_minimal_non_2cograph(cycle_graph(5));
  EXPECT_TRUE(c5.is_minimal);
  EXPECT_EQ(c5.reason, MinimalityVerdict::Reason::minimal);
  EXPECT_FALSE(c5.failing_reduction.has_value());

  EXPECT_TRUE(is_minimal_non_2cograph(complement(cycle_graph(8))).is_minimal);

  const MinimalityVerdict c6 = is_minimal_non_2cograph(cycle_graph(6));
  EXPECT_FALSE(c6.is_minimal);
  EXPECT_EQ(c6.reason, MinimalityVerdict::Reason::reducible);
  ASSERT_TRUE(c6.failing_reduction.has_value());
  EXPECT_EQ(c6.failing_reduction->kind, Reduction::Kind::contract_edge);
  EXPECT_EQ(c6.failing_reduction->edge, Edge(0, 1));
  EXPECT_TRUE(are_isomorphic(contract_edge(cycle_graph(6), Edge(0, 1)), cycle_graph(5)));

  const MinimalityVerdict p4 = is_minimal_non_2cograph(path_graph(4));
  EXPECT_FALSE(p4.is_minimal);
  EXPECT_EQ(p4.reason, MinimalityVerdict::Reason::not_a_non_2cograph);
  EXPECT_FALSE(p4.failing_reduction.has_value());
}

TEST(Minimality, ReportsVertexDeletionFirst) {
  // C5 plus a pendant vertex 5 on 0: deleting 5 leaves C5.
  SmallGraph g = zero_sum(cycle_graph(5), SmallGraph(1));
  g.add_edge(0, 5);
  const MinimalityVerdict v = is_minimal_non_2cograph(g);
  ASSERT_TRUE(v.failing_reduction.has_value());
  EXPECT_EQ(v.failing_reduction->kind, Reduction::Kind::delete_vertex);
  EXPECT_EQ(v.failing_reduction->vertex, 5);
}

TEST(Minimality, RejectsLargeInputs) { EXPECT_THROW(is_minimal_non_2cograph(SmallGraph(17)), std::invalid_argument); }

TEST(ClassG, Examples) {
  EXPECT_TRUE(in_class_g(cycle_graph(5)));
  EXPECT_TRUE(in_class_g(c6_plus()));
  EXPECT_TRUE(in_class_g(complement(c6_plus())));
  EXPECT_FALSE(in_class_g(complement(cycle_graph(8))));
  EXPECT_FALSE(is_minimal_non_2cograph(cycle_graph(8)).is_minimal);
  EXPECT_FALSE(is_2cograph_verdict(contract_edge(cycle_graph(8), Edge(0, 1))));
}

TEST(ClassG, ClosedUnderComplement) {
  for (const SmallGraph& g : classes_up_to(7)) ASSERT_EQ(in_class_g(g), in_class_g(complement(g)));
}

TEST(Critically2Connected, Examples) {
  EXPECT_TRUE(is_critically_2_connected(cycle_graph(5)));
  EXPECT_TRUE(is_critically_2_connected(c6_plus()));
  EXPECT_FALSE(is_critically_2_connected(complete_graph(4)));
  EXPECT_FALSE(is_critically_2_connected(path_graph(4)));
}

TEST(InducedMinorClosure, Examples) {
  const auto k1 = induced_minor_closure(SmallGraph(1));
  ASSERT_EQ(k1.size(), 1u);
  EXPECT_FALSE(k1[0].proper);

  const auto k3 = induced_minor_closure(complete_graph(3));
  ASSERT_EQ(k3.size(), 3u);
  EXPECT_TRUE(contains(k3, complete_graph(3), false));
  EXPECT_TRUE(contains(k3, complete_graph(2), true));
  EXPECT_TRUE(contains(k3, SmallGraph(1), true));
  EXPECT_FALSE(contains(k3, SmallGraph(2), true));

  const auto c5 = induced_minor_closure(cycle_graph(5));
  EXPECT_TRUE(contains(c5, path_graph(4), true));
  EXPECT_TRUE(contains(c5, cycle_graph(4), true));
  EXPECT_TRUE(contains(c5, cycle_graph(5), false));
  EXPECT_TRUE(std::is_sorted(c5.begin(), c5.end(), [](const auto& a, const auto& b) { return a.form < b.form; }));
}

TEST(InducedMinorClosure, OneStepMinimalityMatchesAllMinors) {
  for (const SmallGraph& g : classes_up_to(7))
    ASSERT_EQ(is_minimal_non_2cograph(g).is_minimal, is_minimal_non_2cograph_by_closure(g)) << emit_graph6(g);
}

TEST(ContractEdges, OrderIndependentUpToIsomorphism) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const int n = 3 + static_cast<int>(rng() % 8);
    SmallGraph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 2) g.add_edge(u, v);
    std::vector<Edge> edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    edges.resize(edges.size() / 2);
    std::vector<Edge> reversed(edges.rbegin(), edges.rend());
    ASSERT_TRUE(are_isomorphic(contract_edges(g, edges), contract_edges(g, reversed)));
  }
}

TEST(Minimality, CycleComplementsAreMinimal) {
  for (int n = 5; n <= 9; ++n) EXPECT_TRUE(is_minimal_non_2cograph(complement(cycle_graph(n))).is_minimal) << n;
  for (int n = 5; n <= 12; ++n) EXPECT_FALSE(is_2cograph_verdict(cycle_graph(n))) << n;
  for (int n = 6; n <= 9; ++n) {
    const MinimalityVerdict v = is_minimal_non_2cograph(cycle_graph(n));
    EXPECT_EQ(v.reason, MinimalityVerdict::Reason::reducible) << n;
  }
}

TEST(Minimality, MinimalGraphsAreTwoConnectedOnBothSides) {
  std::uint64_t minimal = 0;
  for (int n = 1; n <= 9; ++n) {
    for_each_graph(n, [&](const SmallGraph& g, int) {
      if (!is_minimal_non_2cograph(g).is_minimal) return;
      ++minimal;
      ASSERT_TRUE(is_2_connected(g));
      ASSERT_TRUE(is_2_connected(complement(g)));
    });
  }
  EXPECT_GT(minimal, 0u);
}

}  // namespace
}  // namespace twocograph
