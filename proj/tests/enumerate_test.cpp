#include "twocograph/enumerate.hpp"
#include "twocograph/oracles.hpp"

#include <gtest/gtest.h>

#include <atomic>
#include <set>

namespace twocograph {
namespace {

TEST(Generate, CountsUpToNine) {
  const std::array<std::size_t, 10> expected = {0, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(generate_graphs(n).size(), expected[n]) << n;
  std::atomic<std::size_t> count = 0;
  for_each_graph(9, [&](const SmallGraph&, int) { ++count; }, 2);
  EXPECT_EQ(count.load(), expected[9]);
}

TEST(Generate, OneGraphPerClassAgainstPermutationSearch) {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::uint64_t> generated;
    for (const SmallGraph& g : generate_graphs(n)) ASSERT_TRUE(generated.insert(oracle::min_code(g)).second);
    std::set<std::uint64_t> reference;
    for (const SmallGraph& g : oracle::isomorphism_class_representatives(n)) reference.insert(oracle::min_code(g));
    EXPECT_EQ(generated, reference) << n;
  }
}

TEST(Generate, OutputIsCanonicalAndIndependentOfJobs) {
  const auto serial = generate_graphs(8, 1);
  EXPECT_EQ(serial, generate_graphs(8, 3));
  for (const SmallGraph& g : serial) ASSERT_EQ(canonical_form(g).graph(), g);
}

TEST(Generate, RejectsOrdersOutsideRange) {
  EXPECT_THROW(generate_graphs(0), std::invalid_argument);
  EXPECT_THROW(generate_graphs(11), std::invalid_argument);
  EXPECT_THROW(enumerate_class_g(11), std::invalid_argument);
}

TEST(FilterCandidates, Examples) {
  const std::vector<SmallGraph> in = {cycle_graph(5), complete_graph(5), path_graph(5), c6_plus(), cycle_graph(6)};
  const auto out = filter_candidates(in);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0], cycle_graph(5));
  EXPECT_EQ(out[1], c6_plus());
}

TEST(DedupUpToComplement, Examples) {
  const std::vector<SmallGraph> c5 = {cycle_graph(5), complement(cycle_graph(5))};
  const auto a = dedup_up_to_complement(c5);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_TRUE(are_isomorphic(a[0], cycle_graph(5)));

  const std::vector<SmallGraph> pair = {c6_plus(), complement(c6_plus()), permute(c6_plus(), std::vector<Vertex>{5, 4, 3, 2, 1, 0})};
  const auto b = dedup_up_to_complement(pair);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(canonical_form(b[0]), complement_pair_key(c6_plus()));
}

TEST(Census, SmallOrders) {
  const std::array<std::pair<std::uint64_t, std::uint64_t>, 9> expected = {
      {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 1}, {2, 1}, {16, 8}, {87, 46}}};
  for (int n = 1; n <= 8; ++n) {
    const ClassGReport r = enumerate_class_g(n);
    EXPECT_EQ(r.order, n);
    EXPECT_EQ(r.members_total, expected[n].first) << n;
    EXPECT_EQ(r.representatives.size(), expected[n].second) << n;
  }
  const ClassGReport r5 = enumerate_class_g(5);
  ASSERT_EQ(r5.representatives.size(), 1u);
  EXPECT_TRUE(are_isomorphic(r5.representatives[0], cycle_graph(5)));
  EXPECT_EQ(r5.self_complementary, 1u);
  const ClassGReport r6 = enumerate_class_g(6);
  ASSERT_EQ(r6.representatives.size(), 1u);
  EXPECT_EQ(complement_pair_key(r6.representatives[0]), complement_pair_key(c6_plus()));
}

TEST(Census, ReportInvariants) {
  const ClassGReport r = enumerate_class_g(8, 2);
  EXPECT_EQ(r.graphs_scanned, 12346u);
  EXPECT_LE(r.members_total, r.candidates_scanned);
  EXPECT_EQ(r.members.size(), r.members_total);
  EXPECT_TRUE(std::is_sorted(r.members.begin(), r.members.end()));
  // Pairs of complements plus the self-complementary members.
  EXPECT_EQ(2 * r.representatives.size(), r.members_total + r.self_complementary);
  for (const CanonicalForm& f : r.members) {
    const SmallGraph g = f.graph();
    ASSERT_TRUE(in_class_g(g));
    ASSERT_TRUE(std::binary_search(r.members.begin(), r.members.end(), canonical_form(complement(g))));
  }
  for (const SmallGraph& g : r.representatives) ASSERT_EQ(canonical_form(g), complement_pair_key(g));
}

TEST(Census, ExternalInputMatchesGenerator) {
  const std::vector<SmallGraph> graphs = generate_graphs(7);
  const ClassGReport a = enumerate_class_g(7, graphs);
  const ClassGReport b = enumerate_class_g(7);
  EXPECT_EQ(a.members, b.members);
  EXPECT_EQ(a.candidates_scanned, b.candidates_scanned);
  EXPECT_EQ(a.graphs_scanned, b.graphs_scanned);

  // Relabeled duplicates collapse to one member.
  const std::vector<SmallGraph> dup = {cycle_graph(5), from_edge_list(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}})};
  EXPECT_EQ(enumerate_class_g(5, dup).members_total, 1u);
  const std::vector<SmallGraph> wrong = {cycle_graph(6)};
  EXPECT_THROW(enumerate_class_g(5, wrong), std::invalid_argument);
}

}  // namespace
}  // namespace twocograph
