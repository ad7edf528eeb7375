// End-to-end acceptance checks shared by the acceptance test binary and `twocograph verify`.

#ifndef TWOCOGRAPH_ACCEPTANCE_HPP
#define TWOCOGRAPH_ACCEPTANCE_HPP

#include "twocograph/canonical.hpp"
#include "twocograph/enumerate.hpp"
#include "twocograph/graph.hpp"
#include "twocograph/minimality.hpp"
#include "twocograph/oracles.hpp"
#include "twocograph/recognition.hpp"

#include <cstdint>
#include <functional>
#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace twocograph::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Expected (members, self-complementary) per order for n = 5..10; orders 1..4 have no members.
inline const std::map<int, std::pair<std::uint64_t, std::uint64_t>>& expected_census() {
  // order -> (members, self-complementary members)
  static const std::map<int, std::pair<std::uint64_t, std::uint64_t>> table = {
      {5, {1, 1}}, {6, {2, 0}}, {7, {16, 0}}, {8, {87, 5}}, {9, {86, 0}}, {10, {2, 0}},
  };
  return table;
}

inline SmallGraph contraction_counterexample() {
  // A 3-cograph whose contraction along 0-1 is not one.
  return from_edge_list(9, {{0, 1}, {0, 2}, {0, 8}, {2, 3}, {3, 4}, {4, 8}, {1, 5}, {5, 6}, {6, 7}, {7, 8}, {4, 7},
                            {3, 6}, {2, 5}});
}

/// Every graph on 1..max_order vertices, one per isomorphism class, from the generator.
inline std::vector<SmallGraph> all_graphs_up_to(int max_order) {
  std::vector<SmallGraph> out;
  for (int n = 1; n <= max_order; ++n) {
    auto level = generate_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

class Suite {
 public:
  Suite(int max_order, int jobs) : max_order_(max_order), jobs_(std::max(1, jobs)) {}

  std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& on_result = {}) {
    std::vector<CriterionResult> results;
    auto record = [&](CriterionResult r) {
      if (on_result) on_result(r);
      results.push_back(std::move(r));
    };
    record(census_reproduction());
    record(no_small_members());
    record(recognizer_matches_oracle());
    record(one_step_minimality_matches_closure());
    record(closure_laws());
    record(complete_bipartite_criterion());
    record(cycle_complements());
    record(critically_2_connected_members());
    record(contraction_breaks_3_cographs());
    record(certificate_soundness());
    record(generator_counts());
    return results;
  }

  const ClassGReport& census(int n) {
    auto it = census_.find(n);
    if (it == census_.end()) it = census_.emplace(n, enumerate_class_g(n, jobs_)).first;
    return it->second;
  }

  CriterionResult census_reproduction() {
    CriterionResult r{1, "census reproduction", true, {}};
    std::ostringstream os;
    for (const auto& [n, expected] : expected_census()) {
      if (n > max_order_) {
        os << "n=" << n << " skipped (max order " << max_order_ << "); ";
        continue;
      }
      const ClassGReport& rep = census(n);
      const bool ok = rep.members_total == expected.first && rep.self_complementary == expected.second;
      r.passed = r.passed && ok;
      os << "n=" << n << ": " << rep.members_total << " members, " << rep.self_complementary << " self-complementary"
         << (ok ? "" : " (MISMATCH)") << "; ";
    }
    r.detail = os.str();
    return r;
  }

  CriterionResult no_small_members() {
    CriterionResult r{2, "no members on at most four vertices", true, {}};
    std::ostringstream os;
    for (int n = 1; n <= 4; ++n) {
      const ClassGReport& rep = census(n);
      std::uint64_t non_2cographs = 0;
      for (const SmallGraph& g : generate_graphs(n)) non_2cographs += is_2cograph_verdict(g) ? 0 : 1;
      r.passed = r.passed && rep.members_total == 0 && non_2cographs == 0;
      os << "n=" << n << ": " << rep.members_total << " members, " << non_2cographs << " non-2-cographs; ";
    }
    r.detail = os.str();
    return r;
  }

  CriterionResult recognizer_matches_oracle() {
    CriterionResult r{3, "recursive 2-cograph recognizer agrees with subset-scan definition", true, {}};
    const auto graphs = all_graphs_up_to(std::min(7, max_order_));
    std::uint64_t disagreements = 0;
    for (const SmallGraph& g : graphs) {
      if (is_2cograph(g).is_2cograph != is_2cograph_oracle(g) || is_2cograph_verdict(g) != is_2cograph_oracle(g)) {
        ++disagreements;
      }
    }
    r.passed = disagreements == 0 && (max_order_ < 7 || graphs.size() == 1252);
    r.detail = std::to_string(graphs.size()) + " classes, " + std::to_string(disagreements) + " disagreements";
    return r;
  }

  CriterionResult one_step_minimality_matches_closure() {
    CriterionResult r{4, "one-step minimality equals all-induced-minor minimality", true, {}};
    const auto graphs = all_graphs_up_to(std::min(7, max_order_));
    std::uint64_t disagreements = 0;
    std::uint64_t minimal = 0;
    for (const SmallGraph& g : graphs) {
      const bool fast = is_minimal_non_2cograph(g).is_minimal;
      minimal += fast ? 1 : 0;
      if (fast != is_minimal_non_2cograph_by_closure(g)) ++disagreements;
    }
    r.passed = disagreements == 0;
    r.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(minimal) + " minimal, " +
               std::to_string(disagreements) + " disagreements";
    return r;
  }

  CriterionResult closure_laws() {
    CriterionResult r{5, "closure under induced subgraphs, contraction, complement, sums and 1-joins", true, {}};
    std::uint64_t violations = 0;
    std::uint64_t checked = 0;
    std::vector<SmallGraph> small_2cographs;
    for (const SmallGraph& g : all_graphs_up_to(std::min(7, max_order_))) {
      if (!is_2cograph_verdict(g)) continue;
      ++checked;
      if (g.order() <= 6) small_2cographs.push_back(g);
      for (VertexSet s = 1; s < g.vertices(); ++s)
        if (!is_2cograph_verdict(induced_subgraph(g, s))) ++violations;
      for (const Edge& e : g.edges())
        if (!is_2cograph_verdict(contract_edge(g, e))) ++violations;
      if (!is_2cograph_verdict(complement(g))) ++violations;
    }
    std::mt19937_64 rng(20240611);
    auto pick = [&]() -> SmallGraph {
      const SmallGraph& g = small_2cographs[rng() % small_2cographs.size()];
      std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      return permute(g, perm);
    };
    constexpr int kRandomConstructions = 10000;
    for (int i = 0; i < kRandomConstructions; ++i) {
      const SmallGraph a = pick();
      const SmallGraph b = pick();
      const Vertex av = static_cast<Vertex>(rng() % a.order());
      const Vertex bv = static_cast<Vertex>(rng() % b.order());
      SmallGraph built;
      switch (i % 4) {
        case 0: built = zero_sum(a, b); break;
        case 1: built = one_sum(a, b, av, bv); break;
        case 2: built = one_join(a, b); break;
        default: built = one_join(a, b, std::pair{av, bv}); break;
      }
      if (!is_2cograph_verdict(built)) ++violations;
    }
    r.passed = violations == 0 && !small_2cographs.empty();
    r.detail = std::to_string(checked) + " 2-cographs checked exhaustively, " + std::to_string(kRandomConstructions) +
               " random constructions, " + std::to_string(violations) + " violations";
    return r;
  }

  CriterionResult complete_bipartite_criterion() {
    CriterionResult r{6, "2-connected complement iff no complete bipartite subgraph on n-1 vertices", true, {}};
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    for (const SmallGraph& g : all_graphs_up_to(std::min(7, max_order_))) {
      if (!is_2_connected(g)) continue;
      ++checked;
      if (is_2_connected(complement(g)) == has_large_complete_bipartite_subgraph(g)) ++violations;
    }
    r.passed = violations == 0;
    r.detail = std::to_string(checked) + " 2-connected graphs, " + std::to_string(violations) + " violations";
    return r;
  }

  CriterionResult cycle_complements() {
    CriterionResult r{7, "cycle complements minimal, long cycles non-minimal non-2-cographs", true, {}};
    std::ostringstream os;
    for (int n = 5; n <= 9; ++n) {
      const bool ok = is_minimal_non_2cograph(complement(cycle_graph(n))).is_minimal;
      r.passed = r.passed && ok;
      if (!ok) os << "complement(C" << n << ") not minimal; ";
    }
    for (int n = 6; n <= 9; ++n) {
      const MinimalityVerdict v = is_minimal_non_2cograph(cycle_graph(n));
      const bool ok = !is_2cograph_verdict(cycle_graph(n)) && v.reason == MinimalityVerdict::Reason::reducible;
      r.passed = r.passed && ok;
      if (!ok) os << "C" << n << " verdict wrong; ";
    }
    r.detail = r.passed ? "complement(C5..C9) minimal; C6..C9 reducible non-2-cographs" : os.str();
    return r;
  }

  CriterionResult critically_2_connected_members() {
    CriterionResult r{8, "critically 2-connected members are exactly C5 and C6+", true, {}};
    std::vector<CanonicalForm> found;
    int top = 0;
    for (int n = 5; n <= std::min(10, max_order_); ++n) {
      top = n;
      for (const CanonicalForm& f : census(n).members)
        if (is_critically_2_connected(f.graph())) found.push_back(f);
    }
    std::vector<CanonicalForm> expected = {canonical_form(cycle_graph(5)), canonical_form(c6_plus())};
    if (top < 6) expected.pop_back();
    std::sort(found.begin(), found.end());
    std::sort(expected.begin(), expected.end());
    r.passed = found == expected;
    r.detail = std::to_string(found.size()) + " critically 2-connected classes among members up to n=" +
               std::to_string(top);
    return r;
  }

  CriterionResult contraction_breaks_3_cographs() {
    CriterionResult r{9, "3-cographs are not closed under contraction", true, {}};
    const SmallGraph g = contraction_counterexample();
    const SmallGraph contracted = contract_edge(g, Edge(0, 1));
    const bool g_is_3cograph = is_k_cograph(g, 3);
    const bool contracted_is_3cograph = is_k_cograph(contracted, 3);
    const int kappa = vertex_connectivity(contracted);
    const int kappa_bar = vertex_connectivity(complement(contracted));
    r.passed = g_is_3cograph && !contracted_is_3cograph && kappa >= 3 && kappa_bar >= 3;
    r.detail = std::string("G is 3-cograph: ") + (g_is_3cograph ? "yes" : "no") +
               "; G/e is 3-cograph: " + (contracted_is_3cograph ? "yes" : "no") + "; kappa(G/e)=" +
               std::to_string(kappa) + ", kappa(complement)=" + std::to_string(kappa_bar);
    return r;
  }

  CriterionResult certificate_soundness() {
    CriterionResult r{10, "build trees and witnesses are sound", true, {}};
    constexpr std::uint64_t kTarget = 100000;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    auto check = [&](const SmallGraph& g) {
      ++checked;
      const TwoCographResult res = is_2cograph(g);
      if (res.is_2cograph) {
        const SmallGraph built = evaluate_build_tree(res.tree);
        // labels make the evaluation label-exact: built vertex i is input vertex labels[i]
        bool exact = built.order() == g.order() && static_cast<int>(res.labels.size()) == g.order();
        for (int i = 0; exact && i < built.order(); ++i)
          for (int j = 0; exact && j < built.order(); ++j)
            exact = built.adjacent(i, j) == g.adjacent(res.labels[i], res.labels[j]);
        if (!exact || !are_isomorphic(built, g)) ++violations;
      } else {
        const SmallGraph h = induced_subgraph(g, res.witness.support);
        if (h.order() < 5 || !is_2_connected(h) || !is_2_connected(complement(h))) ++violations;
      }
    };
    for (int n = 1; n <= std::min(9, max_order_) && checked < kTarget; ++n) {
      for (const SmallGraph& g : generate_graphs(n)) {
        if (checked == kTarget) break;
        check(g);
      }
    }
    r.passed = violations == 0 && (max_order_ < 9 || checked == kTarget);
    r.detail = std::to_string(checked) + " graphs, " + std::to_string(violations) + " violations";
    return r;
  }

  CriterionResult generator_counts() {
    CriterionResult r{11, "generator class counts and thread-count invariance", true, {}};
    static constexpr std::array<std::size_t, 8> kCounts = {0, 1, 2, 4, 11, 34, 156, 1044};
    std::ostringstream os;
    for (int n = 1; n <= std::min(7, max_order_); ++n) {
      const auto generated = generate_graphs(n);
      const auto brute = oracle::isomorphism_class_representatives(n);
      std::vector<std::uint64_t> a;
      std::vector<std::uint64_t> b;
      for (const SmallGraph& g : generated) a.push_back(oracle::min_code(g));
      for (const SmallGraph& g : brute) b.push_back(oracle::min_code(g));
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      const bool ok = generated.size() == kCounts[n] && brute.size() == kCounts[n] && a == b;
      r.passed = r.passed && ok;
      os << "n=" << n << ": " << generated.size() << (ok ? "" : " (MISMATCH)") << "; ";
    }
    if (max_order_ >= 9) {
      const ClassGReport& one = census(9);
      const ClassGReport many = enumerate_class_g(9, std::max(2, jobs_ == 1 ? 4 : jobs_));
      std::vector<CanonicalForm> reps_one;
      std::vector<CanonicalForm> reps_many;
      for (const auto& g : one.representatives) reps_one.push_back(canonical_form(g));
      for (const auto& g : many.representatives) reps_many.push_back(canonical_form(g));
      const bool ok = one.members_total == many.members_total && one.self_complementary == many.self_complementary &&
                      one.members == many.members && reps_one == reps_many;
      r.passed = r.passed && ok;
      os << "n=9 census identical across worker counts: " << (ok ? "yes" : "NO");
    }
    r.detail = os.str();
    return r;
  }

 private:
  int max_order_;
  int jobs_;
  std::map<int, ClassGReport> census_;
};

}  // namespace twocograph::acceptance

#endif  // TWOCOGRAPH_ACCEPTANCE_HPP
