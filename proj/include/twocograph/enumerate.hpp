// Isomorph-free generation of all graphs on up to 10 vertices and the census of the class of
// graphs G such that G and its complement are both induced-minor-minimal non-2-cographs.
//
// Generation is canonical augmentation: a child of a canonical (n-1)-vertex parent P gets a new
// vertex with every possible neighbourhood. The child is kept only when deleting its canonically
// last vertex gives a graph isomorphic to P, so each isomorphism class has exactly one parent;
// duplicates among one parent's children are removed by their canonical forms.

#ifndef TWOCOGRAPH_ENUMERATE_HPP
#define TWOCOGRAPH_ENUMERATE_HPP

#include "twocograph/canonical.hpp"
#include "twocograph/graph.hpp"
#include "twocograph/minimality.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <span>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <vector>

namespace twocograph {

inline constexpr int kMaxEnumerationOrder = 10;

namespace detail {

/// Runs work(index, worker) for index in [0, count) on `jobs` threads, handing out indices in order.
template <typename Work>
void parallel_for(std::size_t count, int jobs, Work&& work) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (int w = 0; w < jobs; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) work(i, w);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

class Augmenter {
 public:
  /// Calls emit(child_form) for each accepted child of the canonical parent.
  template <typename Emit>
  void children(const CanonicalForm& parent, Emit&& emit) {
    const int m = parent.n;
    const int n = m + 1;
    const SmallGraph p = parent.graph();
    std::array<int, kMaxVertices> degree{};
    for (Vertex v = 0; v < m; ++v) degree[v] = p.degree(v);
    seen_.clear();
    std::array<VertexSet, kMaxVertices> rows{};
    std::array<VertexSet, kMaxVertices> smaller{};
    for (VertexSet s = 0; s <= all_vertices(m); ++s) {
      // The canonically last vertex has maximum degree, so the new vertex must too.
      const int k = popcount(s);
      bool max_degree = true;
      for (Vertex v = 0; v < m && max_degree; ++v) max_degree = degree[v] + static_cast<int>((s >> v) & 1U) <= k;
      if (!max_degree) continue;
      for (Vertex v = 0; v < m; ++v) rows[v] = p.neighbors(v) | (((s >> v) & 1U) ? bit(m) : 0U);
      rows[m] = s;
      if (!canon_.run({rows.data(), static_cast<std::size_t>(n)}, n, m)) continue;
      const Vertex last = canon_.best_labeling()[n - 1];
      bool accept = last == m || (canon_.orbit(m) & bit(last)) != 0;
      if (!accept) {
        const VertexSet keep = all_vertices(n) & ~bit(last);
        for (Vertex v = 0, i = 0; v < n; ++v) {
          if (v == last) continue;
          const VertexSet r = rows[v] & keep;
          // drop bit `last` and shift the higher bits down
          smaller[i++] = (r & all_vertices(last)) | ((r >> 1) & ~all_vertices(last));
        }
        parent_check_.run({smaller.data(), static_cast<std::size_t>(m)}, m);
        accept = parent_check_.best() == parent;
      }
      if (accept && seen_.insert(canon_.best()).second) emit(canon_.best());
      if (s == all_vertices(m)) break;
    }
  }

 private:
  Canonizer canon_;
  Canonizer parent_check_;
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen_;
};

/// All isomorphism classes on n vertices as canonical forms, built level by level.
inline std::vector<CanonicalForm> graph_level(int n, int jobs) {
  std::vector<CanonicalForm> level(1);
  level[0].n = 1;
  for (int m = 1; m < n; ++m) {
    std::vector<std::vector<CanonicalForm>> per_parent(level.size());
    std::vector<Augmenter> workers(static_cast<std::size_t>(std::max(1, jobs)));
    parallel_for(level.size(), jobs, [&](std::size_t i, int w) {
      workers[w].children(level[i], [&](const CanonicalForm& f) { per_parent[i].push_back(f); });
    });
    std::vector<CanonicalForm> next;
    for (auto& kids : per_parent) next.insert(next.end(), kids.begin(), kids.end());
    level = std::move(next);
  }
  return level;
}

}  // namespace detail

/// Streams one graph per isomorphism class on n vertices (canonically labeled) to visit(graph, worker).
/// With jobs > 1 the visitor is called concurrently from `jobs` threads; with jobs == 1 the order is
/// deterministic.
template <typename Visit>
void for_each_graph(int n, Visit&& visit, int jobs = 1) {
  if (n < 1 || n > kMaxEnumerationOrder) throw std::invalid_argument("generate_graphs: order must be in [1, 10]");
  jobs = std::max(1, jobs);
  if (n == 1) {
    visit(SmallGraph(1), 0);
    return;
  }
  const std::vector<CanonicalForm> parents = detail::graph_level(n - 1, jobs);
  std::vector<detail::Augmenter> workers(static_cast<std::size_t>(jobs));
  detail::parallel_for(parents.size(), jobs, [&](std::size_t i, int w) {
    workers[w].children(parents[i], [&](const CanonicalForm& f) { visit(f.graph(), w); });
  });
}

/// Materialized list of all graphs on n vertices up to isomorphism (one canonical representative each).
/// Order is a function of n alone: children are grouped by parent in parent order.
inline std::vector<SmallGraph> generate_graphs(int n, int jobs = 1) {
  if (n < 1 || n > kMaxEnumerationOrder) throw std::invalid_argument("generate_graphs: order must be in [1, 10]");
  std::vector<SmallGraph> out;
  for (const CanonicalForm& f : detail::graph_level(n, jobs)) out.push_back(f.graph());
  return out;
}

/// kappa(G) == 2 and kappa(complement G) == 2.
inline bool is_candidate(const SmallGraph& g) { return has_connectivity_two(g) && has_connectivity_two(complement(g)); }

inline std::vector<SmallGraph> filter_candidates(std::span<const SmallGraph> graphs) {
  std::vector<SmallGraph> out;
  for (const SmallGraph& g : graphs)
    if (is_candidate(g)) out.push_back(g);
  return out;
}

/// One graph per {G, complement G} pair: the canonical graph of the smaller canonical form.
/// Output sorted by canonical form.
inline std::vector<SmallGraph> dedup_up_to_complement(std::span<const SmallGraph> graphs) {
  std::vector<CanonicalForm> keys;
  keys.reserve(graphs.size());
  for (const SmallGraph& g : graphs) keys.push_back(complement_pair_key(g));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<SmallGraph> out;
  out.reserve(keys.size());
  for (const CanonicalForm& k : keys) out.push_back(k.graph());
  return out;
}

struct ClassGReport {
  int order = 0;
  std::uint64_t graphs_scanned = 0;
  /// Graphs with kappa = 2 on both sides, the ones tested for membership.
  std::uint64_t candidates_scanned = 0;
  std::uint64_t members_total = 0;
  std::uint64_t self_complementary = 0;
  /// One per complement pair, sorted by canonical form.
  std::vector<SmallGraph> representatives;
  /// Canonical forms of all members, sorted.
  std::vector<CanonicalForm> members;
  std::chrono::duration<double> wall_time{0};
};

namespace detail {

inline ClassGReport finish_report(int n, std::uint64_t scanned, std::uint64_t candidates,
                                  std::vector<CanonicalForm> members, std::chrono::steady_clock::time_point start) {
  ClassGReport report;
  report.order = n;
  report.graphs_scanned = scanned;
  report.candidates_scanned = candidates;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  report.members_total = members.size();
  std::vector<SmallGraph> graphs;
  graphs.reserve(members.size());
  for (const CanonicalForm& f : members) {
    graphs.push_back(f.graph());
    if (canonical_form(complement(graphs.back())) == f) ++report.self_complementary;
  }
  report.representatives = dedup_up_to_complement(graphs);
  report.members = std::move(members);
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace detail

/// Census of the class on n vertices, 1 <= n <= 10, scanning every graph on n vertices.
inline ClassGReport enumerate_class_g(int n, int jobs = 1) {
  const auto start = std::chrono::steady_clock::now();
  jobs = std::max(1, jobs);
  struct Tally {
    std::uint64_t scanned = 0;
    std::uint64_t candidates = 0;
    std::vector<CanonicalForm> members;
  };
  std::vector<Tally> tally(static_cast<std::size_t>(jobs));
  for_each_graph(
      n,
      [&](const SmallGraph& g, int w) {
        Tally& t = tally[w];
        ++t.scanned;
        if (!is_candidate(g)) return;
        ++t.candidates;
        if (in_class_g(g)) t.members.push_back(canonical_form(g));
      },
      jobs);
  Tally total;
  for (Tally& t : tally) {
    total.scanned += t.scanned;
    total.candidates += t.candidates;
    total.members.insert(total.members.end(), t.members.begin(), t.members.end());
  }
  return detail::finish_report(n, total.scanned, total.candidates, std::move(total.members), start);
}

/// Same census over an externally supplied list (e.g. a graph6 stream). Graphs must all have order n;
/// isomorphic duplicates in the input are counted once.
inline ClassGReport enumerate_class_g(int n, std::span<const SmallGraph> graphs) {
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t candidates = 0;
  std::vector<CanonicalForm> members;
  for (const SmallGraph& g : graphs) {
    if (g.order() != n) throw std::invalid_argument("input graph order differs from the requested order");
    if (!is_candidate(g)) continue;
    ++candidates;
    if (in_class_g(g)) members.push_back(canonical_form(g));
  }
  return detail::finish_report(n, graphs.size(), candidates, std::move(members), start);
}

}  // namespace twocograph

#endif  // TWOCOGRAPH_ENUMERATE_HPP
