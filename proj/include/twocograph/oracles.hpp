// Brute-force reference implementations for cross-checking on small orders.
// Every routine here works from definitions (all permutations, all vertex subsets) and shares no code
// with the search-based implementations beyond the graph value type.

#ifndef TWOCOGRAPH_ORACLES_HPP
#define TWOCOGRAPH_ORACLES_HPP

#include "twocograph/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace twocograph::oracle {

/// Upper-triangle code: bit k stands for the k-th pair (i, j), i < j, in row-major order.
inline std::uint64_t edge_code(const SmallGraph& g, std::span<const int> perm) {
  const int n = g.order();
  std::uint64_t code = 0;
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k) {
      // position i of the relabeled graph holds vertex perm[i]
      if (g.adjacent(perm[i], perm[j])) code |= std::uint64_t{1} << k;
    }
  return code;
}

inline SmallGraph from_code(int n, std::uint64_t code) {
  SmallGraph g(n);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if ((code >> k) & 1U) g.add_edge(i, j);
  return g;
}

/// Minimum code over all n! relabelings.
inline std::uint64_t min_code(const SmallGraph& g) {
  if (g.order() > 8) throw std::invalid_argument("oracle::min_code supports at most 8 vertices");
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, edge_code(g, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic(const SmallGraph& a, const SmallGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return min_code(a) == min_code(b);
}

/// One labeled representative (the first code found) per isomorphism class on n <= 7 vertices,
/// by marking every relabeling of each new graph in a table over all 2^(n choose 2) labeled graphs.
inline std::vector<SmallGraph> isomorphism_class_representatives(int n) {
  if (n < 0 || n > 7) throw std::invalid_argument("oracle::isomorphism_class_representatives supports n <= 7");
  const int pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  std::vector<bool> marked(total, false);
  std::vector<SmallGraph> reps;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (std::uint64_t code = 0; code < total; ++code) {
    if (marked[code]) continue;
    const SmallGraph g = from_code(n, code);
    reps.push_back(g);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      marked[edge_code(g, perm)] = true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return reps;
}

inline bool connected_after_removing(const SmallGraph& g, VertexSet removed) {
  const VertexSet keep = g.vertices() & ~removed;
  if (popcount(keep) <= 1) return true;
  VertexSet seen = bit(lowest(keep));
  for (bool grew = true; grew;) {
    grew = false;
    for (Vertex v = 0; v < g.order(); ++v) {
      if ((seen & bit(v)) != 0 && (g.neighbors(v) & keep & ~seen) != 0) {
        seen |= g.neighbors(v) & keep;
        grew = true;
      }
    }
  }
  return seen == keep;
}

/// Smallest t such that removing some t vertices disconnects g or leaves fewer than two vertices.
inline int vertex_connectivity(const SmallGraph& g) {
  const int n = g.order();
  if (n > 20) throw std::invalid_argument("oracle::vertex_connectivity supports at most 20 vertices");
  for (int t = 0; t <= n; ++t) {
    for (VertexSet s = 0; s <= all_vertices(n); ++s) {
      if (popcount(s) == t && (n - t < 2 || !connected_after_removing(g, s))) return t;
      if (s == all_vertices(n)) break;
    }
  }
  return n;
}

}  // namespace twocograph::oracle

#endif  // TWOCOGRAPH_ORACLES_HPP
