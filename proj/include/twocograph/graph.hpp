// Small simple graphs on at most 32 vertices with bitmask adjacency rows.

#ifndef TWOCOGRAPH_GRAPH_HPP
#define TWOCOGRAPH_GRAPH_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twocograph {

inline constexpr int kMaxVertices = 32;

using Vertex = int;

/// Bitmask over vertex ids; bit v set means v is in the set.
using VertexSet = std::uint32_t;

inline constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }

inline constexpr VertexSet all_vertices(int n) {
  return n >= 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline constexpr int popcount(VertexSet s) { return std::popcount(s); }

inline constexpr Vertex lowest(VertexSet s) { return std::countr_zero(s); }

/// Calls f(v) for every v in s, ascending.
template <typename F>
constexpr void for_each_vertex(VertexSet s, F&& f) {
  while (s != 0) {
    f(lowest(s));
    s &= s - 1;
  }
}

inline std::vector<Vertex> to_vector(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(popcount(s));
  for_each_vertex(s, [&](Vertex v) { out.push_back(v); });
  return out;
}

/// Undirected edge normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

class SmallGraph {
 public:
  SmallGraph() = default;

  /// Edgeless graph on n vertices.
  explicit SmallGraph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
      throw std::invalid_argument("vertex count must be in [0, 32], got " + std::to_string(n));
    }
  }

  /// Builds a graph from explicit rows. Rows must be symmetric, loop-free and confined to 0..n-1.
  static SmallGraph from_rows(int n, std::span<const VertexSet> rows) {
    SmallGraph g(n);
    if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("row count does not match vertex count");
    std::copy(rows.begin(), rows.end(), g.adj_.begin());
    const VertexSet mask = all_vertices(n);
    for (Vertex v = 0; v < n; ++v) {
      if ((g.adj_[v] & ~mask) != 0) throw std::invalid_argument("adjacency row has bits beyond n");
      if ((g.adj_[v] & bit(v)) != 0) throw std::invalid_argument("loop at vertex " + std::to_string(v));
      for_each_vertex(g.adj_[v], [&](Vertex w) {
        if ((g.adj_[w] & bit(v)) == 0) throw std::invalid_argument("adjacency rows are not symmetric");
      });
    }
    return g;
  }

  /// Same as from_rows without validation; for internal producers that maintain the invariants.
  static SmallGraph from_trusted_rows(int n, std::span<const VertexSet> rows) {
    SmallGraph g;
    g.n_ = n;
    std::copy(rows.begin(), rows.begin() + n, g.adj_.begin());
    return g;
  }

  int order() const { return n_; }
  VertexSet vertices() const { return all_vertices(n_); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return popcount(adj_[v]); }
  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] & bit(v)) != 0; }
  std::span<const VertexSet> rows() const { return {adj_.data(), static_cast<std::size_t>(n_)}; }

  int edge_count() const {
    int twice = 0;
    for (Vertex v = 0; v < n_; ++v) twice += popcount(adj_[v]);
    return twice / 2;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
      for_each_vertex(adj_[u] & ~all_vertices(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
    }
    return out;
  }

  int max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  int min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (Vertex v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  bool is_complete() const {
    for (Vertex v = 0; v < n_; ++v) {
      if (adj_[v] != (all_vertices(n_) & ~bit(v))) return false;
    }
    return true;
  }

  /// Mutating helpers for builders; values handed out by the library are never mutated afterwards.
  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  void remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
  }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph on " + std::to_string(n_) +
                              " vertices");
    }
  }

  friend bool operator==(const SmallGraph& a, const SmallGraph& b) {
    return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
  }

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

// ---------------------------------------------------------------- construction

inline SmallGraph from_edge_list(int n, std::span<const Edge> edges) {
  SmallGraph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

inline SmallGraph from_edge_list(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  SmallGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline SmallGraph complete_graph(int n) {
  SmallGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline SmallGraph path_graph(int n) {
  SmallGraph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline SmallGraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  SmallGraph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline SmallGraph complete_bipartite(int a, int b) {
  SmallGraph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

/// Hexagon 0..5 plus the chord 0-3, which splits it into two 4-cycles.
inline SmallGraph c6_plus() {
  SmallGraph g = cycle_graph(6);
  g.add_edge(0, 3);
  return g;
}

// ---------------------------------------------------------------- structural operations

inline SmallGraph complement(const SmallGraph& g) {
  const int n = g.order();
  std::array<VertexSet, kMaxVertices> rows{};
  for (Vertex v = 0; v < n; ++v) rows[v] = ~g.neighbors(v) & all_vertices(n) & ~bit(v);
  return SmallGraph::from_trusted_rows(n, rows);
}

/// Subgraph induced on s; the kept vertices are relabeled 0..|s|-1 in increasing original order.
inline SmallGraph induced_subgraph(const SmallGraph& g, VertexSet s) {
  if ((s & ~g.vertices()) != 0) throw std::out_of_range("vertex set exceeds the graph's vertices");
  std::array<int, kMaxVertices> pos{};
  int k = 0;
  for_each_vertex(s, [&](Vertex v) { pos[v] = k++; });
  SmallGraph out(k);
  for_each_vertex(s, [&](Vertex v) {
    for_each_vertex(g.neighbors(v) & s & ~all_vertices(v + 1), [&](Vertex w) { out.add_edge(pos[v], pos[w]); });
  });
  return out;
}

inline SmallGraph delete_vertex(const SmallGraph& g, Vertex v) {
  g.check_vertex(v);
  return induced_subgraph(g, g.vertices() & ~bit(v));
}

/// Contracts edge e and simplifies. The merged vertex takes slot min(u, v); vertices above max(u, v) shift down.
inline SmallGraph contract_edge(const SmallGraph& g, Edge e) {
  g.check_vertex(e.u);
  g.check_vertex(e.v);
  if (e.u == e.v || !g.adjacent(e.u, e.v)) {
    throw std::invalid_argument("contract_edge: {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                "} is not an edge");
  }
  const int n = g.order();
  auto slot = [&](Vertex w) { return w == e.v ? e.u : (w > e.v ? w - 1 : w); };
  SmallGraph out(n - 1);
  for (Vertex a = 0; a < n; ++a) {
    for_each_vertex(g.neighbors(a) & ~all_vertices(a + 1), [&](Vertex b) {
      const Vertex sa = slot(a);
      const Vertex sb = slot(b);
      if (sa != sb) out.add_edge(sa, sb);
    });
  }
  return out;
}

/// Relabels g so that old vertex v becomes perm[v].
inline SmallGraph permute(const SmallGraph& g, std::span<const Vertex> perm) {
  SmallGraph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

// ---------------------------------------------------------------- connectivity

/// Vertices reachable from start inside the vertex set within, using adjacency rows masked by within.
template <typename Rows>
inline VertexSet reach(const Rows& rows, VertexSet within, Vertex start) {
  VertexSet seen = bit(start);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](Vertex v) { next |= rows[v]; });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline VertexSet component_of(const SmallGraph& g, VertexSet within, Vertex start) {
  return reach(g.rows(), within, start);
}

inline std::vector<VertexSet> components(const SmallGraph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (left != 0) {
    const VertexSet c = component_of(g, within, lowest(left));
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

inline bool is_connected(const SmallGraph& g) {
  if (g.order() <= 1) return true;
  return component_of(g, g.vertices(), 0) == g.vertices();
}

namespace detail {

/// Articulation points of the graph induced on `within` (rows already restricted or not; masked here).
/// Iterative Hopcroft-Tarjan lowpoint DFS over bitmask rows.
template <typename Rows>
VertexSet articulation_points(const Rows& rows, VertexSet within) {
  std::array<int, kMaxVertices> disc{};
  std::array<int, kMaxVertices> low{};
  std::array<Vertex, kMaxVertices> parent{};
  std::array<VertexSet, kMaxVertices> pending{};
  std::array<Vertex, kMaxVertices> stack{};
  VertexSet visited = 0;
  VertexSet cut = 0;
  int time = 0;

  for (VertexSet roots = within; roots != 0; roots &= ~visited) {
    const Vertex root = lowest(roots);
    int root_children = 0;
    int top = 0;
    stack[top++] = root;
    visited |= bit(root);
    disc[root] = low[root] = time++;
    parent[root] = -1;
    pending[root] = rows[root] & within;
    while (top > 0) {
      const Vertex v = stack[top - 1];
      if (pending[v] != 0) {
        const Vertex w = lowest(pending[v]);
        pending[v] &= pending[v] - 1;
        if ((visited & bit(w)) == 0) {
          visited |= bit(w);
          disc[w] = low[w] = time++;
          parent[w] = v;
          pending[w] = rows[w] & within;
          stack[top++] = w;
          if (v == root) ++root_children;
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        --top;
        const Vertex p = parent[v];
        if (p >= 0) {
          low[p] = std::min(low[p], low[v]);
          if (p != root && low[v] >= disc[p]) cut |= bit(p);
        }
      }
    }
    if (root_children > 1) cut |= bit(root);
  }
  return cut;
}

/// 2-connectivity of the graph induced on `within`: at least 3 vertices, connected, no cut vertex.
template <typename Rows>
bool is_2_connected_on(const Rows& rows, VertexSet within) {
  if (popcount(within) < 3) return false;
  if (reach(rows, within, lowest(within)) != within) return false;
  return articulation_points(rows, within) == 0;
}

/// Complemented rows restricted to nothing in particular; callers mask with their vertex set.
inline std::array<VertexSet, kMaxVertices> complement_rows(const SmallGraph& g) {
  std::array<VertexSet, kMaxVertices> rows{};
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = ~g.neighbors(v) & g.vertices() & ~bit(v);
  return rows;
}

}  // namespace detail

inline VertexSet cut_vertices(const SmallGraph& g) { return detail::articulation_points(g.rows(), g.vertices()); }

inline bool is_2_connected(const SmallGraph& g) { return detail::is_2_connected_on(g.rows(), g.vertices()); }

/// True when g is 2-connected and every vertex deletion leaves a 2-connected graph (requires n >= 4).
inline bool is_3_connected(const SmallGraph& g) {
  if (g.order() < 4 || !is_2_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!detail::is_2_connected_on(g.rows(), g.vertices() & ~bit(v))) return false;
  }
  return true;
}

namespace detail {

/// Maximum number of internally vertex-disjoint s-t paths (s, t distinct and non-adjacent),
/// by unit-capacity augmenting paths on the vertex-split network.
inline int local_vertex_connectivity(const SmallGraph& g, Vertex s, Vertex t) {
  const int n = g.order();
  // Node 2v is v_in, 2v+1 is v_out. Arc v_in -> v_out has capacity 1 (infinite for s and t);
  // each edge uv gives u_out -> v_in and v_out -> u_in with capacity 1.
  const int m = 2 * n;
  std::vector<int> cap(static_cast<std::size_t>(m * m), 0);
  auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a * m + b)]; };
  for (Vertex v = 0; v < n; ++v) at(2 * v, 2 * v + 1) = (v == s || v == t) ? n : 1;
  for (const Edge& e : g.edges()) {
    at(2 * e.u + 1, 2 * e.v) = n;
    at(2 * e.v + 1, 2 * e.u) = n;
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> prev(static_cast<std::size_t>(m));
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(m));
  for (;;) {
    std::fill(prev.begin(), prev.end(), -1);
    prev[source] = source;
    queue.assign(1, source);
    for (std::size_t head = 0; head < queue.size() && prev[sink] < 0; ++head) {
      const int a = queue[head];
      for (int b = 0; b < m; ++b) {
        if (prev[b] < 0 && at(a, b) > 0) {
          prev[b] = a;
          queue.push_back(b);
        }
      }
    }
    if (prev[sink] < 0) return flow;
    for (int b = sink; b != source; b = prev[b]) {
      --at(prev[b], b);
      ++at(b, prev[b]);
    }
    ++flow;
  }
}

}  // namespace detail

/// Vertex connectivity with Whitney conventions: kappa(K_n) = n - 1, kappa(K_1) = kappa(K_0) = 0,
/// disconnected graphs have kappa 0. Otherwise the minimum local connectivity over non-adjacent pairs.
inline int vertex_connectivity(const SmallGraph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (g.is_complete()) return n - 1;
  if (!is_connected(g)) return 0;
  int best = g.min_degree();
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      best = std::min(best, detail::local_vertex_connectivity(g, s, t));
      if (best <= 1) return best;
    }
  }
  return best;
}

/// Cheap test for kappa(g) == 2: 2-connected but not 3-connected.
inline bool has_connectivity_two(const SmallGraph& g) { return is_2_connected(g) && !is_3_connected(g); }

inline bool is_contractible_edge(const SmallGraph& g, Edge e) { return is_2_connected(contract_edge(g, e)); }

// ---------------------------------------------------------------- sums and joins

/// Disjoint union; h's vertices are shifted by g.order().
inline SmallGraph zero_sum(const SmallGraph& g, const SmallGraph& h) {
  SmallGraph out(g.order() + h.order());
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) out.add_edge(e.u + g.order(), e.v + g.order());
  return out;
}

/// Disjoint union with hv identified into gv. g keeps its labels; h's other vertices follow in order.
inline SmallGraph one_sum(const SmallGraph& g, const SmallGraph& h, Vertex gv, Vertex hv) {
  g.check_vertex(gv);
  h.check_vertex(hv);
  auto slot = [&](Vertex w) { return w == hv ? gv : g.order() + (w > hv ? w - 1 : w); };
  SmallGraph out(g.order() + h.order() - 1);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) out.add_edge(slot(e.u), slot(e.v));
  return out;
}

inline SmallGraph join(const SmallGraph& g, const SmallGraph& h) {
  SmallGraph out = zero_sum(g, h);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  return out;
}

/// 1-join: every vertex of V(g) - V(h) joined to every vertex of V(h) - V(g). With `shared` the two
/// graphs have one common vertex (g's vertex first, h's second) laid out as in one_sum.
inline SmallGraph one_join(const SmallGraph& g, const SmallGraph& h,
                           std::optional<std::pair<Vertex, Vertex>> shared = std::nullopt) {
  if (!shared) return join(g, h);
  const auto [gv, hv] = *shared;
  SmallGraph out = one_sum(g, h, gv, hv);
  for (Vertex u = 0; u < g.order(); ++u) {
    if (u == gv) continue;
    for (Vertex v = g.order(); v < out.order(); ++v) out.add_edge(u, v);
  }
  return out;
}

}  // namespace twocograph

#endif  // TWOCOGRAPH_GRAPH_HPP
