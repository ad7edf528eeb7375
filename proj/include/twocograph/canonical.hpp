// Canonical labeling and isomorphism testing by individualization-refinement.
//
// A partition of the vertices is kept as an ordered list of cells (bitmasks). Refinement splits
// cells by neighbour counts into a splitter cell until the partition is equitable; sub-cells are
// ordered by ascending count and stay inside the range of the cell they came from. The search tree
// individualizes each vertex of the first smallest non-singleton cell in turn. Every discrete leaf
// gives a relabeling; the canonical form is the lexicographically smallest relabeled adjacency.
//
// Pruning uses automorphisms discovered when two leaves produce the same graph: vertices in the
// orbit of an explored sibling (under automorphisms fixing the current prefix) are skipped, and a
// leaf equivalent to the first leaf returns the search to the level where its path left the first path.

#ifndef TWOCOGRAPH_CANONICAL_HPP
#define TWOCOGRAPH_CANONICAL_HPP

#include "twocograph/graph.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace twocograph {

/// Canonically relabeled adjacency. rows[i] holds bit (31 - j) when canonical vertices i and j are
/// adjacent, so comparing rows[0..n) lexicographically as unsigned integers is the same as comparing
/// the row-major upper-triangle bitstring x(0,1) x(0,2) ... x(n-2,n-1) as a big-endian integer.
struct CanonicalForm {
  int n = 0;
  std::array<std::uint32_t, kMaxVertices> rows{};

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    if (a.n != b.n) return false;
    for (int i = 0; i < a.n; ++i)
      if (a.rows[i] != b.rows[i]) return false;
    return true;
  }

  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    for (int i = 0; i < a.n; ++i)
      if (auto c = a.rows[i] <=> b.rows[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  /// Upper-triangle bits, row-major over pairs (i, j) with i < j.
  std::string bitstring() const {
    std::string out;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) out.push_back((rows[i] >> (31 - j)) & 1U ? '1' : '0');
    return out;
  }

  /// The canonically labeled graph itself.
  SmallGraph graph() const {
    std::array<VertexSet, kMaxVertices> adj{};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((rows[i] >> (31 - j)) & 1U) adj[i] |= bit(j);
    return SmallGraph::from_trusted_rows(n, adj);
  }
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(f.n);
    for (int i = 0; i < f.n; ++i) {
      h ^= f.rows[i];
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

using Permutation = std::array<std::uint8_t, kMaxVertices>;

struct CanonicalLabeling {
  CanonicalForm form;
  /// position[v] is the canonical index of input vertex v.
  std::array<Vertex, kMaxVertices> position{};
  /// vertex_at[i] is the input vertex placed at canonical index i.
  std::array<Vertex, kMaxVertices> vertex_at{};
  /// Automorphisms found during the search; they generate a subgroup of Aut(G).
  std::vector<Permutation> automorphisms;
};

namespace detail {

struct OrderedPartition {
  int cells = 0;
  std::array<VertexSet, kMaxVertices> cell{};
};

class Canonizer {
 public:
  /// Runs the search on the graph given by rows[0..n). When `last_cell_member` is non-negative and
  /// that vertex is not in the last cell of the refined unit partition, returns false without
  /// searching (the canonical last vertex always lies in that cell).
  bool run(std::span<const VertexSet> rows, int n, Vertex last_cell_member = -1) {
    rows_ = rows;
    n_ = n;
    have_first_ = false;
    automorphisms_.clear();
    OrderedPartition root;
    if (n == 0) {
      best_.n = 0;
      return true;
    }
    root.cells = 1;
    root.cell[0] = all_vertices(n);
    std::array<bool, kMaxVertices> active{};
    active[0] = true;
    refine(root, active);
    if (last_cell_member >= 0 && (root.cell[root.cells - 1] & bit(last_cell_member)) == 0) return false;
    search(root, 0);
    return true;
  }

  const CanonicalForm& best() const { return best_; }
  const std::array<Vertex, kMaxVertices>& best_labeling() const { return best_lab_; }
  const std::vector<Permutation>& automorphisms() const { return automorphisms_; }

  /// Orbit of v under the automorphisms found so far.
  VertexSet orbit(Vertex v) const { return orbit_under(v, 0); }

 private:
  void refine(OrderedPartition& p, std::array<bool, kMaxVertices>& active) const {
    for (;;) {
      int w = 0;
      while (w < p.cells && !active[w]) ++w;
      if (w == p.cells || p.cells == n_) return;
      active[w] = false;
      const VertexSet splitter = p.cell[w];
      for (int j = 0; j < p.cells; ++j) {
        const VertexSet x = p.cell[j];
        if ((x & (x - 1)) == 0) continue;
        std::array<VertexSet, kMaxVertices + 1> bucket{};
        std::uint64_t used = 0;
        for_each_vertex(x, [&](Vertex v) {
          const int c = popcount(rows_[v] & splitter);
          bucket[c] |= bit(v);
          used |= std::uint64_t{1} << c;
        });
        const int parts = std::popcount(used);
        if (parts == 1) continue;
        for (int k = p.cells - 1; k > j; --k) {
          p.cell[k + parts - 1] = p.cell[k];
          active[k + parts - 1] = active[k];
        }
        int at = j;
        while (used != 0) {
          const int c = std::countr_zero(used);
          used &= used - 1;
          p.cell[at] = bucket[c];
          active[at] = true;
          ++at;
        }
        p.cells += parts - 1;
        j += parts - 1;
      }
    }
  }

  // Closure of {v} under the automorphisms that fix path_[0..depth) pointwise.
  VertexSet orbit_under(Vertex v, int depth) const {
    VertexSet orb = bit(v);
    bool grew = true;
    while (grew) {
      grew = false;
      for (const Permutation& g : automorphisms_) {
        bool fixes = true;
        for (int i = 0; i < depth && fixes; ++i) fixes = g[path_[i]] == path_[i];
        if (!fixes) continue;
        VertexSet img = 0;
        for_each_vertex(orb, [&](Vertex u) { img |= bit(g[u]); });
        if ((img & ~orb) != 0) {
          orb |= img;
          grew = true;
        }
      }
    }
    return orb;
  }

  // Returns the level the search should resume at; a value equal to `depth` means continue here.
  int search(const OrderedPartition& p, int depth) {
    if (p.cells == n_) return leaf(p, depth);
    int target = -1;
    int target_size = kMaxVertices + 1;
    for (int i = 0; i < p.cells; ++i) {
      const int s = popcount(p.cell[i]);
      if (s > 1 && s < target_size) {
        target = i;
        target_size = s;
      }
    }
    VertexSet tried = 0;
    const VertexSet cell = p.cell[target];
    for (VertexSet left = cell; left != 0; left &= left - 1) {
      const Vertex v = lowest(left);
      if (tried != 0 && (orbit_under(v, depth) & tried) != 0) continue;
      tried |= bit(v);
      OrderedPartition child = p;
      std::array<bool, kMaxVertices> active{};
      for (int k = child.cells - 1; k > target; --k) child.cell[k + 1] = child.cell[k];
      child.cell[target] = bit(v);
      child.cell[target + 1] = cell & ~bit(v);
      ++child.cells;
      active[target] = true;
      refine(child, active);
      path_[depth] = v;
      const int resume = search(child, depth + 1);
      if (resume < depth) return resume;
    }
    return depth;
  }

  int leaf(const OrderedPartition& p, int depth) {
    std::array<Vertex, kMaxVertices> lab{};
    std::array<Vertex, kMaxVertices> pos{};
    for (int i = 0; i < n_; ++i) {
      lab[i] = lowest(p.cell[i]);
      pos[lab[i]] = i;
    }
    CanonicalForm form;
    form.n = n_;
    for (int i = 0; i < n_; ++i) {
      std::uint32_t row = 0;
      for_each_vertex(rows_[lab[i]], [&](Vertex w) { row |= std::uint32_t{1} << (31 - pos[w]); });
      form.rows[i] = row;
    }
    if (!have_first_) {
      have_first_ = true;
      first_ = form;
      first_lab_ = lab;
      first_path_ = path_;
      first_depth_ = depth;
      best_ = form;
      best_lab_ = lab;
      return depth;
    }
    if (form == first_) {
      record_automorphism(first_lab_, lab);
      int diverge = 0;
      while (diverge < depth && diverge < first_depth_ && first_path_[diverge] == path_[diverge]) ++diverge;
      return diverge;
    }
    const auto cmp = form <=> best_;
    if (cmp == 0) {
      record_automorphism(best_lab_, lab);
    } else if (cmp < 0) {
      best_ = form;
      best_lab_ = lab;
    }
    return depth;
  }

  void record_automorphism(const std::array<Vertex, kMaxVertices>& from, const std::array<Vertex, kMaxVertices>& to) {
    Permutation g{};
    for (int i = 0; i < kMaxVertices; ++i) g[i] = static_cast<std::uint8_t>(i);
    for (int i = 0; i < n_; ++i) g[from[i]] = static_cast<std::uint8_t>(to[i]);
    automorphisms_.push_back(g);
  }

  std::span<const VertexSet> rows_;
  int n_ = 0;
  bool have_first_ = false;
  int first_depth_ = 0;
  CanonicalForm first_;
  CanonicalForm best_;
  std::array<Vertex, kMaxVertices> first_lab_{};
  std::array<Vertex, kMaxVertices> best_lab_{};
  std::array<Vertex, kMaxVertices> path_{};
  std::array<Vertex, kMaxVertices> first_path_{};
  std::vector<Permutation> automorphisms_;
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const SmallGraph& g) {
  detail::Canonizer c;
  c.run(g.rows(), g.order());
  CanonicalLabeling out;
  out.form = c.best();
  out.automorphisms = c.automorphisms();
  for (int i = 0; i < g.order(); ++i) {
    out.vertex_at[i] = c.best_labeling()[i];
    out.position[out.vertex_at[i]] = i;
  }
  return out;
}

inline CanonicalForm canonical_form(const SmallGraph& g) {
  detail::Canonizer c;
  c.run(g.rows(), g.order());
  return c.best();
}

inline bool are_isomorphic(const SmallGraph& a, const SmallGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

inline bool is_self_complementary(const SmallGraph& g) { return are_isomorphic(g, complement(g)); }

/// Smaller of the canonical forms of g and its complement; shared by g and complement(g).
inline CanonicalForm complement_pair_key(const SmallGraph& g) {
  return std::min(canonical_form(g), canonical_form(complement(g)));
}

}  // namespace twocograph

#endif  // TWOCOGRAPH_CANONICAL_HPP
