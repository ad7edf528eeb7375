// Recognition of cographs, 2-cographs and k-cographs.
//
// A 2-cograph has no induced subgraph H with both H and its complement 2-connected. Equivalently it
// is generated from K1 by complementation, 0-sum and 1-sum; is_2cograph returns such a build tree or
// an induced subgraph witnessing failure.

#ifndef TWOCOGRAPH_RECOGNITION_HPP
#define TWOCOGRAPH_RECOGNITION_HPP

#include "twocograph/graph.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace twocograph {

// ---------------------------------------------------------------- cographs

namespace detail {

inline bool induces_p4(const SmallGraph& g, VertexSet four) {
  int edges = 0;
  int degree_product = 1;
  for_each_vertex(four, [&](Vertex v) {
    const int d = popcount(g.neighbors(v) & four);
    edges += d;
    degree_product *= d;
  });
  // Three edges with degrees {1,1,2,2}; the other 3-edge graphs on four vertices are K3+K1
  // (degree product 0) and the star (product 3).
  return edges == 6 && degree_product == 4;
}

}  // namespace detail

/// No four vertices induce a P4.
inline bool is_cograph(const SmallGraph& g) {
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d)
          if (detail::induces_p4(g, bit(a) | bit(b) | bit(c) | bit(d))) return false;
  return true;
}

namespace detail {

inline bool cograph_recursive(const std::array<std::array<VertexSet, kMaxVertices>, 2>& rows, VertexSet s) {
  if (popcount(s) <= 1) return true;
  for (int side = 0; side < 2; ++side) {
    const VertexSet first = reach(rows[side], s, lowest(s));
    if (first != s) {
      for (VertexSet left = s; left != 0;) {
        const VertexSet comp = reach(rows[side], s, lowest(left));
        if (!cograph_recursive(rows, comp)) return false;
        left &= ~comp;
      }
      return true;
    }
  }
  return false;
}

inline std::array<std::array<VertexSet, kMaxVertices>, 2> both_rows(const SmallGraph& g) {
  std::array<std::array<VertexSet, kMaxVertices>, 2> rows{};
  for (Vertex v = 0; v < g.order(); ++v) {
    rows[0][v] = g.neighbors(v);
    rows[1][v] = ~g.neighbors(v) & g.vertices() & ~bit(v);
  }
  return rows;
}

}  // namespace detail

/// Complementation / 0-sum recursion: split whichever of G and its complement is disconnected.
inline bool is_cograph_recursive(const SmallGraph& g) {
  return detail::cograph_recursive(detail::both_rows(g), g.vertices());
}

// ---------------------------------------------------------------- 2-cographs

/// Build tree over K1 leaves. Nodes live in an arena; children always precede their parent.
struct BuildTree {
  enum class Kind { leaf, complement, zero_sum, one_sum };

  struct Node {
    Kind kind = Kind::leaf;
    int left = -1;   // only child for complement
    int right = -1;
    // one_sum: vertex of the evaluated left graph identified with a vertex of the evaluated right graph
    Vertex left_vertex = -1;
    Vertex right_vertex = -1;
  };

  std::vector<Node> nodes;
  int root = -1;

  int add(Node node) {
    nodes.push_back(node);
    return static_cast<int>(nodes.size()) - 1;
  }
};

/// Support of an induced subgraph H such that H and its complement are both 2-connected.
struct Witness {
  VertexSet support = 0;
};

struct TwoCographResult {
  bool is_2cograph = false;
  BuildTree tree;
  /// labels[i] is the input vertex that becomes vertex i of evaluate_build_tree(tree).
  std::vector<Vertex> labels;
  Witness witness;
};

namespace detail {

class TwoCographDecomposer {
 public:
  explicit TwoCographDecomposer(const SmallGraph& g) : rows_(both_rows(g)) {}

  /// Verdict only. On failure `witness()` holds the offending support.
  bool holds(VertexSet s, int side) {
    if (popcount(s) <= 1) return true;
    const auto& r = rows_[side];
    if (reach(r, s, lowest(s)) != s) {
      for (VertexSet left = s; left != 0;) {
        const VertexSet comp = reach(r, s, lowest(left));
        if (!holds(comp, side)) return false;
        left &= ~comp;
      }
      return true;
    }
    if (const VertexSet cut = articulation_points(r, s); cut != 0) {
      const Vertex v = lowest(cut);
      const VertexSet rest = s & ~bit(v);
      const VertexSet part = reach(r, rest, lowest(rest));
      return holds(part | bit(v), side) && holds(s & ~part, side);
    }
    const auto& rc = rows_[1 - side];
    if (reach(rc, s, lowest(s)) != s || articulation_points(rc, s) != 0) return holds(s, 1 - side);
    witness_ = s;
    return false;
  }

  /// Tree-building variant; returns the node index or -1 on failure.
  int build(VertexSet s, int side, BuildTree& tree, std::vector<Vertex>& labels) {
    if (popcount(s) == 1) {
      labels.push_back(lowest(s));
      return tree.add({BuildTree::Kind::leaf});
    }
    const auto& r = rows_[side];
    if (reach(r, s, lowest(s)) != s) {
      int node = -1;
      for (VertexSet left = s; left != 0;) {
        const VertexSet comp = reach(r, s, lowest(left));
        const int child = build(comp, side, tree, labels);
        if (child < 0) return -1;
        node = node < 0 ? child : tree.add({BuildTree::Kind::zero_sum, node, child});
        left &= ~comp;
      }
      return node;
    }
    if (const VertexSet cut = articulation_points(r, s); cut != 0) {
      const Vertex v = lowest(cut);
      const VertexSet rest = s & ~bit(v);
      const VertexSet part = reach(r, rest, lowest(rest));
      std::vector<Vertex> left_labels;
      std::vector<Vertex> right_labels;
      const int left = build(part | bit(v), side, tree, left_labels);
      if (left < 0) return -1;
      const int right = build(s & ~part, side, tree, right_labels);
      if (right < 0) return -1;
      const auto index_of = [v](const std::vector<Vertex>& l) {
        return static_cast<Vertex>(std::find(l.begin(), l.end(), v) - l.begin());
      };
      BuildTree::Node node{BuildTree::Kind::one_sum, left, right, index_of(left_labels), index_of(right_labels)};
      labels.insert(labels.end(), left_labels.begin(), left_labels.end());
      for (Vertex w : right_labels)
        if (w != v) labels.push_back(w);
      return tree.add(node);
    }
    const auto& rc = rows_[1 - side];
    if (reach(rc, s, lowest(s)) != s || articulation_points(rc, s) != 0) {
      const int child = build(s, 1 - side, tree, labels);
      if (child < 0) return -1;
      return tree.add({BuildTree::Kind::complement, child});
    }
    witness_ = s;
    return -1;
  }

  VertexSet witness() const { return witness_; }

 private:
  std::array<std::array<VertexSet, kMaxVertices>, 2> rows_;
  VertexSet witness_ = 0;
};

}  // namespace detail

/// Verdict only, without building a certificate.
inline bool is_2cograph_verdict(const SmallGraph& g) {
  if (g.order() == 0) return true;
  detail::TwoCographDecomposer d(g);
  return d.holds(g.vertices(), 0);
}

/// Decomposes g by 0-sums at disconnections, 1-sums at the lowest cut vertex and complementation
/// when the complement splits. Fails exactly when some reached subgraph and its complement are both
/// 2-connected; that subgraph's vertex set is the witness.
inline TwoCographResult is_2cograph(const SmallGraph& g) {
  TwoCographResult result;
  if (g.order() == 0) {
    result.is_2cograph = true;
    return result;
  }
  detail::TwoCographDecomposer d(g);
  const int root = d.build(g.vertices(), 0, result.tree, result.labels);
  if (root < 0) {
    result.tree = {};
    result.labels.clear();
    result.witness.support = d.witness();
    return result;
  }
  result.is_2cograph = true;
  result.tree.root = root;
  return result;
}

/// Literal definition: scans every vertex subset for a doubly 2-connected induced subgraph.
inline bool is_2cograph_oracle(const SmallGraph& g) {
  const int n = g.order();
  if (n > 20) throw std::invalid_argument("is_2cograph_oracle supports at most 20 vertices");
  const auto rows = detail::both_rows(g);
  for (VertexSet s = 1; s <= all_vertices(n) && s != 0; ++s) {
    if (popcount(s) < 3) continue;
    if (detail::is_2_connected_on(rows[0], s) && detail::is_2_connected_on(rows[1], s)) return false;
  }
  return true;
}

inline SmallGraph evaluate_build_tree(const BuildTree& tree, int node) {
  if (node < 0 || node >= static_cast<int>(tree.nodes.size())) throw std::invalid_argument("malformed build tree");
  const BuildTree::Node& x = tree.nodes[node];
  switch (x.kind) {
    case BuildTree::Kind::leaf:
      return SmallGraph(1);
    case BuildTree::Kind::complement:
      return complement(evaluate_build_tree(tree, x.left));
    case BuildTree::Kind::zero_sum:
      return zero_sum(evaluate_build_tree(tree, x.left), evaluate_build_tree(tree, x.right));
    case BuildTree::Kind::one_sum: {
      const SmallGraph l = evaluate_build_tree(tree, x.left);
      const SmallGraph r = evaluate_build_tree(tree, x.right);
      if (x.left_vertex < 0 || x.left_vertex >= l.order() || x.right_vertex < 0 || x.right_vertex >= r.order()) {
        throw std::invalid_argument("build tree 1-sum identifies a vertex out of range");
      }
      return one_sum(l, r, x.left_vertex, x.right_vertex);
    }
  }
  throw std::invalid_argument("malformed build tree");
}

inline SmallGraph evaluate_build_tree(const BuildTree& tree) { return evaluate_build_tree(tree, tree.root); }

namespace detail {

inline void write_tree(std::ostream& os, const BuildTree& tree, int node) {
  const BuildTree::Node& x = tree.nodes[node];
  switch (x.kind) {
    case BuildTree::Kind::leaf:
      os << "K1";
      return;
    case BuildTree::Kind::complement:
      os << "(complement ";
      write_tree(os, tree, x.left);
      os << ')';
      return;
    case BuildTree::Kind::zero_sum:
      os << "(0-sum ";
      write_tree(os, tree, x.left);
      os << ' ';
      write_tree(os, tree, x.right);
      os << ')';
      return;
    case BuildTree::Kind::one_sum:
      os << "(1-sum " << x.left_vertex << ' ' << x.right_vertex << ' ';
      write_tree(os, tree, x.left);
      os << ' ';
      write_tree(os, tree, x.right);
      os << ')';
      return;
  }
}

}  // namespace detail

/// S-expression such as "(1-sum 1 0 (complement (0-sum K1 K1)) K1)".
inline std::string to_sexpr(const BuildTree& tree) {
  if (tree.root < 0) return "()";
  std::ostringstream os;
  detail::write_tree(os, tree, tree.root);
  return os.str();
}

// ---------------------------------------------------------------- k-cographs

/// For every induced subgraph H, H or its complement is not k-connected. Brute force over subsets.
inline bool is_k_cograph(const SmallGraph& g, int k) {
  const int n = g.order();
  if (k < 2) throw std::invalid_argument("is_k_cograph needs k >= 2");
  if (n > 20) throw std::invalid_argument("is_k_cograph supports at most 20 vertices");
  for (VertexSet s = 1; s <= all_vertices(n) && s != 0; ++s) {
    const int size = popcount(s);
    // kappa(H) >= k needs more than k vertices, and both H and its complement need min degree >= k.
    if (size < 2 * k + 1) continue;
    bool degrees_ok = true;
    for_each_vertex(s, [&](Vertex v) {
      const int d = popcount(g.neighbors(v) & s);
      if (d < k || size - 1 - d < k) degrees_ok = false;
    });
    if (!degrees_ok) continue;
    const SmallGraph h = induced_subgraph(g, s);
    if (vertex_connectivity(h) >= k && vertex_connectivity(complement(h)) >= k) return false;
  }
  return true;
}

// ---------------------------------------------------------------- complete bipartite subgraphs

/// Disjoint non-empty A, B with |A| + |B| >= n - 1 and every A-B pair adjacent (not necessarily induced).
/// Scans every A; the largest compatible B is the common neighbourhood of A minus A.
inline bool has_large_complete_bipartite_subgraph(const SmallGraph& g) {
  const int n = g.order();
  if (n > 16) throw std::invalid_argument("has_large_complete_bipartite_subgraph supports at most 16 vertices");
  if (n < 2) return false;
  const VertexSet all = g.vertices();
  for (VertexSet a = 1; a < all; ++a) {
    VertexSet common = all;
    for_each_vertex(a, [&](Vertex v) { common &= g.neighbors(v); });
    const VertexSet b = common & ~a;
    if (b != 0 && popcount(a) + popcount(b) >= n - 1) return true;
  }
  return false;
}

}  // namespace twocograph

#endif  // TWOCOGRAPH_RECOGNITION_HPP
