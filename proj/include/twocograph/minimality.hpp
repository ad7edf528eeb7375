// Induced-minor-minimal non-2-cographs and the class of graphs that are minimal together with their
// complements.

#ifndef TWOCOGRAPH_MINIMALITY_HPP
#define TWOCOGRAPH_MINIMALITY_HPP

#include "twocograph/canonical.hpp"
#include "twocograph/graph.hpp"
#include "twocograph/recognition.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace twocograph {

struct Reduction {
  enum class Kind { delete_vertex, contract_edge };
  Kind kind = Kind::delete_vertex;
  Vertex vertex = -1;  // delete_vertex
  Edge edge;           // contract_edge

  friend bool operator==(const Reduction&, const Reduction&) = default;
};

inline std::string to_string(const Reduction& r) {
  if (r.kind == Reduction::Kind::delete_vertex) return "delete " + std::to_string(r.vertex);
  return "contract " + std::to_string(r.edge.u) + "-" + std::to_string(r.edge.v);
}

struct MinimalityVerdict {
  enum class Reason { not_a_non_2cograph, reducible, minimal };

  bool is_minimal = false;
  Reason reason = Reason::not_a_non_2cograph;
  /// First single-step reduction that is still a non-2-cograph; set exactly when reason == reducible.
  std::optional<Reduction> failing_reduction;
};

inline const char* to_string(MinimalityVerdict::Reason r) {
  switch (r) {
    case MinimalityVerdict::Reason::not_a_non_2cograph:
      return "2-cograph";
    case MinimalityVerdict::Reason::reducible:
      return "reducible";
    case MinimalityVerdict::Reason::minimal:
      return "minimal";
  }
  return "?";
}

/// Since 2-cographs are closed under vertex deletion and edge contraction, a non-2-cograph is
/// minimal as soon as every single deletion and every single contraction gives a 2-cograph.
/// Reductions are scanned vertices ascending, then edges lexicographically.
inline MinimalityVerdict is_minimal_non_2cograph(const SmallGraph& g) {
  if (g.order() > 16) throw std::invalid_argument("is_minimal_non_2cograph supports at most 16 vertices");
  MinimalityVerdict verdict;
  detail::TwoCographDecomposer whole(g);
  if (g.order() == 0 || whole.holds(g.vertices(), 0)) return verdict;
  verdict.reason = MinimalityVerdict::Reason::reducible;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!whole.holds(g.vertices() & ~bit(v), 0)) {
      verdict.failing_reduction = Reduction{Reduction::Kind::delete_vertex, v, {}};
      return verdict;
    }
  }
  for (const Edge& e : g.edges()) {
    if (!is_2cograph_verdict(contract_edge(g, e))) {
      verdict.failing_reduction = Reduction{Reduction::Kind::contract_edge, -1, e};
      return verdict;
    }
  }
  verdict.is_minimal = true;
  verdict.reason = MinimalityVerdict::Reason::minimal;
  return verdict;
}

inline bool in_class_g(const SmallGraph& g) {
  return is_minimal_non_2cograph(g).is_minimal && is_minimal_non_2cograph(complement(g)).is_minimal;
}

inline bool is_critically_2_connected(const SmallGraph& g) {
  if (!is_2_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (detail::is_2_connected_on(g.rows(), g.vertices() & ~bit(v))) return false;
  }
  return true;
}

/// Contracts the edges one after another, following each through the relabeling; an edge whose
/// endpoints have already been merged is skipped.
inline SmallGraph contract_edges(const SmallGraph& g, std::span<const Edge> edges) {
  SmallGraph current = g;
  std::vector<Vertex> where(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) where[v] = v;
  for (const Edge& original : edges) {
    const Edge e(where[original.u], where[original.v]);
    if (e.u == e.v) continue;
    current = contract_edge(current, e);
    for (Vertex& w : where) w = (w == e.v) ? e.u : (w > e.v ? w - 1 : w);
  }
  return current;
}

struct InducedMinor {
  CanonicalForm form;
  bool proper = true;
};

/// Every induced minor of g (g itself included, flagged non-proper), one per isomorphism class,
/// found breadth-first over single deletions and contractions. Sorted by canonical form.
inline std::vector<InducedMinor> induced_minor_closure(const SmallGraph& g) {
  if (g.order() > 10) throw std::invalid_argument("induced_minor_closure supports at most 10 vertices");
  std::map<CanonicalForm, bool> seen;
  std::deque<SmallGraph> queue;
  seen.emplace(canonical_form(g), false);
  queue.push_back(g);
  auto visit = [&](const SmallGraph& h) {
    if (seen.emplace(canonical_form(h), true).second) queue.push_back(h);
  };
  while (!queue.empty()) {
    const SmallGraph h = queue.front();
    queue.pop_front();
    if (h.order() <= 1) continue;
    for (Vertex v = 0; v < h.order(); ++v) visit(delete_vertex(h, v));
    for (const Edge& e : h.edges()) visit(contract_edge(h, e));
  }
  std::vector<InducedMinor> out;
  out.reserve(seen.size());
  for (const auto& [form, proper] : seen) out.push_back({form, proper});
  return out;
}

/// Minimality read straight off the closure with the subset-scan recognizer: g is not a 2-cograph
/// and every proper induced minor is.
inline bool is_minimal_non_2cograph_by_closure(const SmallGraph& g) {
  if (is_2cograph_oracle(g)) return false;
  for (const InducedMinor& m : induced_minor_closure(g)) {
    if (m.proper && !is_2cograph_oracle(m.form.graph())) return false;
  }
  return true;
}

}  // namespace twocograph

#endif  // TWOCOGRAPH_MINIMALITY_HPP
