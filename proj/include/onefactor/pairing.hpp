#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "onefactor/factors.hpp"

namespace onefactor {

// An edge with a direction of travel.
struct OrientedEdge {
  Vertex from = 0;
  Vertex to = 0;

  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

enum class WalkEnd {
  kReachedOtherIsolated,  // odd order: dead end at the other isolated vertex after all n vertices
  kClosedCycle,           // returned to an already visited vertex
  kStoppedEarly,          // dead end before every vertex was visited
};

std::string_view to_string(WalkEnd end);

// Alternating walk through the union of two factors f and g. It always starts
// with a g-edge: from f's isolated vertex for odd order, from vertex 0 for
// even order. In a closed cycle the repeated vertex is appended at the end.
struct UnionWalk {
  Vertex start = 0;
  std::vector<Vertex> vertices;
  WalkEnd end = WalkEnd::kStoppedEarly;

  std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  // 1-based, i in [1, edge_count()]. Odd positions are g-edges.
  OrientedEdge edge(std::size_t i) const;
  std::vector<OrientedEdge> edges() const;
};

struct PairClassification {
  bool perfect = false;
  UnionWalk witness;
  // Set only when both factors are labelled modular factors of odd order.
  std::optional<bool> gcd_perfect;

  bool criterion_agrees() const { return !gcd_perfect || *gcd_perfect == perfect; }
};

// Throws std::invalid_argument for mismatched orders or when f and g are the
// same factor (equal index or equal edge set).
UnionWalk union_walk(const Factor& f, const Factor& g);

// Closed form for the i-th oriented edge of union_walk(F_k, F_l) on odd n.
OrientedEdge nth_union_edge(const Residue& k, const Residue& l, Int i);

// gcd((k - l) mod n, n) == 1. Rejects k == l.
bool is_perfect_by_gcd(const Residue& k, const Residue& l);

// Verdict from traversal; the gcd verdict rides along for comparison only.
PairClassification classify_pair(const Factor& f, const Factor& g);

// Unordered pairs of `fz` classified perfect, i.e. c(F).
Int count_perfect_pairs(const Factorization& fz);

}  // namespace onefactor
