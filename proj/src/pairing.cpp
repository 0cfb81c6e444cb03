#include "onefactor/pairing.hpp"

#include <stdexcept>

namespace onefactor {
namespace {

bool same_factor(const Factor& f, const Factor& g) {
  if (f.index && g.index) return *f.index == *g.index;
  return f.edges == g.edges;
}

void require_pair(const Factor& f, const Factor& g) {
  if (f.n != g.n) {
    throw std::invalid_argument("factors have different orders: " + std::to_string(f.n) +
                                " and " + std::to_string(g.n));
  }
  if (f.n < 3) throw std::invalid_argument("graph order must be >= 3");
  if (same_factor(f, g)) throw std::invalid_argument("a factor cannot be paired with itself");
}

}  // namespace

std::string_view to_string(WalkEnd end) {
  switch (end) {
    case WalkEnd::kReachedOtherIsolated:
      return "reached-other-isolated";
    case WalkEnd::kClosedCycle:
      return "closed-cycle";
    case WalkEnd::kStoppedEarly:
      return "stopped-early";
  }
  return "unknown";
}

OrientedEdge UnionWalk::edge(std::size_t i) const {
  if (i < 1 || i > edge_count()) {
    throw std::out_of_range("walk edge position " + std::to_string(i) + " out of range");
  }
  return {vertices[i - 1], vertices[i]};
}

std::vector<OrientedEdge> UnionWalk::edges() const {
  std::vector<OrientedEdge> out;
  for (std::size_t i = 1; i <= edge_count(); ++i) out.push_back(edge(i));
  return out;
}

UnionWalk union_walk(const Factor& f, const Factor& g) {
  require_pair(f, g);
  const Int n = f.n;
  const bool odd = n % 2 == 1;
  if (odd && (!f.isolated || !g.isolated)) {
    throw std::invalid_argument("odd-order factors need isolated vertices");
  }
  const std::vector<Vertex> f_mate = mates(f);
  const std::vector<Vertex> g_mate = mates(g);

  UnionWalk walk;
  walk.start = odd ? *f.isolated : 0;
  walk.vertices.push_back(walk.start);
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  visited[static_cast<std::size_t>(walk.start)] = true;

  Vertex cur = walk.start;
  bool use_g = true;
  for (;;) {
    const Vertex next = (use_g ? g_mate : f_mate)[static_cast<std::size_t>(cur)];
    if (next < 0) {
      const bool complete = static_cast<Int>(walk.vertices.size()) == n;
      walk.end = odd && complete && cur == *g.isolated ? WalkEnd::kReachedOtherIsolated
                                                       : WalkEnd::kStoppedEarly;
      return walk;
    }
    walk.vertices.push_back(next);
    if (visited[static_cast<std::size_t>(next)]) {
      walk.end = WalkEnd::kClosedCycle;
      return walk;
    }
    visited[static_cast<std::size_t>(next)] = true;
    cur = next;
    use_g = !use_g;
  }
}

OrientedEdge nth_union_edge(const Residue& k, const Residue& l, Int i) {
  const Int n = k.modulus();
  if (l.modulus() != n) throw std::invalid_argument("indices have different moduli");
  if (k == l) throw std::invalid_argument("nth_union_edge requires k != l");
  if (i < 1 || i > n - 1) {
    throw std::invalid_argument("edge position " + std::to_string(i) + " outside [1, " +
                                std::to_string(n - 1) + "]");
  }
  const Residue k_half = half_mod(k);
  const Residue l_half = half_mod(l);
  auto times = [n](Int c, const Residue& r) { return Residue(c, n) * r; };
  if (i % 2 == 1) {
    // (ik/2 - (i-1)l/2, (i+1)l/2 - ik/2)
    return {(times(i, k_half) - times(i - 1, l_half)).value(),
            (times(i + 1, l_half) - times(i, k_half)).value()};
  }
  // (il/2 - (i-1)k/2, (i+1)k/2 - il/2)
  return {(times(i, l_half) - times(i - 1, k_half)).value(),
          (times(i + 1, k_half) - times(i, l_half)).value()};
}

bool is_perfect_by_gcd(const Residue& k, const Residue& l) {
  if (k.modulus() != l.modulus()) throw std::invalid_argument("indices have different moduli");
  if (k == l) throw std::invalid_argument("is_perfect_by_gcd requires k != l");
  return gcd((k - l).value(), k.modulus()) == 1;
}

PairClassification classify_pair(const Factor& f, const Factor& g) {
  PairClassification result;
  result.witness = union_walk(f, g);
  const auto n = static_cast<std::size_t>(f.n);
  if (f.n % 2 == 1) {
    result.perfect = result.witness.end == WalkEnd::kReachedOtherIsolated;
  } else {
    // A Hamiltonian cycle returns to its start after visiting all n vertices.
    result.perfect = result.witness.end == WalkEnd::kClosedCycle &&
                     result.witness.vertices.size() == n + 1 &&
                     result.witness.vertices.back() == result.witness.start;
  }
  if (is_modular_factor(f) && is_modular_factor(g)) {
    result.gcd_perfect = is_perfect_by_gcd(Residue(*f.index, f.n), Residue(*g.index, g.n));
  }
  return result;
}

Int count_perfect_pairs(const Factorization& fz) {
  Int count = 0;
  for (std::size_t a = 0; a < fz.factors.size(); ++a) {
    for (std::size_t b = a + 1; b < fz.factors.size(); ++b) {
      if (classify_pair(fz.factors[a], fz.factors[b]).perfect) ++count;
    }
  }
  return count;
}

}  // namespace onefactor
