#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "onefactor/numtheory.hpp"

namespace onefactor {

using Vertex = Int;

// Undirected edge of K_n, stored with the smaller endpoint first.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  // Canonicalizes the endpoint order. Throws std::invalid_argument on a loop.
  static Edge make(Vertex a, Vertex b);

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A (near-)one-factor of K_n. This is a plain record so that externally
// supplied, possibly malformed factors can be represented and then checked
// with validate_factor(); the builders below only ever return valid ones.
struct Factor {
  Int n = 0;
  std::optional<Int> index;       // modular label k, when the factor has one
  std::vector<Edge> edges;        // canonical, sorted
  std::optional<Vertex> isolated; // present iff n is odd

  friend bool operator==(const Factor&, const Factor&) = default;
};

struct Factorization {
  Int n = 0;
  std::vector<Factor> factors;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Outcome of a structural check; `reason` names the first violated invariant.
struct Validity {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
  static Validity valid() { return {}; }
  static Validity invalid(std::string why) { return {false, std::move(why)}; }
};

// F_k on odd n: edges {i, j} with i != j and i + j = k (mod n); the isolated
// vertex is k/2 mod n.
Factor build_modular_factor(Int n, Int k);

// One-factor F_k on even n. Odd k uses the plain sum rule. Even k pairs
// k/2 with (n+k)/2 and applies the sum rule to the remaining vertices.
Factor build_modular_factor_even(Int n, Int k);

// [F_0, ..., F_{n-1}] for odd n.
Factorization build_modular_factorization(Int n);

// (u + v) mod n: the label of the unique modular factor containing `e`.
Residue factor_index_of_edge(Int n, const Edge& e);

Validity validate_factor(const Factor& f);

// Checks every factor, then that the edge sets partition E(K_n); for odd n
// also that there are n factors and each vertex is isolated exactly once.
Validity validate_factorization(const Factorization& fz);

// True when `f` carries an index k and every edge sums to k mod n (odd n).
bool is_modular_factor(const Factor& f);

// mate[v] is v's partner in `f`, or -1 when v is uncovered.
std::vector<Vertex> mates(const Factor& f);

}  // namespace onefactor
