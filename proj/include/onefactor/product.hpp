#pragma once

#include <utility>
#include <vector>

#include "onefactor/factors.hpp"

namespace onefactor {

// Vertex (i, j) of the product of K_s and K_t.
struct PairVertex {
  Int i = 0;
  Int j = 0;

  friend bool operator==(const PairVertex&, const PairVertex&) = default;
  friend auto operator<=>(const PairVertex&, const PairVertex&) = default;
};

struct PairEdge {
  PairVertex a;
  PairVertex b;  // a < b

  friend bool operator==(const PairEdge&, const PairEdge&) = default;
  friend auto operator<=>(const PairEdge&, const PairEdge&) = default;
};

// D_{k,l}: the tensor product G_k x H_l of modular near-one-factors of K_s and
// K_t, viewed as a near-one-factor of K_{st}.
struct ProductFactor {
  Int s = 0;
  Int t = 0;
  Int k = 0;
  Int l = 0;
  std::vector<PairEdge> edges;  // sorted
  PairVertex isolated;

  friend bool operator==(const ProductFactor&, const ProductFactor&) = default;
};

// Positional flattening (i, j) -> i*t + j and its inverse.
Vertex flatten_positional(const PairVertex& v, Int t);
PairVertex unflatten_positional(Vertex v, Int t);

// Edges {(i,j),(i',j')} with (i,j) != (i',j'), i+i' = k (mod s) and
// j+j' = l (mod t). s and t must be odd and >= 3; coprimality is not needed.
ProductFactor build_product_factor(Int s, Int t, Int k, Int l);

// The same factor as a Factor on K_{st} under positional flattening.
// The result carries no modular index.
Factor flatten(const ProductFactor& pf);

// gcd(k - k', s) == 1 and gcd(l - l', t) == 1. Rejects identical index pairs.
bool is_perfect_product_pair(Int s, Int t, std::pair<Int, Int> first, std::pair<Int, Int> second);

// 2 * c_s * c_t.
Int product_bound(Int s, Int t, Int c_s, Int c_t);

// All st product factors, ordered by (k, l).
std::vector<ProductFactor> build_product_family(Int s, Int t);

// Unordered pairs of the D-family that traversal on K_{st} finds perfect.
Int count_perfect_product_pairs(Int s, Int t);

// Unordered pairs of the D-family that satisfy is_perfect_product_pair.
Int predicted_perfect_product_pairs(Int s, Int t);

}  // namespace onefactor
