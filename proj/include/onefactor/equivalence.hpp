#pragma once

#include <utility>
#include <vector>

#include "onefactor/product.hpp"

namespace onefactor {

struct IndexTriple {
  Int p = 0;
  Int k = 0;
  Int l = 0;

  friend bool operator==(const IndexTriple&, const IndexTriple&) = default;
};

// Matching of {A_p} on K_n with {D_{k,l}} on K_s x K_t, n = s*t, together with
// the two perfect-pair lower bounds n*phi(n)/2 and 2*(s*phi(s)/2)*(t*phi(t)/2).
struct EquivalenceReport {
  Int s = 0;
  Int t = 0;
  Int n = 0;
  std::vector<IndexTriple> index_map;
  bool all_edge_sets_equal = false;
  Int direct_bound = 0;
  Int product_bound = 0;
  bool bounds_equal = false;
  std::vector<Int> failures;  // p values whose factors did not match

  friend bool operator==(const EquivalenceReport&, const EquivalenceReport&) = default;
};

// v -> (v mod s, v mod t). Throws std::domain_error for non-coprime s, t.
PairVertex crt_vertex_map(Int v, Int s, Int t);

// p -> (p mod s, p mod t). Throws std::domain_error for non-coprime s, t.
std::pair<Residue, Residue> map_factor_index(Int p, Int s, Int t);

// A_p, with vertices carried through crt_vertex_map, has exactly the edges and
// isolated vertex of D_{p mod s, p mod t}.
bool verify_factor_equality(Int p, Int s, Int t);

// Always returns a report; mismatching p values are listed in `failures`.
EquivalenceReport build_equivalence_report(Int s, Int t);

}  // namespace onefactor
