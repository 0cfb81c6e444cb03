#include "onefactor/product.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "onefactor/pairing.hpp"

namespace onefactor {
namespace {

void require_odd_order(Int m, const char* name) {
  if (m < 3 || m % 2 == 0) {
    throw std::invalid_argument(std::string(name) + " must be odd and >= 3, got " +
                                std::to_string(m));
  }
}

}  // namespace

Vertex flatten_positional(const PairVertex& v, Int t) { return v.i * t + v.j; }

PairVertex unflatten_positional(Vertex v, Int t) { return {v / t, v % t}; }

ProductFactor build_product_factor(Int s, Int t, Int k, Int l) {
  require_odd_order(s, "s");
  require_odd_order(t, "t");
  if (k < 0 || k >= s || l < 0 || l >= t) {
    throw std::invalid_argument("product index (" + std::to_string(k) + ", " + std::to_string(l) +
                                ") out of range");
  }
  ProductFactor pf{s, t, k, l, {}, {}};
  pf.isolated = {half_mod(Residue(k, s)).value(), half_mod(Residue(l, t)).value()};
  pf.edges.reserve(static_cast<std::size_t>((s * t) / 2));
  for (Int i = 0; i < s; ++i) {
    for (Int j = 0; j < t; ++j) {
      const PairVertex here{i, j};
      const PairVertex partner{Residue(k - i, s).value(), Residue(l - j, t).value()};
      if (here < partner) pf.edges.push_back({here, partner});
    }
  }
  std::ranges::sort(pf.edges);
  return pf;
}

Factor flatten(const ProductFactor& pf) {
  Factor f;
  f.n = pf.s * pf.t;
  f.isolated = flatten_positional(pf.isolated, pf.t);
  f.edges.reserve(pf.edges.size());
  for (const PairEdge& e : pf.edges) {
    f.edges.push_back(Edge::make(flatten_positional(e.a, pf.t), flatten_positional(e.b, pf.t)));
  }
  std::ranges::sort(f.edges);
  return f;
}

bool is_perfect_product_pair(Int s, Int t, std::pair<Int, Int> first, std::pair<Int, Int> second) {
  if (first == second) {
    throw std::invalid_argument("is_perfect_product_pair requires distinct index pairs");
  }
  return gcd(first.first - second.first, s) == 1 && gcd(first.second - second.second, t) == 1;
}

Int product_bound(Int /*s*/, Int /*t*/, Int c_s, Int c_t) {
  if (c_s < 0 || c_t < 0) throw std::invalid_argument("perfect-pair counts must be >= 0");
  return 2 * c_s * c_t;
}

std::vector<ProductFactor> build_product_family(Int s, Int t) {
  std::vector<ProductFactor> family;
  family.reserve(static_cast<std::size_t>(s * t));
  for (Int k = 0; k < s; ++k) {
    for (Int l = 0; l < t; ++l) family.push_back(build_product_factor(s, t, k, l));
  }
  return family;
}

Int count_perfect_product_pairs(Int s, Int t) {
  std::vector<Factor> flat;
  for (const ProductFactor& pf : build_product_family(s, t)) flat.push_back(flatten(pf));
  Int count = 0;
  for (std::size_t a = 0; a < flat.size(); ++a) {
    for (std::size_t b = a + 1; b < flat.size(); ++b) {
      if (classify_pair(flat[a], flat[b]).perfect) ++count;
    }
  }
  return count;
}

Int predicted_perfect_product_pairs(Int s, Int t) {
  require_odd_order(s, "s");
  require_odd_order(t, "t");
  Int count = 0;
  for (Int p = 0; p < s * t; ++p) {
    for (Int q = p + 1; q < s * t; ++q) {
      if (is_perfect_product_pair(s, t, {p / t, p % t}, {q / t, q % t})) ++count;
    }
  }
  return count;
}

}  // namespace onefactor
