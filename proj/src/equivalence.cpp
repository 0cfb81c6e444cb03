#include "onefactor/equivalence.hpp"

#include <algorithm>
#include <stdexcept>

namespace onefactor {
namespace {

void require_coprime(Int s, Int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("moduli must be positive");
  if (gcd(s, t) != 1) {
    throw std::domain_error("moduli not coprime: gcd(" + std::to_string(s) + ", " +
                            std::to_string(t) + ") = " + std::to_string(gcd(s, t)));
  }
}

void require_odd(Int s, Int t) {
  for (Int m : {s, t}) {
    if (m < 3 || m % 2 == 0) {
      throw std::invalid_argument("moduli must be odd and >= 3, got " + std::to_string(m));
    }
  }
}

}  // namespace

PairVertex crt_vertex_map(Int v, Int s, Int t) {
  require_coprime(s, t);
  if (v < 0 || v >= s * t) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  }
  return {v % s, v % t};
}

std::pair<Residue, Residue> map_factor_index(Int p, Int s, Int t) {
  require_coprime(s, t);
  return {Residue(p, s), Residue(p, t)};
}

bool verify_factor_equality(Int p, Int s, Int t) {
  require_odd(s, t);
  require_coprime(s, t);
  const Factor direct = build_modular_factor(s * t, p);
  const auto [k, l] = map_factor_index(p, s, t);
  const ProductFactor product = build_product_factor(s, t, k.value(), l.value());

  std::vector<PairEdge> mapped;
  mapped.reserve(direct.edges.size());
  for (const Edge& e : direct.edges) {
    PairVertex a = crt_vertex_map(e.u, s, t);
    PairVertex b = crt_vertex_map(e.v, s, t);
    if (b < a) std::swap(a, b);
    mapped.push_back({a, b});
  }
  std::ranges::sort(mapped);
  return mapped == product.edges && crt_vertex_map(*direct.isolated, s, t) == product.isolated;
}

EquivalenceReport build_equivalence_report(Int s, Int t) {
  require_odd(s, t);
  require_coprime(s, t);
  EquivalenceReport report;
  report.s = s;
  report.t = t;
  report.n = s * t;
  for (Int p = 0; p < report.n; ++p) {
    const auto [k, l] = map_factor_index(p, s, t);
    report.index_map.push_back({p, k.value(), l.value()});
    if (!verify_factor_equality(p, s, t)) report.failures.push_back(p);
  }
  report.all_edge_sets_equal = report.failures.empty();
  report.direct_bound = report.n * totient(report.n) / 2;
  report.product_bound = 2 * (s * totient(s) / 2) * (t * totient(t) / 2);
  report.bounds_equal = report.direct_bound == report.product_bound;
  return report;
}

}  // namespace onefactor
