// Acceptance suite: one line per criterion, exit status 1 if any fails.
// All comparisons are exact integer or boolean equality.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "onefactor/equivalence.hpp"
#include "onefactor/oracle.hpp"
#include "onefactor/pairing.hpp"
#include "onefactor/product.hpp"

using namespace onefactor;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(std::string why) {
    if (ok) detail = std::move(why);
    ok = false;
  }
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // 0 = none stated
  std::function<Outcome()> check;
};

Outcome construction_soundness() {
  Outcome o;
  for (Int n = 3; n <= 201 && o.ok; n += 2) {
    const Factorization fz = build_modular_factorization(n);
    for (Int k = 0; k < n; ++k) {
      const Factor& f = fz.factors[static_cast<std::size_t>(k)];
      if (!validate_factor(f)) o.fail("invalid F_" + std::to_string(k) + " on n=" + std::to_string(n));
      if ((2 * *f.isolated) % n != k) o.fail("isolated vertex of F_" + std::to_string(k));
    }
    if (auto v = validate_factorization(fz); !v) o.fail("n=" + std::to_string(n) + ": " + v.reason);
  }
  return o;
}

Outcome perfect_pair_criterion() {
  Outcome o;
  for (Int n = 3; n <= 99 && o.ok; n += 2) {
    const Factorization fz = build_modular_factorization(n);
    for (Int k = 0; k < n; ++k) {
      for (Int l = 0; l < n; ++l) {
        if (k == l) continue;
        const bool traversal = classify_pair(fz.factors[k], fz.factors[l]).perfect;
        if (traversal != (gcd(k - l, n) == 1)) {
          o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " l=" + std::to_string(l));
        }
      }
    }
  }
  return o;
}

Outcome closed_form_walk() {
  Outcome o;
  Int checked = 0;
  for (Int n = 3; n <= 99 && o.ok; n += 2) {
    const Factorization fz = build_modular_factorization(n);
    for (Int k = 0; k < n; ++k) {
      for (Int l = 0; l < n; ++l) {
        if (k == l || gcd(k - l, n) != 1) continue;
        const UnionWalk w = union_walk(fz.factors[k], fz.factors[l]);
        if (static_cast<Int>(w.edge_count()) != n - 1) {
          o.fail("walk length, n=" + std::to_string(n));
          continue;
        }
        for (Int i = 1; i <= n - 1; ++i) {
          ++checked;
          if (!(nth_union_edge(Residue(k, n), Residue(l, n), i) == w.edge(static_cast<std::size_t>(i)))) {
            o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " l=" + std::to_string(l) +
                   " i=" + std::to_string(i));
          }
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " edges";
  return o;
}

Outcome proposition_bound() {
  Outcome o;
  for (Int n = 3; n <= 99; n += 2) {
    const Int c = count_perfect_pairs(build_modular_factorization(n));
    if (c != n * totient(n) / 2) o.fail("n=" + std::to_string(n) + " count " + std::to_string(c));
  }
  for (auto [n, expected] : {std::pair<Int, Int>{5, 10}, {9, 27}, {15, 60}}) {
    if (count_perfect_pairs(build_modular_factorization(n)) != expected) {
      o.fail("spot value n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome product_construction() {
  Outcome o;
  for (Int s = 3; s <= 9; s += 2) {
    for (Int t = 3; t <= 9; t += 2) {
      for (Int k = 0; k < s; ++k) {
        for (Int l = 0; l < t; ++l) {
          const ProductFactor pf = build_product_factor(s, t, k, l);
          if (!validate_factor(flatten(pf))) o.fail("D_{" + std::to_string(k) + "," + std::to_string(l) + "}");
          if ((2 * pf.isolated.i) % s != k || (2 * pf.isolated.j) % t != l) o.fail("isolated vertex");
        }
      }
    }
  }
  return o;
}

Outcome product_criterion() {
  Outcome o;
  for (auto [s, t, expected] : {std::tuple<Int, Int, Int>{3, 5, 60}, {3, 7, 126}, {5, 7, 420}}) {
    std::vector<Factor> flat;
    for (const ProductFactor& pf : build_product_family(s, t)) flat.push_back(flatten(pf));
    Int count = 0;
    for (Int a = 0; a < s * t; ++a) {
      for (Int b = a + 1; b < s * t; ++b) {
        const bool traversal = classify_pair(flat[a], flat[b]).perfect;
        count += traversal ? 1 : 0;
        if (traversal != is_perfect_product_pair(s, t, {a / t, a % t}, {b / t, b % t})) {
          o.fail(std::to_string(s) + "x" + std::to_string(t) + " pair mismatch");
        }
      }
    }
    const Int bound = 2 * (s * totient(s) / 2) * (t * totient(t) / 2);
    if (count != bound || count != expected || count_perfect_product_pairs(s, t) != expected) {
      o.fail(std::to_string(s) + "x" + std::to_string(t) + " count " + std::to_string(count));
    }
  }
  return o;
}

Outcome equivalence() {
  Outcome o;
  for (Int s = 3; s <= 15; s += 2) {
    for (Int t = 3; t <= 15; t += 2) {
      if (gcd(s, t) != 1) continue;
      const EquivalenceReport r = build_equivalence_report(s, t);
      std::set<std::pair<Int, Int>> targets;
      for (const IndexTriple& m : r.index_map) targets.insert({m.k, m.l});
      if (static_cast<Int>(targets.size()) != s * t || static_cast<Int>(r.index_map.size()) != s * t) {
        o.fail("index map not bijective for " + std::to_string(s) + "x" + std::to_string(t));
      }
      for (Int p = 0; p < s * t; ++p) {
        if (!verify_factor_equality(p, s, t)) o.fail("p=" + std::to_string(p));
      }
      if (!r.all_edge_sets_equal || !r.bounds_equal) o.fail("report flags");
    }
  }
  for (Int s = 3; s <= 99; s += 2) {
    for (Int t = 3; t <= 99; t += 2) {
      if (gcd(s, t) != 1) continue;
      const Int n = s * t;
      if (n * totient(n) / 2 != 2 * (s * totient(s) / 2) * (t * totient(t) / 2)) {
        o.fail("bound identity " + std::to_string(s) + "x" + std::to_string(t));
      }
    }
  }
  return o;
}

Outcome oracle_ground_truth() {
  Outcome o;
  for (Int n : {3, 5, 7}) {
    const ExactCResult r = exact_c(n);
    const Int choose2 = n * (n - 1) / 2;
    if (r.exact_c != choose2 || r.exact_c != n * totient(n) / 2) {
      o.fail("exact_c(" + std::to_string(n) + ") = " + std::to_string(r.exact_c));
    }
    Int pairs = 0;
    enumerate_factorizations(n, [&](const Factorization& fz) {
      for (std::size_t a = 0; a < fz.factors.size(); ++a) {
        for (std::size_t b = a + 1; b < fz.factors.size(); ++b) {
          ++pairs;
          if (independent_hamiltonicity_check(fz.factors[a], fz.factors[b]) !=
              classify_pair(fz.factors[a], fz.factors[b]).perfect) {
            o.fail("oracle/traversal disagreement at n=" + std::to_string(n));
          }
        }
      }
    });
    if (o.ok) o.detail += "n=" + std::to_string(n) + ": c=" + std::to_string(r.exact_c) + " over " +
                          std::to_string(r.factorizations_seen) + " factorizations; ";
  }
  return o;
}

Outcome even_order_construction() {
  Outcome o;
  for (Int n = 4; n <= 200; n += 2) {
    for (Int k = 0; k < n; ++k) {
      if (!validate_factor(build_modular_factor_even(n, k))) {
        o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  for (Int n : {4, 6, 8}) {
    for (Int k = 0; k < n; ++k) {
      for (Int l = 0; l < n; ++l) {
        if ((k - l) % 2 == 0) continue;
        try {
          (void)classify_pair(build_modular_factor_even(n, k), build_modular_factor_even(n, l));
        } catch (const std::exception& e) {
          o.fail(std::string("classification threw: ") + e.what());
        }
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "construction soundness, odd n <= 201", 5.0, construction_soundness},
      {2, "perfect-pair criterion, odd n <= 99", 30.0, perfect_pair_criterion},
      {3, "closed-form walk edges, odd n <= 99", 60.0, closed_form_walk},
      {4, "count = n*phi(n)/2, odd n <= 99", 0.0, proposition_bound},
      {5, "product factors valid, odd s,t <= 9", 0.0, product_construction},
      {6, "product criterion and doubling (3,5),(3,7),(5,7)", 0.0, product_criterion},
      {7, "CRT equivalence and bound identity", 0.0, equivalence},
      {8, "oracle exact c(K_n), n in {3,5,7}", 600.0, oracle_ground_truth},
      {9, "even-order construction", 0.0, even_order_construction},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      o.fail("runtime " + std::to_string(secs) + " s exceeds " + std::to_string(c.time_limit_s) + " s");
    }
    if (!o.ok) ++failures;
    std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
