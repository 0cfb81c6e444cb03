#include "onefactor/factors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace onefactor {
namespace {

void require_order(Int n) {
  if (n < 3) {
    throw std::invalid_argument("graph order must be >= 3, got " + std::to_string(n));
  }
}

void require_index(Int n, Int k) {
  if (k < 0 || k >= n) {
    throw std::invalid_argument("factor index " + std::to_string(k) + " out of range [0, " +
                                std::to_string(n) + ")");
  }
}

std::string brace_list(const std::vector<Vertex>& vs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
  os << '}';
  return os.str();
}

// Pairs {i, (k - i) mod n} for every i not in `skip`, each pair emitted once.
std::vector<Edge> sum_rule_edges(Int n, Int k, const std::vector<Vertex>& skip) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n / 2));
  for (Vertex i = 0; i < n; ++i) {
    const Vertex j = Residue(k - i, n).value();
    if (j <= i) continue;
    if (std::ranges::find(skip, i) != skip.end() || std::ranges::find(skip, j) != skip.end()) {
      continue;
    }
    edges.push_back(Edge{i, j});
  }
  std::ranges::sort(edges);
  return edges;
}

}  // namespace

Edge Edge::make(Vertex a, Vertex b) {
  if (a == b) {
    throw std::invalid_argument("loop edge at vertex " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

Factor build_modular_factor(Int n, Int k) {
  require_order(n);
  if (n % 2 == 0) {
    throw std::invalid_argument("build_modular_factor requires odd n, got " + std::to_string(n));
  }
  require_index(n, k);
  Factor f;
  f.n = n;
  f.index = k;
  f.isolated = half_mod(Residue(k, n)).value();
  f.edges = sum_rule_edges(n, k, {});
  return f;
}

Factor build_modular_factor_even(Int n, Int k) {
  require_order(n);
  if (n % 2 != 0) {
    throw std::invalid_argument("build_modular_factor_even requires even n, got " +
                                std::to_string(n));
  }
  require_index(n, k);
  Factor f;
  f.n = n;
  f.index = k;
  if (k % 2 == 1) {
    f.edges = sum_rule_edges(n, k, {});
    return f;
  }
  const Vertex a = k / 2;
  const Vertex b = (n + k) / 2;
  f.edges = sum_rule_edges(n, k, {a, b});
  f.edges.push_back(Edge::make(a, b));
  std::ranges::sort(f.edges);
  return f;
}

Factorization build_modular_factorization(Int n) {
  require_order(n);
  if (n % 2 == 0) {
    throw std::invalid_argument("build_modular_factorization requires odd n, got " +
                                std::to_string(n));
  }
  Factorization fz;
  fz.n = n;
  fz.factors.reserve(static_cast<std::size_t>(n));
  for (Int k = 0; k < n; ++k) fz.factors.push_back(build_modular_factor(n, k));
  return fz;
}

Residue factor_index_of_edge(Int n, const Edge& e) {
  if (e.u == e.v) {
    throw std::invalid_argument("loop edge at vertex " + std::to_string(e.u));
  }
  return Residue(e.u + e.v, n);
}

Validity validate_factor(const Factor& f) {
  const Int n = f.n;
  if (n < 3) return Validity::invalid("graph order " + std::to_string(n) + " is below 3");
  const bool odd = n % 2 == 1;
  if (odd && !f.isolated) return Validity::invalid("odd order requires an isolated vertex");
  if (!odd && f.isolated) return Validity::invalid("even order admits no isolated vertex");
  if (f.isolated && (*f.isolated < 0 || *f.isolated >= n)) {
    return Validity::invalid("isolated vertex " + std::to_string(*f.isolated) + " out of range");
  }

  std::vector<int> cover(static_cast<std::size_t>(n), 0);
  for (const Edge& e : f.edges) {
    if (e.u == e.v) return Validity::invalid("loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) {
      return Validity::invalid("edge [" + std::to_string(e.u) + "," + std::to_string(e.v) +
                               "] is not canonical");
    }
    if (e.u < 0 || e.v >= n) {
      return Validity::invalid("edge [" + std::to_string(e.u) + "," + std::to_string(e.v) +
                               "] has an endpoint out of range");
    }
    for (Vertex x : {e.u, e.v}) {
      if (++cover[static_cast<std::size_t>(x)] > 1) {
        return Validity::invalid("vertex " + std::to_string(x) + " covered twice");
      }
    }
  }
  if (f.isolated && cover[static_cast<std::size_t>(*f.isolated)] != 0) {
    return Validity::invalid("isolated vertex " + std::to_string(*f.isolated) + " is covered");
  }
  std::vector<Vertex> missing;
  for (Vertex x = 0; x < n; ++x) {
    if (cover[static_cast<std::size_t>(x)] == 0 && x != f.isolated) missing.push_back(x);
  }
  if (!missing.empty()) {
    return Validity::invalid("vertices " + brace_list(missing) + " uncovered");
  }
  if (!std::ranges::is_sorted(f.edges)) return Validity::invalid("edges are not sorted");
  return Validity::valid();
}

Validity validate_factorization(const Factorization& fz) {
  const Int n = fz.n;
  if (n < 3) return Validity::invalid("graph order " + std::to_string(n) + " is below 3");
  const bool odd = n % 2 == 1;
  const auto expected = static_cast<std::size_t>(odd ? n : n - 1);
  if (fz.factors.size() != expected) {
    return Validity::invalid("expected " + std::to_string(expected) + " factors, got " +
                             std::to_string(fz.factors.size()));
  }
  std::set<Edge> seen;
  std::vector<int> isolated_count(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < fz.factors.size(); ++i) {
    const Factor& f = fz.factors[i];
    if (f.n != n) {
      return Validity::invalid("factor " + std::to_string(i) + " has order " +
                               std::to_string(f.n) + ", expected " + std::to_string(n));
    }
    if (auto v = validate_factor(f); !v) {
      return Validity::invalid("factor " + std::to_string(i) + ": " + v.reason);
    }
    for (const Edge& e : f.edges) {
      if (!seen.insert(e).second) {
        return Validity::invalid("edge [" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                 "] appears in more than one factor");
      }
    }
    if (f.isolated) ++isolated_count[static_cast<std::size_t>(*f.isolated)];
  }
  // Disjoint edge sets of total size n(n-1)/2 inside E(K_n) cover it.
  if (static_cast<Int>(seen.size()) != n * (n - 1) / 2) {
    return Validity::invalid("factors cover " + std::to_string(seen.size()) + " of " +
                             std::to_string(n * (n - 1) / 2) + " edges");
  }
  if (odd) {
    for (Vertex x = 0; x < n; ++x) {
      if (isolated_count[static_cast<std::size_t>(x)] != 1) {
        return Validity::invalid("vertex " + std::to_string(x) + " is isolated in " +
                                 std::to_string(isolated_count[static_cast<std::size_t>(x)]) +
                                 " factors");
      }
    }
  }
  return Validity::valid();
}

bool is_modular_factor(const Factor& f) {
  if (!f.index || f.n < 3 || f.n % 2 == 0) return false;
  return std::ranges::all_of(f.edges, [&](const Edge& e) {
    return e.u != e.v && factor_index_of_edge(f.n, e).value() == *f.index;
  });
}

std::vector<Vertex> mates(const Factor& f) {
  std::vector<Vertex> mate(static_cast<std::size_t>(f.n), -1);
  for (const Edge& e : f.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= f.n || e.v >= f.n) {
      throw std::invalid_argument("edge endpoint out of range for order " + std::to_string(f.n));
    }
    mate[static_cast<std::size_t>(e.u)] = e.v;
    mate[static_cast<std::size_t>(e.v)] = e.u;
  }
  return mate;
}

}  // namespace onefactor
