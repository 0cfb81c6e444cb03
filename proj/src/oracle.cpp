#include "onefactor/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <set>
#include <thread>
#include <vector>

#include "onefactor/numtheory.hpp"

namespace onefactor {
namespace {

constexpr int kMaxN = static_cast<int>(kOracleMaxOrder);

// Edge-by-edge assignment of K_n's edges (lexicographic order) to factors,
// where factor p is the one that isolates vertex p.
class SearchState {
 public:
  explicit SearchState(int n) : n_(n) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) edges_.push_back({u, v});
    }
    for (auto& row : mate_) row.fill(-1);
    covered_.fill(0);
  }

  int n() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool can_assign(std::size_t e, int p) const {
    const auto [u, v] = edges_[e];
    if (p == u || p == v) return false;
    return (covered_[p] & ((1u << u) | (1u << v))) == 0;
  }

  void assign(std::size_t e, int p) {
    const auto [u, v] = edges_[e];
    mate_[p][u] = static_cast<std::int8_t>(v);
    mate_[p][v] = static_cast<std::int8_t>(u);
    covered_[p] |= static_cast<std::uint16_t>((1u << u) | (1u << v));
  }

  void unassign(std::size_t e, int p) {
    const auto [u, v] = edges_[e];
    mate_[p][u] = -1;
    mate_[p][v] = -1;
    covered_[p] &= static_cast<std::uint16_t>(~((1u << u) | (1u << v)));
  }

  // Perfect pairs of a complete assignment. The walk from p (isolated in
  // factor p) alternates q-edges and p-edges and can only end at q.
  int perfect_pairs() const {
    int count = 0;
    for (int p = 0; p < n_; ++p) {
      for (int q = p + 1; q < n_; ++q) {
        int cur = p;
        int steps = 0;
        bool use_q = true;
        while (steps < n_) {
          const int next = (use_q ? mate_[q] : mate_[p])[cur];
          if (next < 0) break;
          cur = next;
          ++steps;
          use_q = !use_q;
        }
        if (steps == n_ - 1) ++count;
      }
    }
    return count;
  }

  Factorization to_factorization() const {
    Factorization fz;
    fz.n = n_;
    for (int p = 0; p < n_; ++p) {
      Factor f;
      f.n = n_;
      f.isolated = p;
      for (int u = 0; u < n_; ++u) {
        const int v = mate_[p][u];
        if (v > u) f.edges.push_back(Edge{u, v});
      }
      fz.factors.push_back(std::move(f));
    }
    std::ranges::sort(fz.factors, {}, &Factor::edges);
    return fz;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::array<std::array<std::int8_t, kMaxN>, kMaxN> mate_{};
  std::array<std::uint16_t, kMaxN> covered_{};
};

template <class Leaf>
void search(SearchState& state, std::size_t e, Leaf& leaf) {
  if (e == state.edge_count()) {
    leaf(state);
    return;
  }
  for (int p = 0; p < state.n(); ++p) {
    if (!state.can_assign(e, p)) continue;
    state.assign(e, p);
    search(state, e + 1, leaf);
    state.unassign(e, p);
  }
}

// Every consistent assignment of the first `depth` edges.
void collect_prefixes(SearchState& state, std::size_t e, std::size_t depth,
                      std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (e == depth) {
    out.push_back(prefix);
    return;
  }
  for (int p = 0; p < state.n(); ++p) {
    if (!state.can_assign(e, p)) continue;
    state.assign(e, p);
    prefix.push_back(p);
    collect_prefixes(state, e + 1, depth, prefix, out);
    prefix.pop_back();
    state.unassign(e, p);
  }
}

void check_range(Int n, const OracleOptions& options) {
  if (n < 3 || n > kOracleMaxOrder || n % 2 == 0) {
    throw std::invalid_argument("oracle order must be odd and in [3, " +
                                std::to_string(kOracleMaxOrder) + "], got " + std::to_string(n));
  }
  if (n >= kOracleExpensiveOrder && !options.allow_expensive) {
    throw CostGuardRefusal("n = " + std::to_string(n) +
                           " is expensive; rerun with the expensive opt-in");
  }
}

unsigned worker_count(const OracleOptions& options) {
  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return threads;
}

}  // namespace

void enumerate_factorizations(Int n, const std::function<void(const Factorization&)>& visit,
                              const OracleOptions& options) {
  check_range(n, options);
  SearchState state(static_cast<int>(n));
  auto leaf = [&](const SearchState& s) { visit(s.to_factorization()); };
  search(state, 0, leaf);
}

ExactCResult exact_c(Int n, const OracleOptions& options) {
  check_range(n, options);
  ExactCResult result;
  result.n = n;
  result.lower_bound = n * totient(n) / 2;

  SearchState root(static_cast<int>(n));
  std::vector<std::vector<int>> prefixes;
  std::vector<int> scratch;
  collect_prefixes(root, 0, std::min<std::size_t>(4, root.edge_count()), scratch, prefixes);

  std::atomic<std::size_t> next_prefix{0};
  std::mutex merge;
  Int best = 0;
  Int seen = 0;

  auto worker = [&] {
    Int local_best = 0;
    Int local_seen = 0;
    auto leaf = [&](const SearchState& s) {
      ++local_seen;
      local_best = std::max<Int>(local_best, s.perfect_pairs());
    };
    for (;;) {
      const std::size_t idx = next_prefix.fetch_add(1);
      if (idx >= prefixes.size()) break;
      SearchState state(static_cast<int>(n));
      const auto& prefix = prefixes[idx];
      for (std::size_t e = 0; e < prefix.size(); ++e) state.assign(e, prefix[e]);
      search(state, prefix.size(), leaf);
    }
    std::lock_guard lock(merge);
    best = std::max(best, local_best);
    seen += local_seen;
  };

  const unsigned threads = worker_count(options);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  result.exact_c = best;
  result.factorizations_seen = seen;
  return result;
}

bool independent_hamiltonicity_check(const Factor& f, const Factor& g) {
  if (f.n != g.n || f.n < 3) return false;
  const Int n = f.n;
  std::set<Edge> union_edges(f.edges.begin(), f.edges.end());
  union_edges.insert(g.edges.begin(), g.edges.end());

  const bool odd = n % 2 == 1;
  const auto expected_edges = static_cast<std::size_t>(odd ? n - 1 : n);
  if (union_edges.size() != expected_edges) return false;

  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : union_edges) {
    if (e.u < 0 || e.v >= n || e.u == e.v) return false;
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  int degree_one = 0;
  for (const auto& nbrs : adj) {
    if (nbrs.size() == 1) {
      ++degree_one;
    } else if (nbrs.size() != 2) {
      return false;
    }
  }
  if (degree_one != (odd ? 2 : 0)) return false;

  // With that degree sequence, connected means a single path or cycle.
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  Int reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adj[static_cast<std::size_t>(x)]) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

}  // namespace onefactor
