#pragma once

#include <functional>
#include <stdexcept>

#include "onefactor/factors.hpp"

namespace onefactor {

inline constexpr Int kOracleMaxOrder = 9;
// Orders at or above this need OracleOptions::allow_expensive.
inline constexpr Int kOracleExpensiveOrder = 9;

// Raised when a run would exceed the default cost budget.
class CostGuardRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  bool allow_expensive = false;
  unsigned threads = 1;  // 0 selects std::thread::hardware_concurrency()
};

// Calls `visit` once for every near-one-factorization of K_n (odd n, 3..9).
// Factor p of the search always isolates vertex p, so each partition is seen
// exactly once; emitted factors are sorted by their edge lists and carry no
// index. Throws std::invalid_argument out of range, CostGuardRefusal for
// n = 9 without allow_expensive.
void enumerate_factorizations(Int n, const std::function<void(const Factorization&)>& visit,
                              const OracleOptions& options = {});

struct ExactCResult {
  Int n = 0;
  Int exact_c = 0;
  Int lower_bound = 0;  // n * phi(n) / 2
  Int factorizations_seen = 0;
};

// c(K_n): the maximum number of perfect pairs over all near-one-factorizations.
ExactCResult exact_c(Int n, const OracleOptions& options = {});

// Builds the union graph explicitly and checks by degree census and a
// connectivity scan that it is a Hamiltonian path (odd n) or cycle (even n).
bool independent_hamiltonicity_check(const Factor& f, const Factor& g);

}  // namespace onefactor
