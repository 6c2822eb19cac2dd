#pragma once

#include <memory>
#include <vector>

#include "orbfix/bigcount.hpp"

namespace orbfix {

inline constexpr unsigned kDefaultStirlingCap = 64;

// Triangular table of Stirling numbers of the second kind S(k, j) for
// 0 <= j <= k <= max_k, filled by S(k,j) = j*S(k-1,j) + S(k-1,j-1).
class StirlingTable {
public:
  explicit StirlingTable(unsigned max_k);

  unsigned max_k() const noexcept { return max_k_; }

  // Zero for j > k. Precondition: k <= max_k().
  const BigCount &at(unsigned k, unsigned j) const;

private:
  unsigned max_k_;
  std::vector<std::vector<BigCount>> rows_;
};

// Shared, memoized table covering at least rows 0..max_k. Safe to call from
// several threads; returned tables are immutable.
std::shared_ptr<const StirlingTable> stirling_table(unsigned max_k);

// Throws Error(CapExceeded) when k > cap.
BigCount stirling2(unsigned k, unsigned j, unsigned cap = kDefaultStirlingCap);

// B_k = sum_{j=1..k} S(k,j), for 1 <= k <= cap (B_0 = 1 is also accepted).
BigCount bell(unsigned k, unsigned cap = kDefaultStirlingCap);

// (n)_j = n (n-1) ... (n-j+1); (n)_0 = 1 and (n)_j = 0 for j > n.
BigCount falling_factorial(unsigned n, unsigned j);

BigCount factorial(unsigned n);

// n^k == sum_{j=1..k} S(k,j) (n)_j, evaluated exactly.
bool check_generating_identity(unsigned n, unsigned k,
                               unsigned cap = kDefaultStirlingCap);

} // namespace orbfix
