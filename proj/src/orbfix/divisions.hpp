#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orbfix/action.hpp"
#include "orbfix/bigcount.hpp"
#include "orbfix/budgets.hpp"
#include "orbfix/group.hpp"

namespace orbfix {

// d_j is the number of G-orbits on injective j-tuples: the number of pieces
// the single S_N orbit of those tuples falls into under G. `lengths` holds
// the sizes of the pieces and always sums to (N)_j.
struct DivisionEntry {
  unsigned j = 0;
  BigCount d = 0;
  LengthMultiset lengths;

  friend bool operator==(const DivisionEntry &, const DivisionEntry &) = default;
};

struct DivisionTable {
  std::string group;
  std::size_t degree = 0;
  BigCount order = 0;
  std::vector<DivisionEntry> entries; // entries[i].j == i + 1
  unsigned computed_up_to = 0;
  // First level at which every tuple stabilizer was trivial; later levels
  // follow d_{j+1} = d_j (N - j) with all lengths equal to |G|.
  std::optional<unsigned> trivial_stabilizer_from;
  bool truncated = false;
  // Largest t with d_1 = ... = d_t = 1; 0 for an intransitive group.
  int transitivity = 0;
  unsigned spot_checks = 0;

  const DivisionEntry &entry(unsigned j) const; // Error(Insufficient)

  friend bool operator==(const DivisionTable &, const DivisionTable &) = default;
};

// Level-wise extension of orbit representatives: each representative
// injective (j-1)-tuple, together with its pointwise stabilizer H, spawns one
// new orbit per H-orbit on the unused points, and the new orbit has length
// |G| / |H_p|. Throws Error(OutOfRange) when max_j > N. A level with more
// than budgets.representative_budget representatives truncates the table.
DivisionTable division_sequence(const GeneratedGroup &group, unsigned max_j,
                                const Budgets &budgets = {});

int transitivity_degree(const GeneratedGroup &group,
                        const Budgets &budgets = {});

// sum_{j=1..min(k,N)} d_j S(k,j). Throws Error(Insufficient) when the table
// stops below min(k, N).
BigCount rhs_division_sum(const DivisionTable &table, unsigned k,
                          unsigned stirling_cap = kDefaultStirlingCap);

// The closed form for M24:
//   sum_{j<=5} S(k,j) + 2 S(k,6) + 9 S(k,7) + 123 S(k,8)
//     + 1938 sum_{j=9..min(k,24)} 15!/(24-j)! S(k,j).
BigCount m24_formula_rhs(unsigned k, unsigned stirling_cap = kDefaultStirlingCap);

// Average number of fixed k-tuples, number of orbits on k-tuples and the
// division sum, each computed by its own engine. Values that would exceed a
// budget are left empty and explained in `notes`.
struct IdentityReport {
  std::string group;
  std::size_t degree = 0;
  BigCount order = 0;
  unsigned k = 0;
  std::optional<BigCount> lhs_burnside;
  std::optional<BigCount> mid_orbits;
  BigCount rhs_divisions = 0;
  bool matched = false;
  std::map<std::string, double> elapsed_ms;
  std::vector<std::string> notes;

  friend bool operator==(const IdentityReport &, const IdentityReport &) = default;
};

// Holds one group with the results that are independent of k (stabilizer
// chain, fixed-point histogram, division table) so that a range of k values
// reuses them. Not thread-safe.
class GroupAnalysis {
public:
  explicit GroupAnalysis(GeneratedGroup group, Budgets budgets = {});

  const GeneratedGroup &group() const noexcept { return group_; }
  const Budgets &budgets() const noexcept { return budgets_; }

  const StabilizerChain &chain();
  const BigCount &order() { return chain().order(); }

  // Throws Error(LongRunning) past the element budget.
  const FixedPointHistogram &histogram();

  DivisionTable divisions(unsigned max_j);
  int transitivity_degree();

  // Throws Error(Budget) when the division table cannot reach min(k, N).
  IdentityReport verify(unsigned k);

private:
  GeneratedGroup group_;
  Budgets budgets_;
  std::optional<StabilizerChain> chain_;
  std::optional<FixedPointHistogram> histogram_;
  std::optional<DivisionTable> divisions_;
  unsigned divisions_max_j_ = 0;
};

IdentityReport verify_identity(const GeneratedGroup &group, unsigned k,
                               const Budgets &budgets = {});

} // namespace orbfix
