#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "orbfix/bigcount.hpp"
#include "orbfix/budgets.hpp"
#include "orbfix/group.hpp"
#include "orbfix/perm.hpp"

namespace orbfix {

// Z_N^k with a fixed ranking: rank(x) = sum_i x[i] * N^i, so position 0 is
// the least significant digit.
class TupleSpace {
public:
  // Throws Error(CapExceeded) when N^k does not fit into 64 bits.
  TupleSpace(std::size_t degree, unsigned arity);

  std::size_t degree() const noexcept { return degree_; }
  unsigned arity() const noexcept { return arity_; }
  std::uint64_t size() const noexcept { return size_; }

  std::uint64_t rank(std::span<const Point> x) const;
  Tuple unrank(std::uint64_t r) const;
  void unrank_into(std::uint64_t r, std::span<Point> out) const noexcept;

private:
  std::size_t degree_;
  unsigned arity_;
  std::uint64_t size_;
};

// Number of distinct entries of x.
unsigned tuple_pattern(std::span<const Point> x);

// f(p)^k, the number of k-tuples fixed by p. With `check_directly` and
// N^k <= 10^6 the fixed tuples are also counted one by one and a disagreement
// raises Error(Internal).
BigCount fixed_tuple_count(const Permutation &p, unsigned k,
                           bool check_directly = false);

// Exhaustive count of x in Z_N^k with p.x == x.
std::uint64_t count_fixed_tuples_directly(const Permutation &p, unsigned k);

// How many group elements have each number of fixed points. Independent of
// k, so one sweep serves every Burnside average of the group.
struct FixedPointHistogram {
  std::vector<std::uint64_t> counts; // counts[f] = #{g : f(g) = f}
  BigCount elements = 0;
};

// Streams the chain's elements over `threads` disjoint index ranges.
FixedPointHistogram fixed_point_histogram(const StabilizerChain &chain,
                                          unsigned threads = 1);

// (1/|G|) sum_g f(g)^k. Throws Error(NonIntegerAverage) when |G| does not
// divide the sum.
BigCount burnside_average(const FixedPointHistogram &histogram, unsigned k);

// Throws Error(LongRunning) when the group order exceeds
// budgets.element_budget and long_running_ok is unset.
BigCount burnside_average(const GeneratedGroup &group, unsigned k,
                          const Budgets &budgets = {});

struct PatternSummary {
  BigCount count = 0; // n(k, j)
  LengthMultiset lengths;
};

struct OrbitSummary {
  BigCount total_orbits = 0;
  std::map<unsigned, PatternSummary> per_pattern; // keyed by pattern j
  std::string method = "exhaustive";
};

// Exact orbit partition of Z_N^k by breadth-first sweeps over ranked tuples
// with a visited bitmap. Throws Error(CapExceeded) when N^k > cap.
OrbitSummary enumerate_orbits(const GeneratedGroup &group, unsigned k,
                              std::uint64_t cap = 100'000'000);

struct TupleOrbit {
  BigCount length;
  Tuple representative; // lexicographically least member
  bool by_closure = false;
  bool by_stabilizer = false;
};

// Orbit length through |G| / |pointwise stabilizer of the distinct entries|,
// and additionally by explicit closure when the orbit has at most
// `closure_cap` members; both must agree (Error(Internal) otherwise).
TupleOrbit orbit_of_tuple(const GeneratedGroup &group, std::span<const Point> x,
                          std::uint64_t closure_cap = 1'000'000);

// Lexicographically least element of the orbit of x, computed along a
// sequence of point stabilizers.
Tuple minimal_image(const StabilizerChain &chain, std::span<const Point> x);

} // namespace orbfix
