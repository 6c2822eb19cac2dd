#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbfix/bigcount.hpp"
#include "orbfix/perm.hpp"

namespace orbfix {

// A permutation group on {0, ..., degree-1} given by generators. The
// generator list is never empty: a trivial group carries the identity.
struct GeneratedGroup {
  std::string label;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

// Validates that every generator has the stated degree (DegreeMismatch) and
// substitutes the identity for an empty list.
GeneratedGroup make_group(std::string label, std::size_t degree,
                          std::vector<Permutation> generators);

// One level of a stabilizer chain. `generators` generate the pointwise
// stabilizer of the earlier base points; transversal[i] maps `base` to
// orbit[i].
struct ChainLevel {
  Point base = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  std::vector<std::int32_t> position; // point -> index into orbit, or -1
  std::vector<Permutation> transversal;
  std::vector<Permutation> transversal_inverse;
};

class StabilizerChain {
public:
  struct SiftResult {
    Permutation residue;
    std::size_t level; // first level where sifting stopped, or levels().size()
  };

  std::size_t degree() const noexcept { return degree_; }
  std::span<const ChainLevel> levels() const noexcept { return levels_; }
  std::vector<Point> base() const;
  const BigCount &order() const noexcept { return order_; }

  // Union of the level generators, without repeats; empty for the trivial
  // group.
  std::vector<Permutation> strong_generators() const;

  // The chain of the pointwise stabilizer of base()[0..from).
  StabilizerChain subchain(std::size_t from) const;

  SiftResult sift(Permutation g, std::size_t from = 0) const;

  // Throws Error(DegreeMismatch).
  bool contains(const Permutation &p) const;

private:
  friend StabilizerChain build_chain(std::size_t, std::span<const Permutation>,
                                     std::span<const Point>);
  void extend_orbit(std::size_t level, const Permutation &generator);
  void compute_order();

  std::size_t degree_ = 0;
  std::vector<ChainLevel> levels_;
  BigCount order_ = 1;
};

// Deterministic Schreier-Sims. The base starts with `base_hint` (kept even
// where a basic orbit is trivial), then grows by the least point moved by a
// generator that fixes the current base. Throws Error(OutOfRange) or
// Error(RepeatedPoint) for a bad hint.
StabilizerChain build_chain(std::size_t degree,
                            std::span<const Permutation> generators,
                            std::span<const Point> base_hint = {});

StabilizerChain build_chain(const GeneratedGroup &group,
                            std::span<const Point> base_hint = {});

bool membership(const StabilizerChain &chain, const Permutation &p);

// Every element of the group, breadth first from the identity: the element
// found from x by generator s is compose(s, x), generators taken in order.
// Throws Error(CapExceeded) once more than `cap` elements appear.
std::vector<Permutation> close_group(const GeneratedGroup &group,
                                     std::size_t cap);

// Generators of the subgroup fixing each listed point.
GeneratedGroup pointwise_stabilizer(const StabilizerChain &chain,
                                    std::span<const Point> points);

// Orbit of `x` under the group generated by `generators`, in discovery
// order.
std::vector<Point> point_orbit(std::size_t degree,
                               std::span<const Permutation> generators,
                               Point x);

// Streams group elements as products u_0 u_1 ... u_{L-1} of one transversal
// element per level, the last level varying fastest. Element index i in
// [0, order) corresponds to the mixed-radix digits of i, so disjoint index
// ranges give disjoint element sets.
class ElementStream {
public:
  explicit ElementStream(const StabilizerChain &chain);

  // Elements with index in [begin, end). Requires the order to fit in 64
  // bits (Error(CapExceeded) otherwise).
  ElementStream(const StabilizerChain &chain, std::uint64_t begin,
                std::uint64_t end);

  // Advances to the next element; false when the stream is exhausted.
  bool next();
  const Permutation &current() const noexcept { return current_; }

private:
  void seek(std::vector<std::size_t> digits);
  void rebuild_from(std::size_t level);

  const StabilizerChain *chain_;
  std::vector<std::size_t> digits_;
  std::vector<Permutation> prefix_;
  Permutation current_;
  std::optional<std::uint64_t> remaining_;
  bool started_ = false;
  bool done_ = false;
};

// Splits [0, order) into at most `parts` contiguous non-empty ranges.
std::vector<std::pair<std::uint64_t, std::uint64_t>>
split_index_range(std::uint64_t order, std::size_t parts);

} // namespace orbfix
