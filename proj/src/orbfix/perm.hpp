#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbfix {

// Points are 0-based internally. Cycle notation in and out is 1-based.
using Point = std::uint32_t;
using Tuple = std::vector<Point>;

// A bijection on {0, ..., degree-1} stored as its image table.
//
// Composition convention: compose(p, q) applies q first, then p, so
// compose(p, q)(i) == p(q(i)). Every other module goes through compose() and
// inverse() instead of touching image tables, which keeps this the only place
// where the order of factors is decided.
class Permutation {
public:
  Permutation() = default;

  // The identity on `degree` points.
  explicit Permutation(std::size_t degree);

  // Throws Error(OutOfRange) or Error(RepeatedPoint) unless `images` is a
  // bijection of {0, ..., images.size()-1}.
  static Permutation from_images(std::vector<Point> images);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  friend Permutation compose(const Permutation &, const Permutation &);
  friend void compose_into(Permutation &, const Permutation &,
                           const Permutation &);
  friend Permutation inverse(const Permutation &);

  std::vector<Point> images_;
};

Permutation identity(std::size_t degree);

// Result applies q first, then p. Throws Error(DegreeMismatch).
Permutation compose(const Permutation &p, const Permutation &q);

// Same as out = compose(p, q) but reuses the storage of `out`; `out` must not
// alias p or q. Used by the element streams where allocation would dominate.
void compose_into(Permutation &out, const Permutation &p, const Permutation &q);

Permutation inverse(const Permutation &p);

// fixed_points(compose(p, q)) without building the product.
std::size_t fixed_points_of_product(const Permutation &p,
                                    const Permutation &q) noexcept;

std::size_t fixed_points(const Permutation &p) noexcept;

// Entrywise image (p(x_1), ..., p(x_k)). Throws Error(OutOfRange).
Tuple apply_tuple(const Permutation &p, std::span<const Point> x);

// Cycle lengths in ascending order, fixed points included as 1s.
std::vector<std::size_t> cycle_type(const Permutation &p);

// Smallest point moved by p, or degree() when p is the identity.
Point least_moved_point(const Permutation &p) noexcept;

// Grammar: "()" | CYCLE+, CYCLE := "(" INT ("," INT)* ")", INT in [1, degree].
// Whitespace is allowed between cycles only. Throws Error(Malformed),
// Error(RepeatedPoint) or Error(OutOfRange).
Permutation parse_cycles(std::string_view text, std::size_t degree);

// Canonical cycle notation: each cycle starts at its least point, cycles are
// ordered by that point, fixed points are omitted and the identity is "()".
std::string to_cycles(const Permutation &p);

} // namespace orbfix
