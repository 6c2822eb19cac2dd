#include "orbfix/perm.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "orbfix/error.hpp"

namespace orbfix {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  for (std::size_t i = 0; i < degree; ++i)
    images_[i] = static_cast<Point>(i);
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point y : images) {
    if (y >= images.size())
      fail(ErrorCode::OutOfRange, "image " + std::to_string(y + 1) +
                                      " exceeds degree " +
                                      std::to_string(images.size()));
    if (seen[y])
      fail(ErrorCode::RepeatedPoint,
           "point " + std::to_string(y + 1) + " is hit twice");
    seen[y] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation identity(std::size_t degree) { return Permutation(degree); }

Permutation compose(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    fail(ErrorCode::DegreeMismatch,
         "cannot compose permutations of degree " + std::to_string(p.degree()) +
             " and " + std::to_string(q.degree()));
  Permutation r;
  r.images_.resize(p.degree());
  for (std::size_t i = 0; i < r.images_.size(); ++i)
    r.images_[i] = p.images_[q.images_[i]];
  return r;
}

void compose_into(Permutation &out, const Permutation &p,
                  const Permutation &q) {
  if (p.degree() != q.degree())
    fail(ErrorCode::DegreeMismatch,
         "cannot compose permutations of degree " + std::to_string(p.degree()) +
             " and " + std::to_string(q.degree()));
  out.images_.resize(p.degree());
  for (std::size_t i = 0; i < out.images_.size(); ++i)
    out.images_[i] = p.images_[q.images_[i]];
}

Permutation inverse(const Permutation &p) {
  Permutation r;
  r.images_.resize(p.degree());
  for (std::size_t i = 0; i < r.images_.size(); ++i)
    r.images_[p.images_[i]] = static_cast<Point>(i);
  return r;
}

std::size_t fixed_points_of_product(const Permutation &p,
                                    const Permutation &q) noexcept {
  const auto a = p.images();
  const auto b = q.images();
  std::size_t count = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    count += a[b[i]] == i;
  return count;
}

std::size_t fixed_points(const Permutation &p) noexcept {
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.degree(); ++i)
    count += p(static_cast<Point>(i)) == i;
  return count;
}

Tuple apply_tuple(const Permutation &p, std::span<const Point> x) {
  Tuple out;
  out.reserve(x.size());
  for (Point v : x) {
    if (v >= p.degree())
      fail(ErrorCode::OutOfRange, "tuple entry " + std::to_string(v + 1) +
                                      " exceeds degree " +
                                      std::to_string(p.degree()));
    out.push_back(p(v));
  }
  return out;
}

std::vector<std::size_t> cycle_type(const Permutation &p) {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start])
      continue;
    std::size_t len = 0;
    for (Point x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Point least_moved_point(const Permutation &p) noexcept {
  for (Point i = 0; i < p.degree(); ++i)
    if (p(i) != i)
      return i;
  return static_cast<Point>(p.degree());
}

namespace {

class CycleParser {
public:
  CycleParser(std::string_view text, std::size_t degree)
      : text_(text), degree_(degree) {}

  Permutation parse() {
    std::vector<Point> images(degree_);
    for (std::size_t i = 0; i < degree_; ++i)
      images[i] = static_cast<Point>(i);

    if (text_ == "()")
      return Permutation::from_images(std::move(images));

    std::vector<bool> used(degree_, false);
    std::size_t cycles = 0;
    while (true) {
      skip_space();
      if (pos_ == text_.size())
        break;
      auto cycle = parse_cycle();
      for (Point x : cycle) {
        if (used[x])
          fail(ErrorCode::RepeatedPoint,
               "point " + std::to_string(x + 1) + " appears twice in \"" +
                   std::string(text_) + "\"");
        used[x] = true;
      }
      for (std::size_t i = 0; i < cycle.size(); ++i)
        images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      ++cycles;
    }
    if (cycles == 0)
      malformed("empty cycle word");
    return Permutation::from_images(std::move(images));
  }

private:
  [[noreturn]] void malformed(const std::string &why) const {
    fail(ErrorCode::Malformed, "malformed cycle notation \"" +
                                   std::string(text_) + "\": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      malformed(std::string("expected '") + c + "' at offset " +
                std::to_string(pos_));
    ++pos_;
  }

  Point parse_int() {
    std::size_t start = pos_;
    std::uint64_t value = 0;
    bool overflow = false;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max())
        overflow = true;
      ++pos_;
    }
    if (pos_ == start)
      malformed("empty cycle entry at offset " + std::to_string(start));
    if (overflow || value < 1 || value > degree_)
      fail(ErrorCode::OutOfRange,
           "cycle entry " + std::string(text_.substr(start, pos_ - start)) +
               " outside [1, " + std::to_string(degree_) + "]");
    return static_cast<Point>(value - 1);
  }

  std::vector<Point> parse_cycle() {
    expect('(');
    std::vector<Point> cycle{parse_int()};
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      cycle.push_back(parse_int());
    }
    expect(')');
    return cycle;
  }

  std::string_view text_;
  std::size_t degree_;
  std::size_t pos_ = 0;
};

} // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  return CycleParser(text, degree).parse();
}

std::string to_cycles(const Permutation &p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start] || p(start) == start)
      continue;
    out += '(';
    for (Point x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      if (x != start)
        out += ',';
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

} // namespace orbfix
