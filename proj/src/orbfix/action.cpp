#include "orbfix/action.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "orbfix/error.hpp"

namespace orbfix {

TupleSpace::TupleSpace(std::size_t degree, unsigned arity)
    : degree_(degree), arity_(arity), size_(1) {
  for (unsigned i = 0; i < arity; ++i) {
    if (degree != 0 && size_ > std::numeric_limits<std::uint64_t>::max() / degree)
      fail(ErrorCode::CapExceeded, "tuple space " + std::to_string(degree) +
                                       "^" + std::to_string(arity) +
                                       " does not fit 64-bit ranks");
    size_ *= degree;
  }
}

std::uint64_t TupleSpace::rank(std::span<const Point> x) const {
  if (x.size() != arity_)
    fail(ErrorCode::BadParameter, "tuple of length " + std::to_string(x.size()) +
                                      " in a space of arity " +
                                      std::to_string(arity_));
  std::uint64_t r = 0;
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] >= degree_)
      fail(ErrorCode::OutOfRange, "tuple entry " + std::to_string(x[i] + 1) +
                                      " exceeds degree " +
                                      std::to_string(degree_));
    r = r * degree_ + x[i];
  }
  return r;
}

Tuple TupleSpace::unrank(std::uint64_t r) const {
  Tuple x(arity_);
  unrank_into(r, x);
  return x;
}

void TupleSpace::unrank_into(std::uint64_t r, std::span<Point> out) const noexcept {
  for (unsigned i = 0; i < arity_; ++i) {
    out[i] = static_cast<Point>(r % degree_);
    r /= degree_;
  }
}

unsigned tuple_pattern(std::span<const Point> x) {
  std::set<Point> distinct(x.begin(), x.end());
  return static_cast<unsigned>(distinct.size());
}

std::uint64_t count_fixed_tuples_directly(const Permutation &p, unsigned k) {
  TupleSpace space(p.degree(), k);
  Tuple x(k);
  std::uint64_t fixed = 0;
  for (std::uint64_t r = 0; r < space.size(); ++r) {
    space.unrank_into(r, x);
    fixed += apply_tuple(p, x) == x;
  }
  return fixed;
}

BigCount fixed_tuple_count(const Permutation &p, unsigned k,
                           bool check_directly) {
  BigCount count = ipow(fixed_points(p), k);
  if (check_directly && ipow(p.degree(), k) <= 1'000'000) {
    BigCount direct = count_fixed_tuples_directly(p, k);
    if (direct != count)
      fail(ErrorCode::Internal, "fixed tuple count of " + to_cycles(p) +
                                    " at k=" + std::to_string(k) + ": " +
                                    to_decimal(direct) + " direct vs " +
                                    to_decimal(count) + " from f^k");
  }
  return count;
}

namespace {

void accumulate_fixed_points(ElementStream stream,
                             std::vector<std::uint64_t> &counts) {
  while (stream.next())
    ++counts[fixed_points(stream.current())];
}

} // namespace

FixedPointHistogram fixed_point_histogram(const StabilizerChain &chain,
                                          unsigned threads) {
  FixedPointHistogram hist;
  hist.counts.assign(chain.degree() + 1, 0);
  std::uint64_t order = 0;
  if (threads <= 1 || !fits_u64(chain.order(), order)) {
    accumulate_fixed_points(ElementStream(chain), hist.counts);
  } else {
    auto ranges = split_index_range(order, threads);
    std::vector<std::vector<std::uint64_t>> partial(
        ranges.size(), std::vector<std::uint64_t>(chain.degree() + 1, 0));
    std::vector<std::jthread> workers;
    for (std::size_t i = 0; i < ranges.size(); ++i)
      workers.emplace_back([&, i] {
        accumulate_fixed_points(
            ElementStream(chain, ranges[i].first, ranges[i].second), partial[i]);
      });
    workers.clear();
    for (const auto &part : partial)
      for (std::size_t f = 0; f < part.size(); ++f)
        hist.counts[f] += part[f];
  }
  for (auto c : hist.counts)
    hist.elements += c;
  if (hist.elements != chain.order())
    fail(ErrorCode::Internal, "element stream produced " +
                                  to_decimal(hist.elements) +
                                  " elements for a group of order " +
                                  to_decimal(chain.order()));
  return hist;
}

BigCount burnside_average(const FixedPointHistogram &histogram, unsigned k) {
  BigCount sum = 0;
  for (std::size_t f = 0; f < histogram.counts.size(); ++f)
    if (histogram.counts[f] != 0)
      sum += ipow(f, k) * histogram.counts[f];
  if (histogram.elements == 0 || sum % histogram.elements != 0)
    fail(ErrorCode::NonIntegerAverage,
         "sum of f^" + std::to_string(k) + " = " + to_decimal(sum) +
             " is not divisible by |G| = " + to_decimal(histogram.elements));
  return sum / histogram.elements;
}

BigCount burnside_average(const GeneratedGroup &group, unsigned k,
                          const Budgets &budgets) {
  auto chain = build_chain(group);
  if (!budgets.long_running_ok && chain.order() > budgets.element_budget)
    fail(ErrorCode::LongRunning,
         "streaming " + to_decimal(chain.order()) + " elements of " +
             group.label + " exceeds the element budget of " +
             std::to_string(budgets.element_budget));
  return burnside_average(fixed_point_histogram(chain, budgets.threads), k);
}

OrbitSummary enumerate_orbits(const GeneratedGroup &group, unsigned k,
                              std::uint64_t cap) {
  TupleSpace space(group.degree, k);
  if (space.size() > cap)
    fail(ErrorCode::CapExceeded,
         std::to_string(group.degree) + "^" + std::to_string(k) + " = " +
             std::to_string(space.size()) + " tuples exceeds the state cap " +
             std::to_string(cap));

  std::vector<Permutation> gens;
  for (const auto &g : group.generators)
    if (!g.is_identity())
      gens.push_back(g);

  // Rank of the image of a tuple under a generator, digit by digit.
  std::vector<std::uint64_t> place(k, 1);
  for (unsigned i = 1; i < k; ++i)
    place[i] = place[i - 1] * group.degree;

  std::vector<std::uint64_t> visited((space.size() + 63) / 64, 0);
  auto test_and_set = [&](std::uint64_t r) {
    auto &word = visited[r >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (r & 63);
    if (word & bit)
      return true;
    word |= bit;
    return false;
  };

  OrbitSummary summary;
  std::vector<std::uint64_t> frontier;
  Tuple x(k);
  std::uint64_t covered = 0;
  for (std::uint64_t seed = 0; seed < space.size(); ++seed) {
    if (test_and_set(seed))
      continue;
    frontier.clear();
    frontier.push_back(seed);
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      space.unrank_into(frontier[head], x);
      for (const auto &g : gens) {
        std::uint64_t r = 0;
        for (unsigned i = 0; i < k; ++i)
          r += g(x[i]) * place[i];
        if (!test_and_set(r))
          frontier.push_back(r);
      }
    }
    space.unrank_into(seed, x);
    auto &pattern = summary.per_pattern[tuple_pattern(x)];
    pattern.count += 1;
    pattern.lengths[BigCount(frontier.size())] += 1;
    summary.total_orbits += 1;
    covered += frontier.size();
  }
  if (covered != space.size())
    fail(ErrorCode::Internal, "orbit lengths sum to " + std::to_string(covered) +
                                  " instead of " + std::to_string(space.size()));
  return summary;
}

namespace {

// Orbit of x under `gens` with one witness per orbit point.
struct WitnessedOrbit {
  std::vector<Point> points;
  std::vector<Permutation> witnesses; // witnesses[i](x) == points[i]
};

WitnessedOrbit witnessed_orbit(std::size_t degree,
                               std::span<const Permutation> gens, Point x) {
  WitnessedOrbit orbit{{x}, {identity(degree)}};
  std::vector<bool> seen(degree, false);
  seen[x] = true;
  for (std::size_t i = 0; i < orbit.points.size(); ++i)
    for (const auto &s : gens) {
      Point y = s(orbit.points[i]);
      if (!seen[y]) {
        seen[y] = true;
        orbit.points.push_back(y);
        orbit.witnesses.push_back(compose(s, orbit.witnesses[i]));
      }
    }
  return orbit;
}

std::vector<Point> distinct_in_order(std::span<const Point> x) {
  std::vector<Point> out;
  for (Point v : x)
    if (std::find(out.begin(), out.end(), v) == out.end())
      out.push_back(v);
  return out;
}

} // namespace

Tuple minimal_image(const StabilizerChain &chain, std::span<const Point> x) {
  Tuple y(x.begin(), x.end());
  std::vector<Permutation> gens = chain.strong_generators();
  for (std::size_t i = 0; i < y.size(); ++i) {
    auto orbit = witnessed_orbit(chain.degree(), gens, y[i]);
    auto best = std::min_element(orbit.points.begin(), orbit.points.end()) -
                orbit.points.begin();
    const auto &h = orbit.witnesses[static_cast<std::size_t>(best)];
    y = apply_tuple(h, y);
    // Continue inside the stabilizer of the point just fixed.
    const Point fixed[] = {y[i]};
    auto sub = build_chain(chain.degree(), gens, fixed);
    gens = sub.levels().size() > 1 ? sub.levels()[1].generators
                                   : std::vector<Permutation>{};
  }
  return y;
}

TupleOrbit orbit_of_tuple(const GeneratedGroup &group, std::span<const Point> x,
                          std::uint64_t closure_cap) {
  for (Point v : x)
    if (v >= group.degree)
      fail(ErrorCode::OutOfRange, "tuple entry " + std::to_string(v + 1) +
                                      " exceeds degree " +
                                      std::to_string(group.degree));
  TupleOrbit result;

  // The stabilizer of a tuple is the pointwise stabilizer of its distinct
  // entries.
  const auto distinct = distinct_in_order(x);
  auto chain = build_chain(group);
  auto fixer = build_chain(chain.degree(), chain.strong_generators(), distinct);
  const BigCount stabilizer_order = fixer.subchain(distinct.size()).order();
  if (chain.order() % stabilizer_order != 0)
    fail(ErrorCode::Internal, "stabilizer order does not divide |G|");
  result.length = chain.order() / stabilizer_order;
  result.representative = minimal_image(chain, x);
  result.by_stabilizer = true;

  if (result.length <= closure_cap) {
    std::set<Tuple> orbit{Tuple(x.begin(), x.end())};
    std::vector<Tuple> frontier{Tuple(x.begin(), x.end())};
    for (std::size_t head = 0; head < frontier.size(); ++head)
      for (const auto &g : group.generators) {
        auto y = apply_tuple(g, frontier[head]);
        if (orbit.insert(y).second)
          frontier.push_back(std::move(y));
      }
    result.by_closure = true;
    if (BigCount(orbit.size()) != result.length ||
        *orbit.begin() != result.representative)
      fail(ErrorCode::Internal,
           "closure and stabilizer disagree on the orbit of a tuple in " +
               group.label);
  }
  return result;
}

} // namespace orbfix
