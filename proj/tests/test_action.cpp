#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "orbfix/action.hpp"
#include "orbfix/catalog.hpp"
#include "orbfix/combinat.hpp"
#include "orbfix/error.hpp"

using namespace orbfix;

namespace {

GeneratedGroup named(const char *spec) { return realize(parse_group_spec(spec)); }

// Average of directly counted fixed k-tuples over an explicit element list.
BigCount direct_fixed_tuple_average(const GeneratedGroup &g, unsigned k) {
  auto elements = close_group(g, 1'000'000);
  BigCount sum = 0;
  for (const auto &e : elements)
    sum += oracle::fixed_tuples(e, k);
  REQUIRE(sum % elements.size() == 0);
  return sum / elements.size();
}

} // namespace

TEST_SUITE("action") {

TEST_CASE("tuple ranking puts position 0 in the least significant digit") {
  TupleSpace space(3, 2);
  CHECK(space.size() == 9);
  CHECK(space.rank(Tuple{1, 0}) == 1);
  CHECK(space.rank(Tuple{0, 1}) == 3);
  for (std::uint64_t r = 0; r < space.size(); ++r)
    CHECK(space.rank(space.unrank(r)) == r);
  CHECK_THROWS_AS(TupleSpace(1000, 10), Error);
  CHECK_THROWS_AS(space.rank(Tuple{3, 0}), Error);
}

TEST_CASE("fixed tuple counts") {
  CHECK(fixed_tuple_count(identity(3), 2) == 9);
  CHECK(fixed_tuple_count(parse_cycles("(1,2,3)", 3), 4) == 0);
  auto p = parse_cycles("(1,2)", 4);
  CHECK(fixed_tuple_count(p, 3) == 8);
  CHECK(count_fixed_tuples_directly(p, 3) == 8);
  CHECK(oracle::fixed_tuples(p, 3) == 8);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 40; ++i) {
    auto q = oracle::random_permutation(2 + i % 5, rng);
    unsigned k = 1 + i % 4;
    CHECK(fixed_tuple_count(q, k, true) == oracle::fixed_tuples(q, k));
  }
}

TEST_CASE("Burnside averages") {
  CHECK(burnside_average(named("S:3"), 2) == 2);
  CHECK(burnside_average(named("C:3"), 3) == 9);
  CHECK(oracle::union_find_orbits(named("C:3").generators, 3, 3) == 9);
  for (unsigned k = 1; k <= 4; ++k)
    CHECK(burnside_average(make_group("1", 4, {}), k) == ipow(4, k));
}

TEST_CASE("Burnside respects the element budget") {
  Budgets tight;
  tight.element_budget = 100;
  try {
    burnside_average(named("S:6"), 2, tight);
    FAIL("expected LongRunning");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::LongRunning);
  }
  tight.long_running_ok = true;
  CHECK(burnside_average(named("S:6"), 2, tight) == 2);
}

TEST_CASE("a corrupted histogram is reported, not rounded") {
  FixedPointHistogram hist;
  hist.counts = {1, 0, 1};
  hist.elements = 2;
  CHECK(burnside_average(hist, 1) == 1);
  hist.counts = {0, 1, 1};
  try {
    burnside_average(hist, 1);
    FAIL("expected NonIntegerAverage");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NonIntegerAverage);
  }
}

TEST_CASE("threaded histograms equal the serial one") {
  auto chain = build_chain(named("M12"));
  auto serial = fixed_point_histogram(chain, 1);
  auto threaded = fixed_point_histogram(chain, 4);
  CHECK(serial.counts == threaded.counts);
  CHECK(serial.elements == 95'040);
}

TEST_CASE("orbits of S_N on k-tuples are counted by Stirling numbers") {
  for (unsigned n = 1; n <= 5; ++n)
    for (unsigned k = 1; k <= 6; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      auto g = named(("S:" + std::to_string(n)).c_str());
      auto summary = enumerate_orbits(g, k);
      BigCount expected = 0;
      for (unsigned j = 1; j <= std::min(n, k); ++j) {
        expected += stirling2(k, j);
        const auto &pattern = summary.per_pattern.at(j);
        CHECK(pattern.count == stirling2(k, j));
        // Every orbit of pattern j has length (N)_j.
        REQUIRE(pattern.lengths.size() == 1);
        CHECK(pattern.lengths.begin()->first == falling_factorial(n, j));
      }
      CHECK(summary.total_orbits == expected);
      CHECK(summary.per_pattern.size() == std::min(n, k));
    }
}

TEST_CASE("small orbit partitions") {
  auto trivial = enumerate_orbits(make_group("1", 2, {}), 2);
  CHECK(trivial.total_orbits == 4);
  for (const auto &[j, p] : trivial.per_pattern)
    CHECK(p.lengths.begin()->first == 1);

  auto c3 = enumerate_orbits(named("C:3"), 2);
  CHECK(c3.total_orbits == 3);
  CHECK(oracle::union_find_orbits(named("C:3").generators, 3, 2) == 3);
  CHECK(c3.per_pattern.at(1).count == 1);
  CHECK(c3.per_pattern.at(2).count == 2);
  CHECK(c3.per_pattern.at(2).lengths.at(3) == 2);

  CHECK_THROWS_AS(enumerate_orbits(named("S:10"), 9, 1'000'000), Error);
}

TEST_CASE("mass conservation and length divisibility") {
  for (const char *spec : {"A:5", "D:6", "C:5", "M11"}) {
    auto g = named(spec);
    auto order = build_chain(g).order();
    for (unsigned k = 1; k <= 4; ++k) {
      auto summary = enumerate_orbits(g, k);
      BigCount covered = 0;
      for (const auto &[j, p] : summary.per_pattern)
        for (const auto &[len, mult] : p.lengths) {
          covered += len * mult;
          CHECK(order % len == 0);
        }
      CHECK(covered == ipow(g.degree, k));
    }
  }
}

TEST_CASE("triple equality on small groups") {
  std::mt19937_64 rng(31337);
  std::vector<GeneratedGroup> groups;
  for (const char *spec : {"S:4", "S:5", "A:4", "A:5", "C:4", "C:5", "D:4", "D:5"})
    groups.push_back(named(spec));
  for (int i = 0; i < 8; ++i) {
    const std::size_t n = 3 + i % 3;
    groups.push_back(make_group("random", n,
                                {oracle::random_permutation(n, rng),
                                 oracle::random_permutation(n, rng)}));
  }
  for (const auto &g : groups)
    for (unsigned k = 1; k <= 4; ++k) {
      auto lhs = burnside_average(g, k);
      CHECK(lhs == enumerate_orbits(g, k).total_orbits);
      CHECK(lhs == direct_fixed_tuple_average(g, k));
      CHECK(lhs == oracle::union_find_orbits(g.generators,
                                             static_cast<unsigned>(g.degree), k));
    }
}

TEST_CASE("orbit of a single tuple") {
  for (unsigned n = 3; n <= 6; ++n) {
    auto g = named(("S:" + std::to_string(n)).c_str());
    auto orbit = orbit_of_tuple(g, Tuple{0, 1, 2, 1});
    CHECK(orbit.length == falling_factorial(n, 3));
    CHECK(orbit.by_closure);
    CHECK(orbit.by_stabilizer);
    CHECK(orbit.representative == Tuple{0, 1, 2, 1});
  }
  auto trivial = orbit_of_tuple(make_group("1", 5, {}), Tuple{4, 2, 4});
  CHECK(trivial.length == 1);
  CHECK(trivial.representative == Tuple{4, 2, 4});
  CHECK_THROWS_AS(orbit_of_tuple(named("S:3"), Tuple{3}), Error);
}

TEST_CASE("M24 splits injective 6-tuples into two orbit sizes") {
  auto m24 = named("M24");
  std::set<BigCount> lengths;
  for (Point p = 5; p < 24; ++p) {
    auto orbit = orbit_of_tuple(m24, Tuple{0, 1, 2, 3, 4, p}, 0);
    CHECK_FALSE(orbit.by_closure);
    lengths.insert(orbit.length);
  }
  CHECK(lengths == std::set<BigCount>{falling_factorial(24, 5) * 16,
                                      falling_factorial(24, 5) * 3});
}

TEST_CASE("minimal images match closure minima") {
  std::mt19937_64 rng(8);
  for (const char *spec : {"D:6", "A:5", "C:7", "M11"}) {
    auto g = named(spec);
    auto chain = build_chain(g);
    for (int i = 0; i < 10; ++i) {
      Tuple x;
      for (int e = 0; e < 3; ++e)
        x.push_back(static_cast<Point>(rng() % g.degree));
      std::set<Tuple> orbit{x};
      std::vector<Tuple> todo{x};
      while (!todo.empty()) {
        auto y = todo.back();
        todo.pop_back();
        for (const auto &s : g.generators) {
          auto z = apply_tuple(s, y);
          if (orbit.insert(z).second)
            todo.push_back(z);
        }
      }
      CHECK(minimal_image(chain, x) == *orbit.begin());
    }
  }
}

}
