#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "orbfix/catalog.hpp"
#include "orbfix/combinat.hpp"
#include "orbfix/divisions.hpp"
#include "orbfix/error.hpp"

using namespace orbfix;

namespace {

GeneratedGroup named(const std::string &spec) { return realize(parse_group_spec(spec)); }

std::vector<BigCount> ds(const DivisionTable &table) {
  std::vector<BigCount> out;
  for (const auto &e : table.entries)
    out.push_back(e.d);
  return out;
}

void check_level_invariants(const DivisionTable &table) {
  for (const auto &e : table.entries) {
    BigCount sum = 0, count = 0;
    for (const auto &[len, mult] : e.lengths) {
      CHECK(table.order % len == 0);
      sum += len * mult;
      count += mult;
    }
    CHECK(sum == falling_factorial(table.degree, e.j));
    CHECK(count == e.d);
  }
}

} // namespace

TEST_SUITE("divisions") {

TEST_CASE("symmetric groups never split") {
  auto table = division_sequence(named("S:5"), 5);
  CHECK(ds(table) == std::vector<BigCount>(5, 1));
  CHECK(table.transitivity == 5);
  check_level_invariants(table);
}

TEST_CASE("A_4 against exhaustive injective orbit counts") {
  auto g = named("A:4");
  auto table = division_sequence(g, 3);
  CHECK(ds(table) == std::vector<BigCount>{1, 1, 2});
  for (unsigned j = 1; j <= 3; ++j)
    CHECK(table.entry(j).d == oracle::union_find_orbits(g.generators, 4, j, true));
  check_level_invariants(table);
}

TEST_CASE("M24 sub-orbit split") {
  auto table = division_sequence(named("M24"), 8);
  CHECK(table.order == falling_factorial(24, 5) * 48);
  CHECK(ds(table) == std::vector<BigCount>{1, 1, 1, 1, 1, 2, 9, 123});
  const auto &six = table.entry(6).lengths;
  CHECK(six == LengthMultiset{{BigCount(81'607'680), 1}, {BigCount(15'301'440), 1}});
  CHECK(table.transitivity == 5);
  check_level_invariants(table);
}

TEST_CASE("M24 closed form and the trivial-stabilizer shortcut") {
  auto table = division_sequence(named("M24"), 24);
  REQUIRE(table.computed_up_to == 24);
  REQUIRE(table.trivial_stabilizer_from.has_value());
  CHECK(*table.trivial_stabilizer_from <= 9);
  CHECK(table.spot_checks > 0);
  for (unsigned j = 9; j <= 24; ++j)
    CHECK(table.entry(j).d == 1938 * factorial(15) / factorial(24 - j));
  for (unsigned k = 1; k <= 30; ++k)
    CHECK(rhs_division_sum(table, k) == m24_formula_rhs(k));
  check_level_invariants(table);
}

TEST_CASE("closed form values") {
  CHECK(m24_formula_rhs(1) == 1);
  CHECK(m24_formula_rhs(5) == 52);
  CHECK(m24_formula_rhs(10) ==
        rhs_division_sum(division_sequence(named("M24"), 10), 10));
}

TEST_CASE("transitivity degrees") {
  for (unsigned n = 1; n <= 6; ++n)
    CHECK(transitivity_degree(named("S:" + std::to_string(n))) == static_cast<int>(n));
  CHECK(transitivity_degree(named("C:4")) == 1);
  CHECK(transitivity_degree(named("M11")) == 4);
  CHECK(transitivity_degree(named("M12")) == 5);
  CHECK(transitivity_degree(named("M24")) == 5);
  CHECK(burnside_average(named("M12"), 5) == 52);
  auto split = make_group("intransitive", 4, {parse_cycles("(1,2)", 4)});
  CHECK(transitivity_degree(split) == 0);
  auto c4 = division_sequence(named("C:4"), 4);
  CHECK(ds(c4) == std::vector<BigCount>{1, 3, 6, 6});
}

TEST_CASE("division sums") {
  auto c3 = division_sequence(named("C:3"), 3);
  CHECK(rhs_division_sum(c3, 3) == 9);
  for (unsigned n = 2; n <= 6; ++n) {
    auto table = division_sequence(named("S:" + std::to_string(n)), n);
    for (unsigned k = 1; k <= 10; ++k) {
      BigCount expected = 0;
      for (unsigned j = 1; j <= std::min(n, k); ++j)
        expected += stirling2(k, j);
      CHECK(rhs_division_sum(table, k) == expected);
    }
  }
  auto m11 = division_sequence(named("M11"), 4);
  for (unsigned k = 1; k <= 4; ++k)
    CHECK(rhs_division_sum(m11, k) == bell(k));
  auto short_table = division_sequence(named("S:6"), 2);
  CHECK_THROWS_AS(rhs_division_sum(short_table, 3), Error);
}

TEST_CASE("division shortcut agrees with exhaustive counts") {
  auto c5 = named("C:5");
  auto table = division_sequence(c5, 5);
  for (unsigned j = 1; j <= 5; ++j)
    CHECK(table.entry(j).d == oracle::union_find_orbits(c5.generators, 5, j, true));
  CHECK(table.trivial_stabilizer_from == 1u);
  CHECK(table.spot_checks > 0);
  check_level_invariants(table);
}

TEST_CASE("random groups against exhaustive counts") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 12; ++i) {
    const std::size_t n = 3 + i % 4;
    auto g = make_group("random", n, {oracle::random_permutation(n, rng),
                                      oracle::random_permutation(n, rng)});
    auto table = division_sequence(g, static_cast<unsigned>(n));
    check_level_invariants(table);
    for (unsigned j = 1; j <= std::min<unsigned>(n, 4); ++j)
      CHECK(table.entry(j).d ==
            oracle::union_find_orbits(g.generators, static_cast<unsigned>(n), j, true));
  }
}

TEST_CASE("argument and budget errors") {
  CHECK_THROWS_AS(division_sequence(named("S:4"), 5), Error);
  CHECK_THROWS_AS(division_sequence(named("S:4"), 0), Error);
  Budgets tight;
  tight.representative_budget = 10;
  // A lone transposition keeps every stabilizer nontrivial, so no shortcut.
  auto swap = make_group("swap", 8, {parse_cycles("(1,2)", 8)});
  auto table = division_sequence(swap, 8, tight);
  CHECK(table.truncated);
  CHECK(table.computed_up_to >= 1);
  CHECK(table.computed_up_to < 8);
  try {
    table.entry(8);
    FAIL("expected Insufficient");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::Insufficient);
  }
}

TEST_CASE("identity verification") {
  auto s4 = verify_identity(named("S:4"), 6);
  REQUIRE(s4.lhs_burnside);
  REQUIRE(s4.mid_orbits);
  BigCount expected = 0;
  for (unsigned j = 1; j <= 4; ++j)
    expected += stirling2(6, j);
  CHECK(*s4.lhs_burnside == expected);
  CHECK(*s4.mid_orbits == expected);
  CHECK(s4.rhs_divisions == expected);
  CHECK(s4.matched);

  auto m11 = verify_identity(named("M11"), 4);
  CHECK(m11.matched);
  CHECK(m11.rhs_divisions == 15);
  CHECK(*m11.lhs_burnside == 15);

  auto trivial = verify_identity(make_group("1", 3, {}), 2);
  CHECK(*trivial.lhs_burnside == 9);
  CHECK(*trivial.mid_orbits == 9);
  CHECK(trivial.rhs_divisions == 9);
}

TEST_CASE("over-budget engines are skipped with a note") {
  auto report = verify_identity(named("M24"), 4);
  CHECK_FALSE(report.lhs_burnside);
  REQUIRE(report.mid_orbits);
  CHECK(*report.mid_orbits == 15);
  CHECK(report.rhs_divisions == 15);
  CHECK(report.matched);
  CHECK_FALSE(report.notes.empty());

  Budgets small;
  small.tuple_state_cap = 1000;
  auto rhs_only = verify_identity(named("M24"), 4, small);
  CHECK_FALSE(rhs_only.mid_orbits);
  CHECK(rhs_only.notes.size() >= 2);
}

TEST_CASE("analysis caches are reused across k") {
  GroupAnalysis analysis(named("M12"));
  for (unsigned k = 1; k <= 6; ++k) {
    auto report = analysis.verify(k);
    CHECK(report.matched);
    if (k <= 5)
      CHECK(report.rhs_divisions == bell(k));
  }
  CHECK(analysis.transitivity_degree() == 5);
}

}
