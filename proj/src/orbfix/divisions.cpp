#include "orbfix/divisions.hpp"

#include <chrono>
#include <random>

#include "orbfix/combinat.hpp"
#include "orbfix/error.hpp"

namespace orbfix {

const DivisionEntry &DivisionTable::entry(unsigned j) const {
  if (j == 0 || j > entries.size())
    fail(ErrorCode::Insufficient, "division table for " + group +
                                      " has no entry for j = " +
                                      std::to_string(j));
  return entries[j - 1];
}

namespace {

constexpr unsigned kSpotChecksPerLevel = 3;

class DivisionEngine {
public:
  DivisionEngine(const GeneratedGroup &group, const Budgets &budgets)
      : group_(group), budgets_(budgets), chain_(build_chain(group)),
        rng_(0x5eed'd1u) {
    reps_.push_back({{}, chain_});
  }

  const StabilizerChain &chain() const noexcept { return chain_; }
  unsigned level() const noexcept { return level_; }
  std::optional<unsigned> trivial_from() const noexcept { return trivial_from_; }
  unsigned spot_checks() const noexcept { return spot_checks_; }

  // Computes level() + 1. Throws Error(Budget) with the engine unchanged
  // when the new level needs too many representatives.
  DivisionEntry advance() {
    const unsigned j = level_ + 1;
    DivisionEntry entry;
    entry.j = j;
    if (trivial_from_) {
      entry.d = last_d_ * (group_.degree - level_);
      entry.lengths[chain_.order()] = entry.d;
      spot_check(j);
    } else {
      extend(entry);
    }

    BigCount covered = 0;
    for (const auto &[length, multiplicity] : entry.lengths) {
      if (chain_.order() % length != 0)
        fail(ErrorCode::Internal, "orbit length " + to_decimal(length) +
                                      " does not divide |G|");
      covered += length * multiplicity;
    }
    if (covered != falling_factorial(static_cast<unsigned>(group_.degree), j))
      fail(ErrorCode::Internal,
           "orbits of injective " + std::to_string(j) + "-tuples cover " +
               to_decimal(covered) + " tuples, expected (N)_j");

    level_ = j;
    last_d_ = entry.d;
    return entry;
  }

private:
  struct Representative {
    Tuple tuple;
    StabilizerChain stabilizer;
  };

  void extend(DivisionEntry &entry) {
    const std::size_t n = group_.degree;

    // One child per stabilizer orbit on the unused points, named by the
    // least point of that orbit.
    std::vector<std::pair<std::size_t, Point>> children;
    std::vector<std::vector<Permutation>> parent_gens(reps_.size());
    for (std::size_t r = 0; r < reps_.size(); ++r) {
      parent_gens[r] = reps_[r].stabilizer.strong_generators();
      std::vector<bool> taken(n, false);
      for (Point x : reps_[r].tuple)
        taken[x] = true;
      for (Point p = 0; p < n; ++p) {
        if (taken[p])
          continue;
        for (Point y : point_orbit(n, parent_gens[r], p))
          taken[y] = true;
        children.emplace_back(r, p);
        if (children.size() > budgets_.representative_budget)
          fail(ErrorCode::Budget,
               "level " + std::to_string(level_ + 1) + " of " + group_.label +
                   " needs more than " +
                   std::to_string(budgets_.representative_budget) +
                   " representatives");
      }
    }

    std::vector<Representative> next;
    next.reserve(children.size());
    bool all_trivial = true;
    for (const auto &[r, p] : children) {
      const auto &parent = reps_[r];
      Tuple tuple = parent.tuple;
      tuple.push_back(p);
      StabilizerChain stabilizer =
          parent.stabilizer.order() == 1
              ? build_chain(n, {})
              : build_chain(n, parent_gens[r], std::span(&p, 1)).subchain(1);
      const BigCount &stab_order = stabilizer.order();
      all_trivial = all_trivial && stab_order == 1;
      entry.lengths[chain_.order() / stab_order] += 1;
      next.push_back({std::move(tuple), std::move(stabilizer)});
    }
    entry.d = next.size();
    reps_ = std::move(next);
    if (all_trivial)
      trivial_from_ = level_ + 1;
  }

  // Confirms on a few random injective j-tuples extending stored
  // representatives that the pointwise stabilizer really is trivial.
  void spot_check(unsigned j) {
    const std::size_t n = group_.degree;
    const auto strong = chain_.strong_generators();
    for (unsigned s = 0; s < kSpotChecksPerLevel; ++s) {
      std::uniform_int_distribution<std::size_t> pick_rep(0, reps_.size() - 1);
      Tuple tuple = reps_[pick_rep(rng_)].tuple;
      std::vector<Point> unused;
      for (Point p = 0; p < n; ++p)
        if (std::find(tuple.begin(), tuple.end(), p) == tuple.end())
          unused.push_back(p);
      std::shuffle(unused.begin(), unused.end(), rng_);
      tuple.insert(tuple.end(), unused.begin(),
                   unused.begin() + static_cast<std::ptrdiff_t>(j - tuple.size()));
      auto fixer = build_chain(n, strong, tuple);
      if (fixer.subchain(j).order() != 1)
        fail(ErrorCode::Internal,
             "trivial-stabilizer shortcut failed its spot check at level " +
                 std::to_string(j) + " of " + group_.label);
      ++spot_checks_;
    }
  }

  const GeneratedGroup &group_;
  const Budgets &budgets_;
  StabilizerChain chain_;
  std::mt19937_64 rng_;
  std::vector<Representative> reps_;
  unsigned level_ = 0;
  BigCount last_d_ = 1;
  std::optional<unsigned> trivial_from_;
  unsigned spot_checks_ = 0;
};

} // namespace

DivisionTable division_sequence(const GeneratedGroup &group, unsigned max_j,
                                const Budgets &budgets) {
  if (max_j < 1 || max_j > group.degree)
    fail(ErrorCode::OutOfRange, "max_j = " + std::to_string(max_j) +
                                    " outside [1, " +
                                    std::to_string(group.degree) + "]");
  DivisionEngine engine(group, budgets);
  DivisionTable table;
  table.group = group.label;
  table.degree = group.degree;
  table.order = engine.chain().order();

  for (unsigned j = 1; j <= max_j; ++j) {
    try {
      table.entries.push_back(engine.advance());
    } catch (const Error &e) {
      if (e.code() != ErrorCode::Budget)
        throw;
      table.truncated = true;
      break;
    }
  }
  table.computed_up_to = static_cast<unsigned>(table.entries.size());
  table.trivial_stabilizer_from = engine.trivial_from();
  table.spot_checks = engine.spot_checks();

  int t = 0;
  bool split = false;
  for (const auto &e : table.entries) {
    if (e.d != 1) {
      split = true;
      break;
    }
    ++t;
  }
  // Each level before the first split holds a single representative, so
  // running on past max_j to locate the split is cheap.
  while (!split && !table.truncated && engine.level() < group.degree) {
    if (engine.advance().d != 1)
      break;
    ++t;
  }
  table.transitivity = t;
  return table;
}

int transitivity_degree(const GeneratedGroup &group, const Budgets &budgets) {
  return division_sequence(group, 1, budgets).transitivity;
}

BigCount rhs_division_sum(const DivisionTable &table, unsigned k,
                          unsigned stirling_cap) {
  const unsigned top =
      std::min<unsigned>(k, static_cast<unsigned>(table.degree));
  if (table.computed_up_to < top)
    fail(ErrorCode::Insufficient,
         "division table for " + table.group + " stops at j = " +
             std::to_string(table.computed_up_to) + ", need " +
             std::to_string(top));
  BigCount sum = 0;
  for (unsigned j = 1; j <= top; ++j)
    sum += table.entry(j).d * stirling2(k, j, stirling_cap);
  return sum;
}

BigCount m24_formula_rhs(unsigned k, unsigned stirling_cap) {
  auto s = [&](unsigned j) { return stirling2(k, j, stirling_cap); };
  BigCount sum = 0;
  for (unsigned j = 1; j <= 5; ++j)
    sum += s(j);
  sum += 2 * s(6) + 9 * s(7) + 123 * s(8);
  BigCount tail = 0;
  const BigCount fifteen = factorial(15);
  for (unsigned j = 9; j <= std::min(k, 24u); ++j)
    tail += fifteen / factorial(24 - j) * s(j);
  return sum + 1938 * tail;
}

GroupAnalysis::GroupAnalysis(GeneratedGroup group, Budgets budgets)
    : group_(std::move(group)), budgets_(budgets) {}

const StabilizerChain &GroupAnalysis::chain() {
  if (!chain_)
    chain_ = build_chain(group_);
  return *chain_;
}

const FixedPointHistogram &GroupAnalysis::histogram() {
  if (!histogram_) {
    if (!budgets_.long_running_ok && order() > budgets_.element_budget)
      fail(ErrorCode::LongRunning,
           "streaming " + to_decimal(order()) + " elements of " +
               group_.label + " exceeds the element budget of " +
               std::to_string(budgets_.element_budget));
    histogram_ = fixed_point_histogram(chain(), budgets_.threads);
  }
  return *histogram_;
}

DivisionTable GroupAnalysis::divisions(unsigned max_j) {
  if (divisions_ && divisions_max_j_ == max_j)
    return *divisions_;
  divisions_ = division_sequence(group_, max_j, budgets_);
  divisions_max_j_ = max_j;
  return *divisions_;
}

int GroupAnalysis::transitivity_degree() {
  if (!divisions_)
    divisions(1);
  return divisions_->transitivity;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

} // namespace

IdentityReport GroupAnalysis::verify(unsigned k) {
  const auto start = Clock::now();
  IdentityReport report;
  report.group = group_.label;
  report.degree = group_.degree;
  report.order = order();
  report.k = k;

  const unsigned need = std::min<unsigned>(k, static_cast<unsigned>(group_.degree));
  auto t0 = Clock::now();
  if (!divisions_ || divisions_->computed_up_to < need) {
    divisions(need);
    if (divisions_->computed_up_to < need)
      fail(ErrorCode::Budget,
           "division table for " + group_.label + " stops at j = " +
               std::to_string(divisions_->computed_up_to) +
               " under the representative budget; need " +
               std::to_string(need));
  }
  report.rhs_divisions = rhs_division_sum(*divisions_, k, budgets_.stirling_cap);
  report.elapsed_ms["divisions"] = ms_since(t0);

  t0 = Clock::now();
  if (budgets_.long_running_ok || order() <= budgets_.element_budget) {
    report.lhs_burnside = burnside_average(histogram(), k);
    report.elapsed_ms["burnside"] = ms_since(t0);
  } else {
    report.notes.push_back("lhs_burnside skipped: |G| = " + to_decimal(order()) +
                           " exceeds the element budget");
  }

  t0 = Clock::now();
  if (ipow(group_.degree, k) <= budgets_.tuple_state_cap) {
    report.mid_orbits = enumerate_orbits(group_, k, budgets_.tuple_state_cap)
                            .total_orbits;
    report.elapsed_ms["orbits"] = ms_since(t0);
  } else {
    report.notes.push_back("mid_orbits skipped: N^k exceeds the tuple state cap");
  }

  report.matched = true;
  if (report.lhs_burnside)
    report.matched = report.matched && *report.lhs_burnside == report.rhs_divisions;
  if (report.mid_orbits)
    report.matched = report.matched && *report.mid_orbits == report.rhs_divisions;
  report.elapsed_ms["total"] = ms_since(start);
  return report;
}

IdentityReport verify_identity(const GeneratedGroup &group, unsigned k,
                               const Budgets &budgets) {
  return GroupAnalysis(group, budgets).verify(k);
}

} // namespace orbfix
