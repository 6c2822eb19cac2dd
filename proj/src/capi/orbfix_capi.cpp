#include "orbfix/orbfix.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "orbfix/catalog.hpp"
#include "orbfix/combinat.hpp"
#include "orbfix/divisions.hpp"
#include "orbfix/error.hpp"
#include "orbfix/report.hpp"

struct orbfix_group {
  orbfix::GroupAnalysis analysis;
  std::string warning;
};

struct orbfix_divisions {
  orbfix::DivisionTable table;
};

struct orbfix_report {
  orbfix::IdentityReport report;
};

namespace {

thread_local std::string last_error;

orbfix_status to_status(orbfix::ErrorCode code) {
  using orbfix::ErrorCode;
  switch (code) {
  case ErrorCode::Malformed: return ORBFIX_ERR_MALFORMED;
  case ErrorCode::RepeatedPoint: return ORBFIX_ERR_REPEATED_POINT;
  case ErrorCode::OutOfRange: return ORBFIX_ERR_OUT_OF_RANGE;
  case ErrorCode::DegreeMismatch: return ORBFIX_ERR_DEGREE_MISMATCH;
  case ErrorCode::CapExceeded: return ORBFIX_ERR_CAP_EXCEEDED;
  case ErrorCode::NonIntegerAverage: return ORBFIX_ERR_NON_INTEGER_AVERAGE;
  case ErrorCode::LongRunning: return ORBFIX_ERR_LONG_RUNNING;
  case ErrorCode::Budget: return ORBFIX_ERR_BUDGET;
  case ErrorCode::Insufficient: return ORBFIX_ERR_INSUFFICIENT;
  case ErrorCode::UnknownFamily: return ORBFIX_ERR_UNKNOWN_FAMILY;
  case ErrorCode::BadParameter: return ORBFIX_ERR_BAD_PARAMETER;
  case ErrorCode::FileNotFound: return ORBFIX_ERR_FILE_NOT_FOUND;
  case ErrorCode::FileParse: return ORBFIX_ERR_FILE_PARSE;
  case ErrorCode::Internal: return ORBFIX_ERR_INTERNAL;
  }
  return ORBFIX_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename F> orbfix_status guarded(F &&body) {
  try {
    body();
    return ORBFIX_OK;
  } catch (const orbfix::Error &e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc &) {
    last_error = "out of memory";
    return ORBFIX_ERR_INTERNAL;
  } catch (const std::exception &e) {
    last_error = e.what();
    return ORBFIX_ERR_INTERNAL;
  }
}

orbfix_status invalid(const char *what) {
  last_error = what;
  return ORBFIX_ERR_INVALID_ARGUMENT;
}

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

unsigned cap_or_default(unsigned cap) {
  return cap == 0 ? orbfix::kDefaultStirlingCap : cap;
}

orbfix::Budgets to_budgets(const orbfix_budgets *b) {
  orbfix::Budgets out;
  if (b) {
    out.tuple_state_cap = b->tuple_state_cap;
    out.element_budget = b->element_budget;
    out.representative_budget = b->representative_budget;
    out.stirling_cap = cap_or_default(b->stirling_cap);
    out.threads = b->threads == 0 ? 1 : b->threads;
    out.long_running_ok = b->long_running_ok != 0;
  }
  return out;
}

} // namespace

extern "C" {

const char *orbfix_version(void) { return "0.1.0"; }

const char *orbfix_status_name(orbfix_status status) {
  switch (status) {
  case ORBFIX_OK: return "OK";
  case ORBFIX_ERR_MALFORMED: return "Malformed";
  case ORBFIX_ERR_REPEATED_POINT: return "RepeatedPoint";
  case ORBFIX_ERR_OUT_OF_RANGE: return "OutOfRange";
  case ORBFIX_ERR_DEGREE_MISMATCH: return "DegreeMismatch";
  case ORBFIX_ERR_CAP_EXCEEDED: return "CapExceeded";
  case ORBFIX_ERR_NON_INTEGER_AVERAGE: return "NonIntegerAverage";
  case ORBFIX_ERR_LONG_RUNNING: return "LongRunning";
  case ORBFIX_ERR_BUDGET: return "Budget";
  case ORBFIX_ERR_INSUFFICIENT: return "Insufficient";
  case ORBFIX_ERR_UNKNOWN_FAMILY: return "UnknownFamily";
  case ORBFIX_ERR_BAD_PARAMETER: return "BadParameter";
  case ORBFIX_ERR_FILE_NOT_FOUND: return "FileNotFound";
  case ORBFIX_ERR_FILE_PARSE: return "FileParse";
  case ORBFIX_ERR_INVALID_ARGUMENT: return "InvalidArgument";
  case ORBFIX_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char *orbfix_last_error(void) { return last_error.c_str(); }

void orbfix_string_free(char *s) { std::free(s); }

void orbfix_budgets_default(orbfix_budgets *budgets) {
  if (!budgets)
    return;
  const orbfix::Budgets d;
  budgets->tuple_state_cap = d.tuple_state_cap;
  budgets->element_budget = d.element_budget;
  budgets->representative_budget = d.representative_budget;
  budgets->stirling_cap = d.stirling_cap;
  budgets->threads = d.threads;
  budgets->long_running_ok = d.long_running_ok ? 1 : 0;
}

orbfix_status orbfix_stirling2(unsigned k, unsigned j, unsigned cap, char **out) {
  if (!out)
    return invalid("null output pointer");
  return guarded([&] {
    *out = dup_string(orbfix::to_decimal(orbfix::stirling2(k, j, cap_or_default(cap))));
  });
}

orbfix_status orbfix_bell(unsigned k, unsigned cap, char **out) {
  if (!out)
    return invalid("null output pointer");
  return guarded([&] {
    if (k < 1)
      orbfix::fail(orbfix::ErrorCode::BadParameter, "Bell numbers start at k = 1");
    *out = dup_string(orbfix::to_decimal(orbfix::bell(k, cap_or_default(cap))));
  });
}

orbfix_status orbfix_falling_factorial(unsigned n, unsigned j, char **out) {
  if (!out)
    return invalid("null output pointer");
  return guarded(
      [&] { *out = dup_string(orbfix::to_decimal(orbfix::falling_factorial(n, j))); });
}

orbfix_status orbfix_m24_formula_rhs(unsigned k, unsigned cap, char **out) {
  if (!out)
    return invalid("null output pointer");
  return guarded([&] {
    if (k < 1)
      orbfix::fail(orbfix::ErrorCode::BadParameter, "k must be at least 1");
    *out = dup_string(orbfix::to_decimal(orbfix::m24_formula_rhs(k, cap_or_default(cap))));
  });
}

orbfix_status orbfix_group_create(const char *spec, const orbfix_budgets *budgets,
                                  orbfix_group **out) {
  if (!spec || !out)
    return invalid("null spec or output pointer");
  return guarded([&] {
    auto parsed = orbfix::parse_group_spec(spec);
    *out = new orbfix_group{
        orbfix::GroupAnalysis(orbfix::realize(parsed), to_budgets(budgets)),
        parsed.warning};
  });
}

orbfix_status orbfix_group_from_generators(const char *label, unsigned degree,
                                           const char *const *generators,
                                           size_t count,
                                           const orbfix_budgets *budgets,
                                           orbfix_group **out) {
  if (!label || !out || (count > 0 && !generators))
    return invalid("null label, generators or output pointer");
  return guarded([&] {
    std::vector<orbfix::Permutation> gens;
    for (size_t i = 0; i < count; ++i) {
      if (!generators[i])
        orbfix::fail(orbfix::ErrorCode::Malformed, "null generator string");
      gens.push_back(orbfix::parse_cycles(generators[i], degree));
    }
    *out = new orbfix_group{
        orbfix::GroupAnalysis(orbfix::make_group(label, degree, std::move(gens)),
                              to_budgets(budgets)),
        {}};
  });
}

void orbfix_group_free(orbfix_group *group) { delete group; }

const char *orbfix_group_label(const orbfix_group *group) {
  return group ? group->analysis.group().label.c_str() : nullptr;
}

const char *orbfix_group_warning(const orbfix_group *group) {
  return group && !group->warning.empty() ? group->warning.c_str() : nullptr;
}

unsigned orbfix_group_degree(const orbfix_group *group) {
  return group ? static_cast<unsigned>(group->analysis.group().degree) : 0;
}

orbfix_status orbfix_group_order(orbfix_group *group, char **out) {
  if (!group || !out)
    return invalid("null group or output pointer");
  return guarded([&] { *out = dup_string(orbfix::to_decimal(group->analysis.order())); });
}

orbfix_status orbfix_group_contains(orbfix_group *group, const char *cycles,
                                    int *out) {
  if (!group || !cycles || !out)
    return invalid("null group, permutation or output pointer");
  return guarded([&] {
    auto p = orbfix::parse_cycles(cycles, group->analysis.group().degree);
    *out = orbfix::membership(group->analysis.chain(), p) ? 1 : 0;
  });
}

orbfix_status orbfix_group_transitivity(orbfix_group *group, int *out) {
  if (!group || !out)
    return invalid("null group or output pointer");
  return guarded([&] { *out = group->analysis.transitivity_degree(); });
}

orbfix_status orbfix_burnside_average(orbfix_group *group, unsigned k, char **out) {
  if (!group || !out)
    return invalid("null group or output pointer");
  return guarded([&] {
    *out = dup_string(
        orbfix::to_decimal(orbfix::burnside_average(group->analysis.histogram(), k)));
  });
}

orbfix_status orbfix_orbit_count(orbfix_group *group, unsigned k, char **out) {
  if (!group || !out)
    return invalid("null group or output pointer");
  return guarded([&] {
    auto summary = orbfix::enumerate_orbits(
        group->analysis.group(), k, group->analysis.budgets().tuple_state_cap);
    *out = dup_string(orbfix::to_decimal(summary.total_orbits));
  });
}

orbfix_status orbfix_divisions_compute(orbfix_group *group, unsigned max_j,
                                       orbfix_divisions **out) {
  if (!group || !out)
    return invalid("null group or output pointer");
  return guarded([&] { *out = new orbfix_divisions{group->analysis.divisions(max_j)}; });
}

void orbfix_divisions_free(orbfix_divisions *table) { delete table; }

unsigned orbfix_divisions_computed_up_to(const orbfix_divisions *table) {
  return table ? table->table.computed_up_to : 0;
}

int orbfix_divisions_transitivity(const orbfix_divisions *table) {
  return table ? table->table.transitivity : -1;
}

orbfix_status orbfix_divisions_d(const orbfix_divisions *table, unsigned j,
                                 char **out) {
  if (!table || !out)
    return invalid("null table or output pointer");
  return guarded([&] { *out = dup_string(orbfix::to_decimal(table->table.entry(j).d)); });
}

orbfix_status orbfix_divisions_rhs(const orbfix_divisions *table, unsigned k,
                                   unsigned cap, char **out) {
  if (!table || !out)
    return invalid("null table or output pointer");
  return guarded([&] {
    *out = dup_string(orbfix::to_decimal(
        orbfix::rhs_division_sum(table->table, k, cap_or_default(cap))));
  });
}

orbfix_status orbfix_divisions_to_json(const orbfix_divisions *table, char **out) {
  if (!table || !out)
    return invalid("null table or output pointer");
  return guarded([&] { *out = dup_string(orbfix::to_json(table->table).dump()); });
}

orbfix_status orbfix_verify(orbfix_group *group, unsigned k, orbfix_report **out) {
  if (!group || !out)
    return invalid("null group or output pointer");
  return guarded([&] {
    if (k < 1)
      orbfix::fail(orbfix::ErrorCode::BadParameter, "k must be at least 1");
    *out = new orbfix_report{group->analysis.verify(k)};
  });
}

void orbfix_report_free(orbfix_report *report) { delete report; }

int orbfix_report_matched(const orbfix_report *report) {
  return report && report->report.matched ? 1 : 0;
}

orbfix_status orbfix_report_to_json(const orbfix_report *report, char **out) {
  if (!report || !out)
    return invalid("null report or output pointer");
  return guarded([&] { *out = dup_string(orbfix::to_json(report->report).dump()); });
}

} // extern "C"
