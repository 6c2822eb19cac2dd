/*
 * orbfix: exact orbit and fixed-point counting for permutation group actions.
 *
 * C interface to the orbfix library. Objects are opaque handles created by
 * orbfix_*_create / orbfix_*_compute and released with the matching
 * orbfix_*_free. Every fallible call returns an orbfix_status; on failure a
 * message describing the error is available from orbfix_last_error() on the
 * same thread until the next failing call.
 *
 * Strings returned through `char **out` are allocated by the library and
 * must be released with orbfix_string_free(). Counts are returned as decimal
 * strings because they routinely exceed 64 bits.
 *
 * Points are 1-based everywhere in this interface, and permutations are
 * written in cycle notation such as "(1,2,3)(4,5)".
 */
#ifndef ORBFIX_ORBFIX_H
#define ORBFIX_ORBFIX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ORBFIX_BUILDING_LIBRARY)
#    define ORBFIX_API __declspec(dllexport)
#  else
#    define ORBFIX_API __declspec(dllimport)
#  endif
#else
#  define ORBFIX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum orbfix_status {
  ORBFIX_OK = 0,
  ORBFIX_ERR_MALFORMED = 1,
  ORBFIX_ERR_REPEATED_POINT = 2,
  ORBFIX_ERR_OUT_OF_RANGE = 3,
  ORBFIX_ERR_DEGREE_MISMATCH = 4,
  ORBFIX_ERR_CAP_EXCEEDED = 5,
  ORBFIX_ERR_NON_INTEGER_AVERAGE = 6,
  ORBFIX_ERR_LONG_RUNNING = 7,
  ORBFIX_ERR_BUDGET = 8,
  ORBFIX_ERR_INSUFFICIENT = 9,
  ORBFIX_ERR_UNKNOWN_FAMILY = 10,
  ORBFIX_ERR_BAD_PARAMETER = 11,
  ORBFIX_ERR_FILE_NOT_FOUND = 12,
  ORBFIX_ERR_FILE_PARSE = 13,
  ORBFIX_ERR_INVALID_ARGUMENT = 14, /* null handle or output pointer */
  ORBFIX_ERR_INTERNAL = 15
} orbfix_status;

typedef struct orbfix_group orbfix_group;
typedef struct orbfix_divisions orbfix_divisions;
typedef struct orbfix_report orbfix_report;

typedef struct orbfix_budgets {
  uint64_t tuple_state_cap;       /* largest N^k enumerated exhaustively */
  uint64_t element_budget;        /* largest |G| streamed without long_running_ok */
  uint64_t representative_budget; /* per division level */
  unsigned stirling_cap;          /* largest k for S(k, j) and B_k */
  unsigned threads;               /* workers for Burnside sums */
  int long_running_ok;
} orbfix_budgets;

ORBFIX_API const char *orbfix_version(void);
ORBFIX_API const char *orbfix_status_name(orbfix_status status);
ORBFIX_API const char *orbfix_last_error(void);
ORBFIX_API void orbfix_string_free(char *s);
ORBFIX_API void orbfix_budgets_default(orbfix_budgets *budgets);

/* Combinatorics. A cap of 0 selects the default Stirling cap (64). */
ORBFIX_API orbfix_status orbfix_stirling2(unsigned k, unsigned j, unsigned cap,
                                          char **out);
ORBFIX_API orbfix_status orbfix_bell(unsigned k, unsigned cap, char **out);
ORBFIX_API orbfix_status orbfix_falling_factorial(unsigned n, unsigned j,
                                                  char **out);
ORBFIX_API orbfix_status orbfix_m24_formula_rhs(unsigned k, unsigned cap,
                                                char **out);

/* Groups. `spec` is "S:N", "A:N", "C:N", "D:N", "M11", "M12", "M24" or
 * "file:PATH". `budgets` may be null for the defaults. */
ORBFIX_API orbfix_status orbfix_group_create(const char *spec,
                                             const orbfix_budgets *budgets,
                                             orbfix_group **out);
ORBFIX_API orbfix_status orbfix_group_from_generators(
    const char *label, unsigned degree, const char *const *generators,
    size_t count, const orbfix_budgets *budgets, orbfix_group **out);
ORBFIX_API void orbfix_group_free(orbfix_group *group);

ORBFIX_API const char *orbfix_group_label(const orbfix_group *group);
/* Non-null for degenerate families such as "A:2" (trivial group). */
ORBFIX_API const char *orbfix_group_warning(const orbfix_group *group);
ORBFIX_API unsigned orbfix_group_degree(const orbfix_group *group);
ORBFIX_API orbfix_status orbfix_group_order(orbfix_group *group, char **out);
ORBFIX_API orbfix_status orbfix_group_contains(orbfix_group *group,
                                               const char *cycles, int *out);
ORBFIX_API orbfix_status orbfix_group_transitivity(orbfix_group *group,
                                                   int *out);

/* (1/|G|) sum_g f(g)^k. */
ORBFIX_API orbfix_status orbfix_burnside_average(orbfix_group *group,
                                                 unsigned k, char **out);
/* Number of orbits on k-tuples by exhaustive enumeration. */
ORBFIX_API orbfix_status orbfix_orbit_count(orbfix_group *group, unsigned k,
                                            char **out);

/* Division tables. */
ORBFIX_API orbfix_status orbfix_divisions_compute(orbfix_group *group,
                                                  unsigned max_j,
                                                  orbfix_divisions **out);
ORBFIX_API void orbfix_divisions_free(orbfix_divisions *table);
ORBFIX_API unsigned orbfix_divisions_computed_up_to(const orbfix_divisions *table);
ORBFIX_API int orbfix_divisions_transitivity(const orbfix_divisions *table);
ORBFIX_API orbfix_status orbfix_divisions_d(const orbfix_divisions *table,
                                            unsigned j, char **out);
ORBFIX_API orbfix_status orbfix_divisions_rhs(const orbfix_divisions *table,
                                              unsigned k, unsigned cap,
                                              char **out);
ORBFIX_API orbfix_status orbfix_divisions_to_json(const orbfix_divisions *table,
                                                  char **out);

/* Identity reports: Burnside average, orbit count and division sum for one
 * k. Values over budget are reported as null rather than failing. */
ORBFIX_API orbfix_status orbfix_verify(orbfix_group *group, unsigned k,
                                       orbfix_report **out);
ORBFIX_API void orbfix_report_free(orbfix_report *report);
ORBFIX_API int orbfix_report_matched(const orbfix_report *report);
ORBFIX_API orbfix_status orbfix_report_to_json(const orbfix_report *report,
                                               char **out);

#ifdef __cplusplus
}
#endif

#endif /* ORBFIX_ORBFIX_H */
