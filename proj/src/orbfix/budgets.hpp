#pragma once

#include <cstdint>

#include "orbfix/combinat.hpp"

namespace orbfix {

// Resource limits shared by the action and divisions engines. Exceeding one
// is reported as an error (or a skipped value in an identity report), never
// as an approximate answer.
struct Budgets {
  // Largest N^k for exhaustive orbit enumeration (one bit per ranked tuple).
  std::uint64_t tuple_state_cap = 100'000'000;
  // Largest group order streamed for a Burnside sum without long_running_ok.
  std::uint64_t element_budget = 50'000'000;
  // Largest number of orbit representatives kept at one division level.
  std::uint64_t representative_budget = 100'000;
  unsigned stirling_cap = kDefaultStirlingCap;
  unsigned threads = 1;
  bool long_running_ok = false;
};

} // namespace orbfix
