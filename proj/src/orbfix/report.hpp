#pragma once

#include <string>

#include <json.hpp>

#include "orbfix/divisions.hpp"

namespace orbfix {

// JSON forms of reports and division tables. Counts that can exceed 64 bits
// travel as decimal strings.
//
// Report: {"group", "degree", "order", "k", "lhs_burnside": string|null,
//          "mid_orbits": string|null, "rhs_divisions", "matched",
//          "elapsed_ms": {...}, "notes": [...]}
// Table:  {"group", "degree", "order", "entries": [{"j", "d", "lengths",
//          "length_counts"}], "t", "computed_up_to",
//          "trivial_stabilizer_from", "truncated", "spot_checks"}
//
// "lengths" lists the full multiset of sub-orbit lengths when d is at most
// kMaxExpandedLengths and is null beyond that; "length_counts" always
// carries the multiset as [{"length", "count"}].
inline constexpr std::size_t kMaxExpandedLengths = 10'000;

nlohmann::json to_json(const IdentityReport &report);
nlohmann::json to_json(const DivisionTable &table);

// Throw Error(FileParse) on schema violations.
IdentityReport report_from_json(const nlohmann::json &doc);
DivisionTable table_from_json(const nlohmann::json &doc);

} // namespace orbfix
