#include "orbfix/report.hpp"

#include "orbfix/error.hpp"

namespace orbfix {

using nlohmann::json;

namespace {

json optional_count(const std::optional<BigCount> &value) {
  return value ? json(to_decimal(*value)) : json(nullptr);
}

const json &field(const json &doc, const char *key) {
  auto it = doc.find(key);
  if (it == doc.end())
    fail(ErrorCode::FileParse, std::string("missing key \"") + key + "\"");
  return *it;
}

BigCount count_field(const json &doc, const char *key) {
  const auto &value = field(doc, key);
  if (!value.is_string())
    fail(ErrorCode::FileParse, std::string("\"") + key + "\" must be a decimal string");
  return parse_decimal(value.get<std::string>());
}

template <typename T> T get_field(const json &doc, const char *key) {
  try {
    return field(doc, key).get<T>();
  } catch (const json::exception &e) {
    fail(ErrorCode::FileParse, std::string("bad \"") + key + "\": " + e.what());
  }
}

} // namespace

json to_json(const IdentityReport &report) {
  return json{
      {"group", report.group},
      {"degree", report.degree},
      {"order", to_decimal(report.order)},
      {"k", report.k},
      {"lhs_burnside", optional_count(report.lhs_burnside)},
      {"mid_orbits", optional_count(report.mid_orbits)},
      {"rhs_divisions", to_decimal(report.rhs_divisions)},
      {"matched", report.matched},
      {"elapsed_ms", report.elapsed_ms},
      {"notes", report.notes},
  };
}

IdentityReport report_from_json(const json &doc) {
  if (!doc.is_object())
    fail(ErrorCode::FileParse, "report must be a JSON object");
  IdentityReport report;
  report.group = get_field<std::string>(doc, "group");
  report.degree = get_field<std::size_t>(doc, "degree");
  report.order = count_field(doc, "order");
  report.k = get_field<unsigned>(doc, "k");
  for (auto [key, slot] : {std::pair{"lhs_burnside", &report.lhs_burnside},
                           std::pair{"mid_orbits", &report.mid_orbits}})
    if (!field(doc, key).is_null())
      *slot = count_field(doc, key);
  report.rhs_divisions = count_field(doc, "rhs_divisions");
  report.matched = get_field<bool>(doc, "matched");
  report.elapsed_ms = get_field<std::map<std::string, double>>(doc, "elapsed_ms");
  if (doc.contains("notes"))
    report.notes = get_field<std::vector<std::string>>(doc, "notes");
  return report;
}

json to_json(const DivisionTable &table) {
  json entries = json::array();
  for (const auto &e : table.entries) {
    json counts = json::array();
    json lengths = json::array();
    for (const auto &[length, multiplicity] : e.lengths) {
      counts.push_back(
          {{"length", to_decimal(length)}, {"count", to_decimal(multiplicity)}});
      if (e.d <= kMaxExpandedLengths)
        for (BigCount i = 0; i < multiplicity; ++i)
          lengths.push_back(to_decimal(length));
    }
    entries.push_back({
        {"j", e.j},
        {"d", to_decimal(e.d)},
        {"lengths", e.d <= kMaxExpandedLengths ? lengths : json(nullptr)},
        {"length_counts", counts},
    });
  }
  return json{
      {"group", table.group},
      {"degree", table.degree},
      {"order", to_decimal(table.order)},
      {"entries", entries},
      {"t", table.transitivity},
      {"computed_up_to", table.computed_up_to},
      {"trivial_stabilizer_from", table.trivial_stabilizer_from
                                      ? json(*table.trivial_stabilizer_from)
                                      : json(nullptr)},
      {"truncated", table.truncated},
      {"spot_checks", table.spot_checks},
  };
}

DivisionTable table_from_json(const json &doc) {
  if (!doc.is_object())
    fail(ErrorCode::FileParse, "division table must be a JSON object");
  DivisionTable table;
  table.group = get_field<std::string>(doc, "group");
  table.degree = get_field<std::size_t>(doc, "degree");
  table.order = count_field(doc, "order");
  for (const auto &e : field(doc, "entries")) {
    DivisionEntry entry;
    entry.j = get_field<unsigned>(e, "j");
    entry.d = count_field(e, "d");
    for (const auto &c : field(e, "length_counts"))
      entry.lengths[count_field(c, "length")] += count_field(c, "count");
    table.entries.push_back(std::move(entry));
  }
  table.transitivity = get_field<int>(doc, "t");
  table.computed_up_to = get_field<unsigned>(doc, "computed_up_to");
  if (!field(doc, "trivial_stabilizer_from").is_null())
    table.trivial_stabilizer_from =
        get_field<unsigned>(doc, "trivial_stabilizer_from");
  table.truncated = get_field<bool>(doc, "truncated");
  table.spot_checks = get_field<unsigned>(doc, "spot_checks");
  return table;
}

} // namespace orbfix
