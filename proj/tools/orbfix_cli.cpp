// Command-line front end over the orbfix C API.
//
// Exit codes: 0 success (every computed identity pair matched), 2 identity
// mismatch, 3 budget or cap exceeded, 4 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbfix/orbfix.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInput = 4;

using json = nlohmann::json;

int exit_code_for(orbfix_status status) {
  switch (status) {
  case ORBFIX_OK: return kExitOk;
  case ORBFIX_ERR_CAP_EXCEEDED:
  case ORBFIX_ERR_LONG_RUNNING:
  case ORBFIX_ERR_BUDGET:
  case ORBFIX_ERR_INSUFFICIENT: return kExitBudget;
  case ORBFIX_ERR_NON_INTEGER_AVERAGE: return kExitMismatch;
  case ORBFIX_ERR_INTERNAL: return kExitInternal;
  default: return kExitInput;
  }
}

// Carries a failed C call up to main().
struct CallFailed {
  orbfix_status status;
  std::string message;
};

void check(orbfix_status status) {
  if (status != ORBFIX_OK)
    throw CallFailed{status, std::string(orbfix_status_name(status)) + ": " +
                                 orbfix_last_error()};
}

// Takes ownership of a library-allocated string.
std::string take(char *s) {
  std::string out(s ? s : "");
  orbfix_string_free(s);
  return out;
}

struct GroupDeleter {
  void operator()(orbfix_group *g) const { orbfix_group_free(g); }
};
struct TableDeleter {
  void operator()(orbfix_divisions *t) const { orbfix_divisions_free(t); }
};
struct ReportDeleter {
  void operator()(orbfix_report *r) const { orbfix_report_free(r); }
};
using GroupPtr = std::unique_ptr<orbfix_group, GroupDeleter>;
using TablePtr = std::unique_ptr<orbfix_divisions, TableDeleter>;
using ReportPtr = std::unique_ptr<orbfix_report, ReportDeleter>;

struct Options {
  std::string group;
  std::string k_range;
  unsigned k = 0;
  std::optional<unsigned> j;
  unsigned max_j = 0;
  bool table = false;
  std::string format = "text";
  std::string output;
  orbfix_budgets budgets{};
};

GroupPtr open_group(const Options &opt) {
  orbfix_group *raw = nullptr;
  check(orbfix_group_create(opt.group.c_str(), &opt.budgets, &raw));
  GroupPtr group(raw);
  if (const char *warning = orbfix_group_warning(group.get()))
    std::cerr << "warning: " << warning << "\n";
  return group;
}

// Writes to --output when given, standard output otherwise.
class Sink {
public:
  explicit Sink(const std::string &path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_)
        throw CallFailed{ORBFIX_ERR_FILE_NOT_FOUND, "cannot write " + path};
    }
  }
  std::ostream &out() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

std::pair<unsigned, unsigned> parse_k_range(const std::string &text) {
  auto bad = [&] {
    return CallFailed{ORBFIX_ERR_BAD_PARAMETER,
                      "bad k range \"" + text + "\" (expected K or A..B)"};
  };
  auto to_uint = [&](const std::string &s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos ||
        s.size() > 6)
      throw bad();
    return static_cast<unsigned>(std::stoul(s));
  };
  const auto dots = text.find("..");
  unsigned lo = 0, hi = 0;
  if (dots == std::string::npos) {
    lo = hi = to_uint(text);
  } else {
    lo = to_uint(text.substr(0, dots));
    hi = to_uint(text.substr(dots + 2));
  }
  if (lo < 1 || hi < lo)
    throw bad();
  return {lo, hi};
}

std::string value_or_dash(const json &v) {
  return v.is_null() ? std::string("-") : v.get<std::string>();
}

int cmd_stirling(const Options &opt) {
  const unsigned cap = opt.budgets.stirling_cap;
  if (opt.j) {
    char *s = nullptr;
    check(orbfix_stirling2(opt.k, *opt.j, cap, &s));
    std::cout << take(s) << "\n";
    return kExitOk;
  }
  const unsigned first = opt.table ? 1 : opt.k;
  for (unsigned k = first; k <= opt.k; ++k) {
    std::string row;
    // Row 0 is just S(0,0) = 1; other rows start at j = 1.
    for (unsigned j = k == 0 ? 0 : 1; j <= k; ++j) {
      char *s = nullptr;
      check(orbfix_stirling2(k, j, cap, &s));
      row += (row.empty() ? "" : " ") + take(s);
    }
    std::cout << row << "\n";
  }
  return kExitOk;
}

int cmd_bell(const Options &opt) {
  char *s = nullptr;
  check(orbfix_bell(opt.k, opt.budgets.stirling_cap, &s));
  std::cout << take(s) << "\n";
  return kExitOk;
}

int cmd_info(const Options &opt) {
  auto group = open_group(opt);
  char *order = nullptr;
  check(orbfix_group_order(group.get(), &order));
  int t = 0;
  check(orbfix_group_transitivity(group.get(), &t));
  json info{{"group", orbfix_group_label(group.get())},
            {"degree", orbfix_group_degree(group.get())},
            {"order", take(order)},
            {"t", t}};
  Sink sink(opt.output);
  if (opt.format == "json") {
    sink.out() << info.dump() << "\n";
  } else if (opt.format == "csv") {
    sink.out() << "group,degree,order,t\n"
               << info["group"].get<std::string>() << "," << info["degree"]
               << "," << info["order"].get<std::string>() << "," << t << "\n";
  } else {
    sink.out() << "group:  " << info["group"].get<std::string>() << "\n"
               << "degree: " << info["degree"] << "\n"
               << "order:  " << info["order"].get<std::string>() << "\n"
               << "t:      " << t << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options &opt) {
  const auto [lo, hi] = parse_k_range(opt.k_range);
  auto group = open_group(opt);
  Sink sink(opt.output);
  auto &out = sink.out();
  if (opt.format == "csv")
    out << "group,degree,order,k,lhs_burnside,mid_orbits,rhs_divisions,matched\n";

  bool all_matched = true;
  for (unsigned k = lo; k <= hi; ++k) {
    orbfix_report *raw = nullptr;
    check(orbfix_verify(group.get(), k, &raw));
    ReportPtr report(raw);
    char *text = nullptr;
    check(orbfix_report_to_json(report.get(), &text));
    const auto doc = json::parse(take(text));
    const bool matched = orbfix_report_matched(report.get()) != 0;
    all_matched = all_matched && matched;

    if (opt.format == "json") {
      out << doc.dump() << "\n";
    } else if (opt.format == "csv") {
      auto cell = [](const json &v) {
        return v.is_null() ? std::string() : v.get<std::string>();
      };
      out << doc["group"].get<std::string>() << "," << doc["degree"] << ","
          << doc["order"].get<std::string>() << "," << k << ","
          << cell(doc["lhs_burnside"]) << "," << cell(doc["mid_orbits"]) << ","
          << doc["rhs_divisions"].get<std::string>() << ","
          << (matched ? "true" : "false") << "\n";
    } else {
      out << doc["group"].get<std::string>() << " k=" << k
          << "  burnside=" << value_or_dash(doc["lhs_burnside"])
          << "  orbits=" << value_or_dash(doc["mid_orbits"])
          << "  divisions=" << doc["rhs_divisions"].get<std::string>() << "  "
          << (!matched                                              ? "MISMATCH"
              : doc["lhs_burnside"].is_null() && doc["mid_orbits"].is_null()
                  ? "UNCHECKED"
                  : "MATCH")
          << "\n";
      for (const auto &note : doc["notes"])
        out << "    note: " << note.get<std::string>() << "\n";
    }
    out.flush();
    if (!matched)
      std::cerr << "identity mismatch for " << doc["group"].get<std::string>()
                << " at k=" << k << "\n";
  }
  return all_matched ? kExitOk : kExitMismatch;
}

int cmd_divisions(const Options &opt) {
  auto group = open_group(opt);
  orbfix_divisions *raw = nullptr;
  check(orbfix_divisions_compute(group.get(), opt.max_j, &raw));
  TablePtr table(raw);
  char *text = nullptr;
  check(orbfix_divisions_to_json(table.get(), &text));
  const auto doc = json::parse(take(text));

  Sink sink(opt.output);
  auto &out = sink.out();
  if (opt.format == "json") {
    out << doc.dump() << "\n";
  } else if (opt.format == "csv") {
    out << "j,d,length_counts\n";
    for (const auto &e : doc["entries"]) {
      std::string counts;
      for (const auto &c : e["length_counts"])
        counts += (counts.empty() ? "" : ";") + c["length"].get<std::string>() +
                  "x" + c["count"].get<std::string>();
      out << e["j"] << "," << e["d"].get<std::string>() << "," << counts << "\n";
    }
  } else {
    out << doc["group"].get<std::string>() << "  degree " << doc["degree"]
        << "  order " << doc["order"].get<std::string>() << "  t = " << doc["t"]
        << "\n";
    for (const auto &e : doc["entries"]) {
      out << "  j=" << e["j"] << "  d=" << e["d"].get<std::string>()
          << "  lengths:";
      for (const auto &c : e["length_counts"])
        out << " " << c["length"].get<std::string>() << " x "
            << c["count"].get<std::string>();
      out << "\n";
    }
    if (doc["truncated"].get<bool>())
      out << "  (truncated by the representative budget)\n";
    if (!doc["trivial_stabilizer_from"].is_null())
      out << "  stabilizers trivial from j=" << doc["trivial_stabilizer_from"]
          << " (" << doc["spot_checks"] << " spot checks)\n";
  }

  int code = doc["truncated"].get<bool>() ? kExitBudget : kExitOk;
  if (doc["group"] == "M24") {
    // Cross-check the table against the closed M24 formula.
    auto &log = opt.format == "text" ? out : std::cerr;
    const unsigned up_to = orbfix_divisions_computed_up_to(table.get());
    for (unsigned k = 1; k <= up_to; ++k) {
      char *a = nullptr;
      char *b = nullptr;
      check(orbfix_divisions_rhs(table.get(), k, opt.budgets.stirling_cap, &a));
      check(orbfix_m24_formula_rhs(k, opt.budgets.stirling_cap, &b));
      const auto from_table = take(a);
      const auto from_formula = take(b);
      const bool pass = from_table == from_formula;
      log << "m24 formula k=" << k << " " << (pass ? "PASS" : "FAIL") << " "
          << from_table << (pass ? " == " : " != ") << from_formula << "\n";
      if (!pass)
        code = kExitMismatch;
    }
  }
  return code;
}

void add_budget_options(CLI::App *cmd, Options &opt) {
  cmd->add_option("--state-cap", opt.budgets.tuple_state_cap,
                  "Largest N^k for exhaustive orbit enumeration");
  cmd->add_option("--element-budget", opt.budgets.element_budget,
                  "Largest group order streamed for Burnside sums");
  cmd->add_option("--rep-budget", opt.budgets.representative_budget,
                  "Largest number of representatives per division level");
  cmd->add_option("--stirling-cap", opt.budgets.stirling_cap,
                  "Largest k for Stirling and Bell numbers");
  cmd->add_option("--threads", opt.budgets.threads, "Worker threads");
  cmd->add_flag("--long-running-ok", opt.budgets.long_running_ok,
                "Allow computations beyond the element budget");
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--output", opt.output, "Write output to this file");
}

} // namespace

int main(int argc, char **argv) {
  Options opt;
  orbfix_budgets_default(&opt.budgets);
  opt.budgets.threads = std::max(1u, std::thread::hardware_concurrency());

  CLI::App app{"Exact orbit and fixed-point counting for permutation groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", orbfix_version());

  auto *stirling = app.add_subcommand("stirling", "Stirling numbers S(k, j)");
  stirling->add_option("--k", opt.k, "Row k")->required();
  stirling->add_option("--j", opt.j, "Single entry S(k, j)");
  stirling->add_flag("--table", opt.table, "Print rows 1..k");
  stirling->add_option("--stirling-cap", opt.budgets.stirling_cap, "Largest k");

  auto *bell = app.add_subcommand("bell", "Bell number B_k");
  bell->add_option("--k", opt.k, "k >= 1")->required();
  bell->add_option("--stirling-cap", opt.budgets.stirling_cap, "Largest k");

  auto *info = app.add_subcommand("info", "Degree, order and transitivity");
  info->add_option("group", opt.group, "Group spec")->required();
  add_budget_options(info, opt);

  auto *verify = app.add_subcommand(
      "verify", "Burnside average, orbit count and division sum per k");
  verify->add_option("--group", opt.group, "Group spec")->required();
  verify->add_option("--k", opt.k_range, "k or range A..B")->required();
  add_budget_options(verify, opt);

  auto *divisions = app.add_subcommand("divisions", "Division table d_j");
  divisions->add_option("--group", opt.group, "Group spec")->required();
  divisions->add_option("--max-j", opt.max_j, "Largest j")->required();
  add_budget_options(divisions, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (stirling->parsed())
      return cmd_stirling(opt);
    if (bell->parsed())
      return cmd_bell(opt);
    if (info->parsed())
      return cmd_info(opt);
    if (verify->parsed())
      return cmd_verify(opt);
    if (divisions->parsed())
      return cmd_divisions(opt);
  } catch (const CallFailed &e) {
    std::cerr << "error: " << e.message << "\n";
    return exit_code_for(e.status);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
