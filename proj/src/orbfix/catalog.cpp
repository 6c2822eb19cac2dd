#include "orbfix/catalog.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "orbfix/error.hpp"

namespace orbfix {

namespace {

// Standard generators of M11 < M12 on 11 and 12 points and of M24 on 24
// points, in the form distributed with the GAP library (MathieuGroup).
// Nothing here is trusted: the test suites recompute the orders
// 7920, 95040 and 244823040 and the transitivity degrees 4, 5 and 5.
constexpr const char *kM11[] = {
    "(1,2,3,4,5,6,7,8,9,10,11)",
    "(3,7,11,8)(4,10,5,6)",
};
constexpr const char *kM12[] = {
    "(1,2,3,4,5,6,7,8,9,10,11)",
    "(3,7,11,8)(4,10,5,6)",
    "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)",
};
constexpr const char *kM24[] = {
    "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
    "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)",
    "(1,24)(2,23)(3,12)(4,16)(5,18)(6,10)(7,20)(8,14)(9,21)(11,17)(13,22)"
    "(15,19)",
};

std::string cycle_1_to(std::size_t n) {
  std::string out = "(";
  for (std::size_t i = 1; i <= n; ++i)
    out += (i > 1 ? "," : "") + std::to_string(i);
  return out + ")";
}

std::vector<Permutation> parse_all(const std::vector<std::string> &words,
                                   std::size_t degree) {
  std::vector<Permutation> gens;
  for (const auto &w : words)
    gens.push_back(parse_cycles(w, degree));
  return gens;
}

} // namespace

std::vector<std::string> mathieu_generators(unsigned degree) {
  switch (degree) {
  case 11: return {std::begin(kM11), std::end(kM11)};
  case 12: return {std::begin(kM12), std::end(kM12)};
  case 24: return {std::begin(kM24), std::end(kM24)};
  default:
    fail(ErrorCode::BadParameter,
         "no Mathieu group of degree " + std::to_string(degree));
  }
}

GroupSpec parse_group_spec(std::string_view text) {
  GroupSpec spec;
  if (text == "M11" || text == "M12" || text == "M24") {
    spec.n = text == "M11" ? 11 : text == "M12" ? 12 : 24;
    spec.family = spec.n == 11   ? Family::Mathieu11
                  : spec.n == 12 ? Family::Mathieu12
                                 : Family::Mathieu24;
    return spec;
  }
  if (text.starts_with("file:")) {
    spec.family = Family::File;
    spec.path = std::filesystem::path(std::string(text.substr(5)));
    if (spec.path.empty() || !std::filesystem::is_regular_file(spec.path))
      fail(ErrorCode::FileNotFound,
           "generator file not found: " + spec.path.string());
    return spec;
  }

  const auto colon = text.find(':');
  const auto family = text.substr(0, colon);
  if (family == "S")
    spec.family = Family::Symmetric;
  else if (family == "A")
    spec.family = Family::Alternating;
  else if (family == "C")
    spec.family = Family::Cyclic;
  else if (family == "D")
    spec.family = Family::Dihedral;
  else
    fail(ErrorCode::UnknownFamily,
         "unknown group family in \"" + std::string(text) + "\"");
  if (colon == std::string_view::npos)
    fail(ErrorCode::BadParameter,
         "missing degree in \"" + std::string(text) + "\"");

  const auto digits = text.substr(colon + 1);
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (digits.empty() || ec != std::errc() ||
      ptr != digits.data() + digits.size() || n < 1)
    fail(ErrorCode::BadParameter,
         "bad degree in \"" + std::string(text) + "\"");
  if (spec.family == Family::Dihedral && n < 3)
    fail(ErrorCode::BadParameter, "dihedral groups need N >= 3");
  spec.n = n;

  const bool trivial = (spec.family == Family::Symmetric && n == 1) ||
                       (spec.family == Family::Alternating && n <= 2) ||
                       (spec.family == Family::Cyclic && n == 1);
  if (trivial)
    spec.warning = spec_label(spec) + " is the trivial group";
  return spec;
}

std::string spec_label(const GroupSpec &spec) {
  switch (spec.family) {
  case Family::Symmetric: return "S:" + std::to_string(spec.n);
  case Family::Alternating: return "A:" + std::to_string(spec.n);
  case Family::Cyclic: return "C:" + std::to_string(spec.n);
  case Family::Dihedral: return "D:" + std::to_string(spec.n);
  case Family::Mathieu11: return "M11";
  case Family::Mathieu12: return "M12";
  case Family::Mathieu24: return "M24";
  case Family::File: return "file:" + spec.path.string();
  }
  return "?";
}

GeneratedGroup realize(const GroupSpec &spec) {
  const std::size_t n = spec.n;
  std::vector<std::string> words;
  switch (spec.family) {
  case Family::Symmetric:
    if (n >= 2)
      words = {"(1,2)", cycle_1_to(n)};
    break;
  case Family::Alternating:
    for (std::size_t k = 3; k <= n; ++k)
      words.push_back("(1,2," + std::to_string(k) + ")");
    break;
  case Family::Cyclic:
    if (n >= 2)
      words = {cycle_1_to(n)};
    break;
  case Family::Dihedral: {
    std::string reflection;
    for (std::size_t i = 1; i < n + 1 - i; ++i)
      reflection += "(" + std::to_string(i) + "," + std::to_string(n + 1 - i) + ")";
    words = {cycle_1_to(n), reflection};
    break;
  }
  case Family::Mathieu11:
  case Family::Mathieu12:
  case Family::Mathieu24:
    words = mathieu_generators(static_cast<unsigned>(n));
    break;
  case Family::File:
    return load_generator_file(spec.path);
  }
  return make_group(spec_label(spec), n, parse_all(words, n));
}

GeneratedGroup parse_generator_document(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error &e) {
    fail(ErrorCode::FileParse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object())
    fail(ErrorCode::FileParse, "generator file must hold a JSON object");
  for (const auto &[key, value] : doc.items())
    if (key != "label" && key != "degree" && key != "generators")
      fail(ErrorCode::FileParse, "unknown key \"" + key + "\"");
  if (!doc.contains("label") || !doc["label"].is_string())
    fail(ErrorCode::FileParse, "\"label\" must be a string");
  const auto degree = doc.find("degree");
  if (degree == doc.end() || !degree->is_number_integer() ||
      degree->get<std::int64_t>() < 1 || degree->get<std::int64_t>() > 65536)
    fail(ErrorCode::FileParse, "\"degree\" must be an integer in [1, 65536]");
  if (!doc.contains("generators") || !doc["generators"].is_array())
    fail(ErrorCode::FileParse, "\"generators\" must be an array");

  const auto n = static_cast<std::size_t>(degree->get<std::int64_t>());
  std::vector<Permutation> gens;
  for (const auto &g : doc["generators"]) {
    if (!g.is_string())
      fail(ErrorCode::FileParse, "generators must be cycle-notation strings");
    gens.push_back(parse_cycles(g.get<std::string>(), n));
  }
  return make_group(doc["label"].get<std::string>(), n, std::move(gens));
}

GeneratedGroup load_generator_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ErrorCode::FileNotFound, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_generator_document(buffer.str());
}

} // namespace orbfix
