#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "orbfix/group.hpp"

namespace orbfix {

enum class Family {
  Symmetric,
  Alternating,
  Cyclic,
  Dihedral,
  Mathieu11,
  Mathieu12,
  Mathieu24,
  File,
};

struct GroupSpec {
  Family family = Family::Symmetric;
  std::size_t n = 0;          // degree for the S/A/C/D families and Mathieu
  std::filesystem::path path; // Family::File only
  std::string warning;        // set for degenerate (trivial) families

  friend bool operator==(const GroupSpec &, const GroupSpec &) = default;
};

// SPEC := FAMILY ":" INT | "M11" | "M12" | "M24" | "file:" PATH, with
// FAMILY one of S, A, C, D. Throws Error(UnknownFamily),
// Error(BadParameter) or Error(FileNotFound).
GroupSpec parse_group_spec(std::string_view text);

std::string spec_label(const GroupSpec &spec);

GeneratedGroup realize(const GroupSpec &spec);

// Generator file: {"label": string, "degree": int >= 1,
// "generators": [cycle notation, ...]}; no other keys. Throws
// Error(FileNotFound), Error(FileParse), or the cycle parser's errors.
GeneratedGroup load_generator_file(const std::filesystem::path &path);

// Same format from an in-memory document.
GeneratedGroup parse_generator_document(std::string_view json_text);

// Cycle-notation generators of the Mathieu groups (1-based), as embedded.
std::vector<std::string> mathieu_generators(unsigned degree);

} // namespace orbfix
