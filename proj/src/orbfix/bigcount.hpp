#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace orbfix {

// Exact nonnegative counts. Group orders, Bell numbers and tuple-space sizes
// leave the 64-bit range quickly, so nothing numeric in the library is ever
// rounded or stored in a fixed-width type once it can grow.
using BigCount = boost::multiprecision::cpp_int;

// Multiset of orbit lengths: length -> multiplicity, longest first.
using LengthMultiset = std::map<BigCount, BigCount, std::greater<>>;

inline std::string to_decimal(const BigCount &value) { return value.str(); }

// Accepts a plain decimal string of digits; throws Error(FileParse) otherwise.
BigCount parse_decimal(const std::string &text);

// Returns true and stores the value when it fits into 64 bits.
inline bool fits_u64(const BigCount &value, std::uint64_t &out) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max())
    return false;
  out = static_cast<std::uint64_t>(value);
  return true;
}

BigCount ipow(std::uint64_t base, unsigned exponent);

} // namespace orbfix
