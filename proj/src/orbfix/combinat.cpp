#include "orbfix/combinat.hpp"

#include <mutex>
#include <string>

#include "orbfix/error.hpp"

namespace orbfix {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::Malformed: return "Malformed";
  case ErrorCode::RepeatedPoint: return "RepeatedPoint";
  case ErrorCode::OutOfRange: return "OutOfRange";
  case ErrorCode::DegreeMismatch: return "DegreeMismatch";
  case ErrorCode::CapExceeded: return "CapExceeded";
  case ErrorCode::NonIntegerAverage: return "NonIntegerAverage";
  case ErrorCode::LongRunning: return "LongRunning";
  case ErrorCode::Budget: return "Budget";
  case ErrorCode::Insufficient: return "Insufficient";
  case ErrorCode::UnknownFamily: return "UnknownFamily";
  case ErrorCode::BadParameter: return "BadParameter";
  case ErrorCode::FileNotFound: return "FileNotFound";
  case ErrorCode::FileParse: return "FileParse";
  case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

BigCount parse_decimal(const std::string &text) {
  if (text.empty() ||
      text.find_first_not_of("0123456789") != std::string::npos)
    fail(ErrorCode::FileParse, "not a decimal count: \"" + text + "\"");
  return BigCount(text);
}

BigCount ipow(std::uint64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigCount(base), exponent);
}

StirlingTable::StirlingTable(unsigned max_k) : max_k_(max_k) {
  rows_.resize(max_k + 1);
  rows_[0] = {BigCount(1)};
  for (unsigned k = 1; k <= max_k; ++k) {
    auto &row = rows_[k];
    const auto &prev = rows_[k - 1];
    row.assign(k + 1, BigCount(0));
    for (unsigned j = 1; j <= k; ++j) {
      BigCount same = j < prev.size() ? BigCount(j * prev[j]) : BigCount(0);
      row[j] = same + prev[j - 1];
    }
  }
}

const BigCount &StirlingTable::at(unsigned k, unsigned j) const {
  static const BigCount zero(0);
  if (k > max_k_)
    fail(ErrorCode::CapExceeded, "Stirling row " + std::to_string(k) +
                                     " beyond table size " +
                                     std::to_string(max_k_));
  return j <= k ? rows_[k][j] : zero;
}

std::shared_ptr<const StirlingTable> stirling_table(unsigned max_k) {
  static std::mutex mutex;
  static std::shared_ptr<const StirlingTable> cached;
  std::lock_guard lock(mutex);
  if (!cached || cached->max_k() < max_k)
    cached = std::make_shared<const StirlingTable>(
        std::max(max_k, kDefaultStirlingCap));
  return cached;
}

namespace {

void check_cap(unsigned k, unsigned cap) {
  if (k > cap)
    fail(ErrorCode::CapExceeded, "k = " + std::to_string(k) +
                                     " exceeds the Stirling cap " +
                                     std::to_string(cap));
}

} // namespace

BigCount stirling2(unsigned k, unsigned j, unsigned cap) {
  check_cap(k, cap);
  return stirling_table(k)->at(k, j);
}

BigCount bell(unsigned k, unsigned cap) {
  check_cap(k, cap);
  auto table = stirling_table(k);
  BigCount sum = 0;
  for (unsigned j = 0; j <= k; ++j)
    sum += table->at(k, j);
  return sum;
}

BigCount falling_factorial(unsigned n, unsigned j) {
  if (j > n)
    return 0;
  BigCount result = 1;
  for (unsigned i = 0; i < j; ++i)
    result *= n - i;
  return result;
}

BigCount factorial(unsigned n) { return falling_factorial(n, n); }

bool check_generating_identity(unsigned n, unsigned k, unsigned cap) {
  check_cap(k, cap);
  auto table = stirling_table(k);
  BigCount rhs = 0;
  for (unsigned j = 1; j <= k; ++j)
    rhs += table->at(k, j) * falling_factorial(n, j);
  return ipow(n, k) == rhs;
}

} // namespace orbfix
