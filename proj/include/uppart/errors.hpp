#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace uppart {

/// A brute-force or enumeration request exceeded its configured size cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sequence handed to a congruence check does not meet the check's
/// preconditions. `index` is the first offending n.
class HypothesisViolation : public std::runtime_error {
 public:
  HypothesisViolation(const std::string& what, std::int64_t index)
      : std::runtime_error(what), index_(index) {}
  std::int64_t index() const { return index_; }

 private:
  std::int64_t index_;
};

}  // namespace uppart
