#pragma once

#include <cstddef>
#include <string>
#include <deque>

namespace orbk {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  /// First failing instance, empty when passed.
  std::string counterexample;
};

/// Pass/fail per named property. A failure points at an implementation bug,
/// not at bad input.
struct VerificationReport {
  std::string subject;
  std::deque<CheckResult> checks;  // add() hands out references that must survive later adds

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
  CheckResult& add(std::string name);
};

/// Accumulates case counts and keeps the first counterexample.
inline void record(CheckResult& check, bool ok, const std::string& instance) {
  ++check.cases;
  if (!ok && check.passed) {
    check.passed = false;
    check.counterexample = instance;
  }
}

}  // namespace orbk
