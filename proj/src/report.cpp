#include "orbk/report.hpp"

#include <algorithm>

namespace orbk {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

CheckResult& VerificationReport::add(std::string name) {
  checks.push_back(CheckResult{std::move(name)});
  return checks.back();
}

}  // namespace orbk
