#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "valdim/report.hpp"

namespace valdim {

struct CheckOutcome {
  bool passed = true;
  std::size_t cases = 0;  // comparisons or instances examined
  std::string detail;     // first failure, or a summary
};

struct CheckSpec {
  std::string id;  // "6.lex"
  int criterion = 0;
  std::string title;
  std::vector<std::string> tags;
  std::function<CheckOutcome()> run;
};

struct CheckResult {
  const CheckSpec* spec = nullptr;
  CheckOutcome outcome;
  double seconds = 0;
};

struct SuiteResult {
  std::string suite;
  std::optional<std::string> tag;
  std::vector<CheckResult> results;
  std::string warning;  // set when the selection is empty
  bool passed() const;
};

const std::vector<CheckSpec>& check_catalogue();
// A tag selects checks carrying it, the criterion number ("6") or the check id ("6.lex").
// No tag, "all" or "acceptance" selects everything.
std::vector<const CheckSpec*> select_checks(const std::optional<std::string>& tag);
CheckResult run_check(const CheckSpec& spec);
// Only the "acceptance" suite exists; throws InvalidArgument for other names.
SuiteResult run_suite(const std::string& suite, const std::optional<std::string>& tag);

Json suite_payload(const SuiteResult& r);

}  // namespace valdim
