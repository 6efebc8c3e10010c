#include <cstdio>
#include <map>

#include "valdim/checks.hpp"

// One line per acceptance criterion; exit status 1 when any criterion fails.
int main(int argc, char** argv) {
  std::optional<std::string> tag;
  if (argc > 1) tag = argv[1];
  valdim::SuiteResult r = valdim::run_suite("acceptance", tag);
  if (!r.warning.empty()) std::printf("warning: %s\n", r.warning.c_str());

  std::map<int, std::vector<const valdim::CheckResult*>> by_criterion;
  for (const auto& c : r.results) by_criterion[c.spec->criterion].push_back(&c);
  for (const auto& [criterion, parts] : by_criterion) {
    bool ok = true;
    double secs = 0;
    std::size_t cases = 0;
    std::string detail;
    for (const auto* p : parts) {
      ok = ok && p->outcome.passed;
      secs += p->seconds;
      cases += p->outcome.cases;
      if (!detail.empty()) detail += "; ";
      detail += (parts.size() > 1 ? p->spec->id + ": " : "") + p->outcome.detail;
    }
    std::printf("criterion %2d: %s  [%.2f s, %zu cases] %s\n", criterion, ok ? "PASS" : "FAIL", secs, cases,
                detail.c_str());
  }
  return r.passed() ? 0 : 1;
}
