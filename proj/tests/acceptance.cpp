// End-to-end acceptance battery.  Runs every verification check once, prints
// one line per criterion, and enforces the runtime budgets the checks are
// expected to meet on desk hardware.  Any failed check, budget overrun, or
// undersized randomized battery fails the run.

#include "affchar/demazure.hpp"
#include "affchar/verify.hpp"

#include <cstdio>
#include <functional>

using affchar::verify::CheckResult;

namespace {

struct Criterion {
  const char* tag;
  CheckResult (*run)();
  double budget_seconds;   // 0 = no budget
  long long min_cases;     // 0 = no floor
};

const Criterion criteria[] = {
    {"P1", affchar::verify::check_sl2_thin_tables, 1, 0},
    {"P2", affchar::verify::check_sl2_thick_tables, 30, 0},
    {"P3", affchar::verify::check_orbit_branching_sweep, 600, 0},
    {"P4", affchar::verify::check_expansion_positivity, 0, 0},
    {"P5", affchar::verify::check_support_bounds, 0, 0},
    {"P6", affchar::verify::check_reciprocity, 300, 0},
    {"P7", affchar::verify::check_character_formula, 300, 0},
    {"P8", affchar::verify::check_critical_quotients, 120, 0},
    {"P9", affchar::verify::check_kostka_stabilization, 120, 0},
    {"P10", affchar::verify::check_operator_properties, 0, 3000},
};

}  // namespace

int main() {
  affchar::progress_sink = [](const std::string&) {};  // keep the report clean
  bool all_ok = true;
  for (const Criterion& c : criteria) {
    CheckResult r = c.run();
    bool ok = r.passed;
    const char* verdict = ok ? "pass" : "FAIL";
    std::string note;
    if (ok && c.budget_seconds > 0 && r.seconds > c.budget_seconds) {
      ok = false;
      verdict = "FAIL";
      note = "  [over budget of " + std::to_string((long long)c.budget_seconds) + "s]";
    }
    if (ok && c.min_cases > 0 && r.cases < c.min_cases) {
      ok = false;
      verdict = "FAIL";
      note = "  [battery too small, need " + std::to_string(c.min_cases) + "]";
    }
    std::printf("%-4s %s: %s (%lld cases, %.2fs)%s\n", c.tag, r.name.c_str(), verdict,
                r.cases, r.seconds, note.c_str());
    if (!r.passed && !r.details.empty()) std::printf("     %s\n", r.details.c_str());
    std::fflush(stdout);
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
