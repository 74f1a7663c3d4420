// Verification suites.
//
// Each check runs a fixed battery against tables, oracles, or algebraic
// identities and reports pass/fail with a case count and a first-mismatch
// description.  The checks only consume the public library surface; anything
// oracle-flavored lives in affchar::oracles.  Suites group the checks under
// the names the command-line driver accepts; "all" runs every suite.

#pragma once

#include <string>
#include <vector>

namespace affchar::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  long long cases = 0;
  double seconds = 0.0;
  std::string details;  // empty when passed; first mismatch otherwise
};

// sl(2) branching tables for the level-(k+1) expansion of W^(k).
CheckResult check_sl2_thin_tables();
// sl(2) expansions of level-2 thick characters in the level-1 thick basis.
CheckResult check_sl2_thick_tables();
// Branching coefficients against the affine-orbit prediction, swept over
// A1, A2, C2, G2 at levels 1..3.
CheckResult check_orbit_branching_sweep();
// Nonnegativity of branching, thin-expansion, and Kostka coefficients.
CheckResult check_expansion_positivity();
// Thin supports inside the Cherednik lower set, and the level-raising
// coefficientwise bound on thin characters.
CheckResult check_support_bounds();
// Graded reciprocity between projective and thick Weyl characters.
CheckResult check_reciprocity();
// Truncated integrable characters against the character-formula oracle.
CheckResult check_character_formula();
// Single-monomial quotients of Demazure characters at the critical level.
CheckResult check_critical_quotients();
// Kostka stabilization in the level parameter and q->1 multiplicities.
CheckResult check_kostka_stabilization();
// Randomized operator algebra: idempotence, braid relations, reduced-word
// independence, reflection involutivity, orbit/order compatibility, and the
// two lower-set implementations.
CheckResult check_operator_properties();

// Suite names accepted by run_suite, not including "all".
std::vector<std::string> suite_names();

// Runs a named suite ("all" for everything); throws std::invalid_argument on
// an unknown name.
std::vector<CheckResult> run_suite(const std::string& suite);

}  // namespace affchar::verify
