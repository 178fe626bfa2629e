// verify.hpp -- named verification suites: every counting recursion is
// checked against its enumeration oracle, the case decomposition against
// exhaustive classification, and the series against their bracketing and
// monotonicity properties. The CLI `verify` subcommand and the acceptance
// suite both run these.
#pragma once

#include <string>
#include <vector>

namespace zimin {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// a vs bifix-free enumeration; b vs context enumeration (two contexts
/// per length: L-independence); bhat enumeration overcount vs b.
/// quick shrinks the enumerated ranges by roughly half the exponent.
std::vector<CheckResult> verify_recursions(bool quick = false);

/// Five-shape decomposition: exhaustive and mutually exclusive over all
/// binary words with bifix "0" up to length 12.
std::vector<CheckResult> verify_cases(bool quick = false);

/// Alternating-series structure: |F|, |G|, |H| strictly decreasing with
/// the stated signs; Z2 partial-sum sandwich; Z3 bound nesting on an
/// (N, M) grid; fhat bracketing and series-level overcount.
std::vector<CheckResult> verify_sandwich(bool quick = false);

/// Reference tables recomputed live and compared digit for digit.
std::vector<CheckResult> verify_tables(bool quick = false);

std::vector<CheckResult> verify_all(bool quick = false);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace zimin
