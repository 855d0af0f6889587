#pragma once

#include <functional>
#include <string>
#include <vector>

#include "skein/invariants.hpp"

namespace skein {

struct SuiteOptions {
    int max_n = 15;            ///< torus-jones polynomial range (spans always sweep to 25)
    int max_crossings = 14;    ///< oracle-equivalence grid bound
    std::vector<int> q_list;   ///< tq-bracket twist parameters; default 1,3,...,15
    int pair_count = 20;       ///< tri-multiplicativity sample size
    int oracle_bound = 24;
};

enum class CaseStatus { pass, fail, flag };

struct SuiteCase {
    std::string label;
    CaseStatus status = CaseStatus::pass;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<SuiteCase> cases;

    int count(CaseStatus s) const;
    bool any_fail() const { return count(CaseStatus::fail) > 0; }
};

/// A named regression suite: a label, what it checks, and a runner. The
/// manifest is data: new checks mean a new entry, not engine changes.
struct SuiteDef {
    std::string name;
    std::string description;
    std::function<SuiteResult(const SuiteOptions&)> run;
};

const std::vector<SuiteDef>& suite_manifest();

/// Runs one suite by name; throws Error for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

/// Closed form of the torus Jones polynomial in q: the alternating-series
/// formula V(T(2,n)) = (-1)^(n+1) t^((n-1)/2) (t + 1 - t sum (-t)^k).
Laurent torus_jones_closed_form(int n);

/// Printed closed-form bracket vector of the tangle T_q (four-term f entry);
/// deviates from the matrix recursion in interior terms, which the tq-bracket
/// suite reports as flags.
BracketVector tq_printed_vector(int q);

/// Deterministic family grid with standard diagrams of at most max_crossings
/// crossings, used by the oracle-equivalence sweep. Includes links, connected
/// sums and split unions.
std::vector<Family> oracle_grid(int max_crossings);

/// Deterministic knot grid for the divisibility sweep: torus knots to 25,
/// twist knots to 8+8, pretzel knots on [-5,5]^3, K_q to 9, K_{q,r} to 9+9.
std::vector<Family> knot_grid();

}  // namespace skein
