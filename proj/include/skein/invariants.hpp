#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skein/cyclo.hpp"
#include "skein/families.hpp"

namespace skein {

/// The Jones polynomial of the family, carried in q = a^-2 (so t = q^2).
/// Normalizes the bracket by the standard writhe and substitutes variables.
Laurent jones_q(const Family& f, int oracle_bound = 24);

/// Span of the Jones polynomial in t-units: bracket span divided by 4. The
/// bracket span of a link is always divisible by 4; anything else is an
/// internal inconsistency.
long long span_t(const Family& f, int oracle_bound = 24);

/// |V(-1)|, evaluated writhe-free: the bracket is parity-shifted to even
/// exponents, rewritten in q and evaluated at q = zeta^3 = i, where the value
/// is a rational integer times a power of i.
BigInt determinant(const Family& f, int oracle_bound = 24);

/// tri = 3 * |V(e^{i pi/3})|^2, also writhe-free. Always a power of 3.
BigInt tricoloring(const Family& f, int oracle_bound = 24);

/// beta = log_3(tri), a positive integer.
int beta(const Family& f, int oracle_bound = 24);

/// True iff X(a) - 1 is divisible by a^12 - 1. Knots only.
bool ganzell_check(const Family& f, int oracle_bound = 24);

/// |beta(f1) - beta(f2)|; at most 1 across any single crossing change or
/// H(2)-move, which is what certificate verification relies on.
int beta_step(const Family& f1, const Family& f2, int oracle_bound = 24);

/// Everything the CLI reports for one family, with discrepancy flags for
/// values that deviate from the closed-form family predictions.
struct InvariantReport {
    std::string family;
    Laurent jones{Var::q};
    std::optional<Laurent> jones_t;  ///< present only when all q-exponents are even
    long long span = 0;
    bool span_integral = true;  ///< false only on internal inconsistency
    BigInt det;
    BigInt tri;
    int beta = 0;
    int components = 0;
    long long writhe = 0;
    std::vector<std::string> flags;
};

InvariantReport make_report(const Family& f, int oracle_bound = 24);

/// JSON with fields exactly: family, jones_q, jones_t (optional), span, det,
/// tri, beta, components, writhe, flags.
std::string report_json(const InvariantReport& r);

std::string report_text(const InvariantReport& r);

}  // namespace skein
