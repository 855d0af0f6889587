#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <string_view>

#include "skein/errors.hpp"

namespace skein {

using BigInt = boost::multiprecision::cpp_int;

/// Formal variable a polynomial is carried in.
///
/// Brackets live in `a`, the Jones polynomial in `q = a^-2` (so that links with
/// an even number of components, whose Jones polynomial uses half-integer
/// powers of t, still have integer exponents), and `t = q^2` is a display-only
/// variable used when every q-exponent is even.
enum class Var : unsigned char { a, q, t };

const char* var_name(Var v);

/// Exact single-variable Laurent polynomial over arbitrary-precision integers.
///
/// Invariants: no stored coefficient is zero; the zero polynomial is the empty
/// term map. Values are immutable in spirit: all operations return fresh
/// polynomials, so sharing across threads is safe.
class Laurent {
public:
    using Terms = std::map<int, BigInt>;

    explicit Laurent(Var v = Var::a) : var_(v) {}

    static Laurent monomial(Var v, BigInt coeff, int exp);
    static Laurent constant(Var v, BigInt c) { return monomial(v, std::move(c), 0); }
    /// The loop value delta = -a^2 - a^-2.
    static Laurent delta();

    Var var() const { return var_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    /// Coefficient of the given exponent (zero if absent).
    BigInt coeff(int exp) const;

    int min_exp() const;  ///< throws ZeroPolynomialError on the zero polynomial
    int max_exp() const;  ///< throws ZeroPolynomialError on the zero polynomial

    /// Difference between the highest and lowest exponents.
    /// The zero polynomial has no span; that is an error, not zero.
    int span() const;

    Laurent operator+(const Laurent& rhs) const;
    Laurent operator-(const Laurent& rhs) const;
    Laurent operator*(const Laurent& rhs) const;
    Laurent operator-() const;
    Laurent& operator+=(const Laurent& rhs) { return *this = *this + rhs; }
    Laurent& operator-=(const Laurent& rhs) { return *this = *this - rhs; }
    Laurent& operator*=(const Laurent& rhs) { return *this = *this * rhs; }

    bool operator==(const Laurent& rhs) const { return var_ == rhs.var_ && terms_ == rhs.terms_; }
    bool operator!=(const Laurent& rhs) const { return !(*this == rhs); }

    /// Change of variable y = x^k: each term c*x^e becomes c*y^(e/k).
    ///
    /// For |k| = 1 this is exponent negation (mirroring) or a plain retag. For
    /// |k| > 1 every exponent must be divisible by k; a violation reports the
    /// offending exponent. Used for mirroring (k = -1), the bracket-to-Jones
    /// substitution q = a^-2 (k = -2) and the t-display t = q^2 (k = 2).
    Laurent substitute(int k, Var new_var) const;

    /// Mirror image: a -> a^-1 in the same variable.
    Laurent mirrored() const { return substitute(-1, var_); }

    /// True iff the polynomial is h * (a^12 - 1) for some Laurent polynomial h.
    ///
    /// Shifts by a monomial to an ordinary polynomial with nonzero constant
    /// term and long-divides; monomial shifts do not affect divisibility by
    /// a^12 - 1 up to units.
    bool divisible_by_a12_minus_1() const;

    /// Renders as exponent-descending `coeff*x^exp` terms, e.g.
    /// "-1*a^5 - 1*a^-3 + 1*a^-7". The zero polynomial renders as "0".
    std::string str() const;

    /// Parses the exact format produced by str().
    static Laurent parse(std::string_view text);

private:
    Var var_;
    Terms terms_;

    void add_term(int exp, const BigInt& c);
};

}  // namespace skein
