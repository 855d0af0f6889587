#include "skein/laurent.hpp"

#include <cctype>
#include <vector>

namespace skein {

const char* var_name(Var v) {
    switch (v) {
        case Var::a: return "a";
        case Var::q: return "q";
        case Var::t: return "t";
    }
    return "?";
}

static void require_same_var(Var l, Var r, const char* op) {
    if (l != r) {
        throw VarMismatchError(std::string("cannot ") + op + " a polynomial in " + var_name(l) +
                               " with a polynomial in " + var_name(r));
    }
}

Laurent Laurent::monomial(Var v, BigInt coeff, int exp) {
    Laurent p(v);
    if (coeff != 0) p.terms_.emplace(exp, std::move(coeff));
    return p;
}

Laurent Laurent::delta() {
    Laurent d(Var::a);
    d.terms_.emplace(2, BigInt(-1));
    d.terms_.emplace(-2, BigInt(-1));
    return d;
}

BigInt Laurent::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int Laurent::min_exp() const {
    if (terms_.empty()) throw ZeroPolynomialError("the zero polynomial has no extreme exponents");
    return terms_.begin()->first;
}

int Laurent::max_exp() const {
    if (terms_.empty()) throw ZeroPolynomialError("the zero polynomial has no extreme exponents");
    return terms_.rbegin()->first;
}

int Laurent::span() const {
    if (terms_.empty()) throw ZeroPolynomialError("the zero polynomial has no span");
    return max_exp() - min_exp();
}

void Laurent::add_term(int exp, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent Laurent::operator+(const Laurent& rhs) const {
    require_same_var(var_, rhs.var_, "add");
    Laurent out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

Laurent Laurent::operator-(const Laurent& rhs) const {
    require_same_var(var_, rhs.var_, "subtract");
    Laurent out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
    return out;
}

Laurent Laurent::operator*(const Laurent& rhs) const {
    require_same_var(var_, rhs.var_, "multiply");
    Laurent out(var_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : rhs.terms_) {
            out.add_term(e1 + e2, c1 * c2);
        }
    }
    return out;
}

Laurent Laurent::operator-() const {
    Laurent out(var_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Laurent Laurent::substitute(int k, Var new_var) const {
    if (k == 0) throw ExponentError("substitution power must be nonzero");
    Laurent out(new_var);
    for (const auto& [e, c] : terms_) {
        if (k != 1 && k != -1 && e % k != 0) {
            throw ExponentError("exponent " + std::to_string(e) + " of " + var_name(var_) +
                                " is not divisible by " + std::to_string(k));
        }
        out.terms_.emplace(e / k, c);
    }
    return out;
}

bool Laurent::divisible_by_a12_minus_1() const {
    if (terms_.empty()) return true;
    // Shift to an ordinary polynomial (constant term nonzero), then long-divide
    // by x^12 - 1: x^i = x^(i-12) * (x^12 - 1) + x^(i-12).
    const int lo = min_exp();
    std::vector<BigInt> c(static_cast<size_t>(span()) + 1);
    for (const auto& [e, coef] : terms_) c[static_cast<size_t>(e - lo)] = coef;
    for (size_t i = c.size(); i-- > 12;) {
        if (c[i] == 0) continue;
        c[i - 12] += c[i];
        c[i] = 0;
    }
    for (size_t i = 0; i < c.size() && i < 12; ++i) {
        if (c[i] != 0) return false;
    }
    return true;
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    const char* v = var_name(var_);
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const BigInt& c = it->second;
        if (out.empty()) {
            out += c.str();
        } else {
            out += (c < 0) ? " - " : " + ";
            out += BigInt(abs(c)).str();
        }
        out += "*";
        out += v;
        out += "^";
        out += std::to_string(it->first);
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }
    BigInt integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw ParseError("expected an integer", start);
        return BigInt(std::string(text.substr(start, pos - start)));
    }
    int small_int() { return integer().convert_to<int>(); }
};

}  // namespace

Laurent Laurent::parse(std::string_view text) {
    Cursor cur{text};
    if (cur.peek() == '0') {
        size_t save = cur.pos;
        ++cur.pos;
        if (cur.done()) return Laurent(Var::a);
        cur.pos = save;
    }
    Laurent out(Var::a);
    bool have_var = false;
    bool first = true;
    while (!cur.done()) {
        BigInt sign = 1;
        if (!first) {
            if (cur.accept('+')) {
                sign = 1;
            } else if (cur.accept('-')) {
                sign = -1;
            } else {
                throw ParseError("expected '+' or '-' between terms", cur.pos);
            }
        }
        BigInt coeff = cur.integer();
        cur.expect('*');
        char v = cur.peek();
        Var var;
        switch (v) {
            case 'a': var = Var::a; break;
            case 'q': var = Var::q; break;
            case 't': var = Var::t; break;
            default: throw ParseError("expected a variable name (a, q or t)", cur.pos);
        }
        ++cur.pos;
        if (!have_var) {
            out = Laurent(var);
            have_var = true;
        } else if (var != out.var()) {
            throw ParseError("mixed variable names in one polynomial", cur.pos);
        }
        cur.expect('^');
        int exp = cur.small_int();
        out.add_term(exp, sign * coeff);
        first = false;
    }
    return out;
}

}  // namespace skein
