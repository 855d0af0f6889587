#include "skein/tangle.hpp"

#include <cctype>
#include <unordered_map>

namespace skein {

struct TangleFactory {
    static TangleRef make(Tangle::Kind k, int n, TangleRef l, TangleRef r) {
        return TangleRef(new Tangle(k, n, std::move(l), std::move(r)));
    }
};

Tangle::Tangle(Kind k, int n, TangleRef l, TangleRef r)
    : kind_(k), twists_(n), left_(std::move(l)), right_(std::move(r)) {
    switch (kind_) {
        case Kind::horizontal:
        case Kind::vertical: crossings_ = twists_; break;
        case Kind::mirror: crossings_ = left_->crossings_; break;
        default: crossings_ = left_->crossings_ + right_->crossings_; break;
    }
}

TangleRef Tangle::horizontal(int n) {
    if (n < 0) return mirror(horizontal(-n));
    return TangleFactory::make(Kind::horizontal, n, nullptr, nullptr);
}

TangleRef Tangle::vertical(int n) {
    if (n < 0) return mirror(vertical(-n));
    return TangleFactory::make(Kind::vertical, n, nullptr, nullptr);
}

TangleRef Tangle::sum(TangleRef left, TangleRef right) {
    return TangleFactory::make(Kind::sum, 0, std::move(left), std::move(right));
}

TangleRef Tangle::product(TangleRef top, TangleRef bottom) {
    return TangleFactory::make(Kind::product, 0, std::move(top), std::move(bottom));
}

TangleRef Tangle::mirror(TangleRef t) {
    if (t->kind() == Kind::mirror) return t->child();  // involution
    return TangleFactory::make(Kind::mirror, 0, std::move(t), nullptr);
}

namespace {

Laurent mono(BigInt c, int e) { return Laurent::monomial(Var::a, std::move(c), e); }

/// f-entry of [n]: a^n. g-entry: a^(n-2) * sum_{k=0}^{n-1} (-a^-4)^k.
BracketVector horizontal_leaf(int n) {
    BracketVector v;
    v.f = mono(1, n);
    for (int k = 0; k < n; ++k) v.g += mono((k % 2) ? -1 : 1, n - 2 - 4 * k);
    return v;
}

/// f-entry of [1/n]: a^(-n+2) * sum_{k=0}^{n-1} (-a^4)^k. g-entry: a^-n.
BracketVector vertical_leaf(int n) {
    BracketVector v;
    for (int k = 0; k < n; ++k) v.f += mono((k % 2) ? -1 : 1, -n + 2 + 4 * k);
    v.g = mono(1, -n);
    return v;
}

struct Evaluator {
    std::unordered_map<const Tangle*, BracketVector> memo;
    Laurent delta = Laurent::delta();

    const BracketVector& eval(const TangleRef& t) {
        auto it = memo.find(t.get());
        if (it != memo.end()) return it->second;
        BracketVector v;
        switch (t->kind()) {
            case Tangle::Kind::horizontal: v = horizontal_leaf(t->twists()); break;
            case Tangle::Kind::vertical: v = vertical_leaf(t->twists()); break;
            case Tangle::Kind::mirror: {
                const BracketVector& c = eval(t->child());
                v.f = c.f.mirrored();
                v.g = c.g.mirrored();
                break;
            }
            case Tangle::Kind::sum: {
                const BracketVector& bt = eval(t->left());
                const BracketVector& bu = eval(t->right());
                v.f = bu.f * bt.f;
                v.g = bu.g * bt.f + (bu.f + delta * bu.g) * bt.g;
                break;
            }
            case Tangle::Kind::product: {
                const BracketVector& bt = eval(t->left());
                const BracketVector& bu = eval(t->right());
                v.f = (delta * bu.f + bu.g) * bt.f + bu.f * bt.g;
                v.g = bu.g * bt.g;
                break;
            }
        }
        return memo.emplace(t.get(), std::move(v)).first->second;
    }
};

}  // namespace

BracketVector bracket_vector(const TangleRef& t) {
    Evaluator ev;
    return ev.eval(t);
}

Laurent closure_bracket(const TangleRef& t, Closure which) {
    BracketVector v = bracket_vector(t);
    Laurent delta = Laurent::delta();
    return which == Closure::numerator ? delta * v.f + v.g : v.f + delta * v.g;
}

Laurent pairing(const TangleRef& t, const TangleRef& u) {
    BracketVector bt = bracket_vector(t);
    BracketVector bu = bracket_vector(u);
    Laurent delta = Laurent::delta();
    return bt.f * (delta * bu.f + bu.g) + bt.g * (bu.f + delta * bu.g);
}

Laurent normalize_bracket(const Laurent& bracket, long long writhe) {
    if (bracket.var() != Var::a) {
        throw VarMismatchError("normalization applies to brackets in the variable a");
    }
    // (-a)^(-3w) = (-1)^w * a^(-3w).
    const int sign = (writhe % 2 == 0) ? 1 : -1;
    return Laurent::monomial(Var::a, sign, static_cast<int>(-3 * writhe)) * bracket;
}

std::string format_tangle(const TangleRef& t) {
    switch (t->kind()) {
        case Tangle::Kind::horizontal: return "[" + std::to_string(t->twists()) + "]";
        case Tangle::Kind::vertical: return "[1/" + std::to_string(t->twists()) + "]";
        case Tangle::Kind::mirror: return "-" + format_tangle(t->child());
        case Tangle::Kind::sum:
            return "(" + format_tangle(t->left()) + " + " + format_tangle(t->right()) + ")";
        case Tangle::Kind::product:
            return "(" + format_tangle(t->left()) + " * " + format_tangle(t->right()) + ")";
    }
    return "?";
}

namespace {

struct TangleParser {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
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
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "' in tangle expression", pos);
    }
    int integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw ParseError("expected an integer", start);
        return std::stoi(std::string(text.substr(start, pos - start)));
    }

    // expr := factor (('+'|'*') factor)*, with '*' binding tighter than '+'.
    TangleRef expr() {
        TangleRef t = term();
        while (peek() == '+') {
            ++pos;
            t = Tangle::sum(t, term());
        }
        return t;
    }
    TangleRef term() {
        TangleRef t = factor();
        while (peek() == '*') {
            ++pos;
            t = Tangle::product(t, factor());
        }
        return t;
    }
    TangleRef factor() {
        if (accept('-')) return Tangle::mirror(factor());
        if (accept('(')) {
            TangleRef t = expr();
            expect(')');
            return t;
        }
        if (accept('[')) {
            size_t mark = pos;
            int first = integer();
            if (accept('/')) {
                if (first != 1) throw ParseError("vertical twists are written [1/n]", mark);
                int n = integer();
                expect(']');
                return Tangle::vertical(n);
            }
            expect(']');
            return Tangle::horizontal(first);
        }
        throw ParseError("expected a tangle factor", pos);
    }
};

}  // namespace

TangleRef parse_tangle(std::string_view text) {
    TangleParser p{text};
    TangleRef t = p.expr();
    if (!p.accept('\0') && p.peek() != '\0') {
        throw ParseError("unexpected trailing input after tangle expression", p.pos);
    }
    return t;
}

std::pair<TangleRef, Closure> parse_closed_tangle(std::string_view text) {
    TangleParser p{text};
    TangleRef t = p.expr();
    p.expect('^');
    char c = p.peek();
    Closure cl;
    if (c == 'N') {
        cl = Closure::numerator;
    } else if (c == 'D') {
        cl = Closure::denominator;
    } else {
        throw ParseError("closure must be ^N or ^D", p.pos);
    }
    ++p.pos;
    if (p.peek() != '\0') throw ParseError("unexpected trailing input after closure", p.pos);
    return {t, cl};
}

}  // namespace skein
