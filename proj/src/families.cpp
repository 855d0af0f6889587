#include "skein/families.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace skein {

Family Family::unknot() { return Family(); }

Family Family::unlink(int components) {
    if (components < 2) throw Error("unlink needs at least 2 components");
    Family f;
    f.kind_ = Kind::unlink;
    f.params_ = {components};
    return f;
}

Family Family::torus(int n) {
    Family f;
    f.kind_ = Kind::torus;
    f.params_ = {n};
    return f;
}

Family Family::twist(int m, int n) {
    Family f;
    f.kind_ = Kind::twist;
    f.params_ = {m, n};
    return f;
}

Family Family::pretzel(int p, int q, int r) {
    Family f;
    f.kind_ = Kind::pretzel;
    f.params_ = {p, q, r};
    return f;
}

Family Family::kq(int q) {
    if (q < 1 || q % 2 == 0) throw Error("kq requires odd q >= 1");
    Family f;
    f.kind_ = Kind::kq;
    f.params_ = {q};
    return f;
}

Family Family::kqr(int q, int r) {
    if (q < 1 || q % 2 == 0) throw Error("kqr requires odd q >= 1");
    if (r < 3 || r % 2 == 0) throw Error("kqr requires odd r >= 3");
    Family f;
    f.kind_ = Kind::kqr;
    f.params_ = {q, r};
    return f;
}

Family Family::connected_sum(std::vector<Family> parts) {
    if (parts.empty()) return unknot();
    if (parts.size() == 1) return parts[0];
    Family f;
    f.kind_ = Kind::connected_sum;
    f.parts_ = std::move(parts);
    return f;
}

Family Family::disjoint_union(std::vector<Family> parts) {
    if (parts.empty()) throw Error("sqcup needs at least one part");
    if (parts.size() == 1) return parts[0];
    Family f;
    f.kind_ = Kind::disjoint_union;
    f.parts_ = std::move(parts);
    return f;
}

Family Family::raw_pd(PDCode code, std::string name) {
    validate_pd(code);
    Family f;
    f.kind_ = Kind::raw_pd;
    f.pd_ = std::move(code);
    f.name_ = std::move(name);
    return f;
}

std::string Family::str() const {
    auto join = [](const std::vector<Family>& ps) {
        std::string out;
        for (size_t i = 0; i < ps.size(); ++i) {
            if (i) out += ",";
            out += ps[i].str();
        }
        return out;
    };
    switch (kind_) {
        case Kind::unknot: return "unknot";
        case Kind::unlink: return "unlink:" + std::to_string(params_[0]);
        case Kind::torus: return "torus:" + std::to_string(params_[0]);
        case Kind::twist:
            return "twist:" + std::to_string(params_[0]) + "," + std::to_string(params_[1]);
        case Kind::pretzel:
            return "pretzel:" + std::to_string(params_[0]) + "," + std::to_string(params_[1]) +
                   "," + std::to_string(params_[2]);
        case Kind::kq: return "kq:" + std::to_string(params_[0]);
        case Kind::kqr:
            return "kqr:" + std::to_string(params_[0]) + "," + std::to_string(params_[1]);
        case Kind::connected_sum: return "sum(" + join(parts_) + ")";
        case Kind::disjoint_union: return "sqcup(" + join(parts_) + ")";
        case Kind::raw_pd: return "pd:" + name_;
    }
    return "?";
}

namespace {

struct SpecParser {
    std::string_view text;
    size_t pos = 0;

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "' in family spec", pos);
    }
    std::string word() {
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
        }
        return std::string(text.substr(start, pos - start));
    }
    int integer() {
        size_t start = pos;
        if (peek() == '-') ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && text[start] == '-')) {
            throw ParseError("expected an integer in family spec", start);
        }
        return std::stoi(std::string(text.substr(start, pos - start)));
    }
    std::vector<int> int_list() {
        std::vector<int> out{integer()};
        // Stop at a comma that introduces a sibling family instead of a
        // further numeric parameter (e.g. inside sum(...)).
        while (peek() == ',' && pos + 1 < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos + 1])) || text[pos + 1] == '-')) {
            ++pos;
            out.push_back(integer());
        }
        return out;
    }

    Family family() {
        std::string w = word();
        if (w == "unknot") return Family::unknot();
        if (w == "sum" || w == "sqcup") {
            expect('(');
            std::vector<Family> parts{family()};
            while (accept(',')) parts.push_back(family());
            expect(')');
            return w == "sum" ? Family::connected_sum(std::move(parts))
                              : Family::disjoint_union(std::move(parts));
        }
        expect(':');
        if (w == "pd") {
            size_t start = pos;
            while (pos < text.size() && text[pos] != ',' && text[pos] != ')') ++pos;
            std::string path(text.substr(start, pos - start));
            std::ifstream in(path);
            if (!in) throw Error("cannot open PD file: " + path);
            std::stringstream ss;
            ss << in.rdbuf();
            return Family::raw_pd(parse_pd(ss.str()), path);
        }
        std::vector<int> ps = int_list();
        auto need = [&](size_t n) {
            if (ps.size() != n) {
                throw ParseError(w + " expects " + std::to_string(n) + " parameter(s)", pos);
            }
        };
        if (w == "unlink") {
            need(1);
            return Family::unlink(ps[0]);
        }
        if (w == "torus") {
            need(1);
            return Family::torus(ps[0]);
        }
        if (w == "twist") {
            need(2);
            return Family::twist(ps[0], ps[1]);
        }
        if (w == "pretzel") {
            need(3);
            return Family::pretzel(ps[0], ps[1], ps[2]);
        }
        if (w == "kq") {
            need(1);
            return Family::kq(ps[0]);
        }
        if (w == "kqr") {
            need(2);
            return Family::kqr(ps[0], ps[1]);
        }
        throw ParseError("unknown family '" + w + "'", pos);
    }
};

}  // namespace

Family Family::parse(std::string_view spec) {
    SpecParser p{spec};
    Family f = p.family();
    if (p.pos != spec.size()) throw ParseError("trailing input after family spec", p.pos);
    return f;
}

std::pair<TangleRef, Closure> Family::to_tangle() const {
    switch (kind_) {
        case Kind::unknot: return {Tangle::zero(), Closure::denominator};
        case Kind::unlink: {
            // Vertical stack of [0] tangles; each stacking step closes a circle.
            TangleRef t = Tangle::zero();
            for (int i = 1; i < params_[0]; ++i) t = Tangle::product(t, Tangle::zero());
            return {t, Closure::denominator};
        }
        case Kind::torus: {
            // T(2,-n) is the denominator closure of [1/n]; positive n mirrors.
            const int n = params_[0];
            TangleRef v = Tangle::vertical(std::abs(n));
            return {n > 0 ? Tangle::mirror(v) : v, Closure::denominator};
        }
        case Kind::twist:
            // K(m,n) = N([n] + [1/m]), the rational tangle n + 1/m.
            return {Tangle::sum(Tangle::horizontal(params_[1]), Tangle::vertical(params_[0])),
                    Closure::numerator};
        case Kind::pretzel:
            return {Tangle::sum(Tangle::sum(Tangle::vertical(params_[0]),
                                            Tangle::vertical(params_[1])),
                                Tangle::vertical(params_[2])),
                    Closure::numerator};
        case Kind::kq:
        case Kind::kqr: {
            const int q = params_[0];
            TangleRef tq = Tangle::product(
                Tangle::sum(Tangle::mirror(Tangle::vertical(3)), Tangle::vertical(q)),
                Tangle::horizontal(1));
            if (kind_ == Kind::kq) return {tq, Closure::denominator};
            return {Tangle::sum(tq, Tangle::horizontal(params_[1])), Closure::numerator};
        }
        default:
            throw Error("no single-tangle presentation for " + str());
    }
}

Laurent Family::bracket(int oracle_bound) const {
    switch (kind_) {
        case Kind::connected_sum: {
            Laurent out = Laurent::constant(Var::a, 1);
            for (const Family& p : parts_) out *= p.bracket(oracle_bound);
            return out;
        }
        case Kind::disjoint_union: {
            Laurent out = Laurent::constant(Var::a, 1);
            const Laurent delta = Laurent::delta();
            for (size_t i = 0; i < parts_.size(); ++i) {
                out *= parts_[i].bracket(oracle_bound);
                if (i) out *= delta;
            }
            return out;
        }
        case Kind::raw_pd: return state_sum_bracket(pd_, oracle_bound);
        default: {
            auto [t, cl] = to_tangle();
            return closure_bracket(t, cl);
        }
    }
}

int Family::components() const {
    auto odd = [](int x) { return x % 2 != 0; };
    switch (kind_) {
        case Kind::unknot: return 1;
        case Kind::unlink: return params_[0];
        case Kind::torus: return odd(params_[0]) ? 1 : 2;
        case Kind::twist: return (odd(params_[0]) && odd(params_[1])) ? 2 : 1;
        case Kind::pretzel: {
            int evens = !odd(params_[0]) + !odd(params_[1]) + !odd(params_[2]);
            return evens <= 1 ? 1 : evens;
        }
        case Kind::kq:
        case Kind::kqr: return 1;
        case Kind::connected_sum: {
            int total = 0;
            for (const Family& p : parts_) total += p.components();
            return total - static_cast<int>(parts_.size()) + 1;
        }
        case Kind::disjoint_union: {
            int total = 0;
            for (const Family& p : parts_) total += p.components();
            return total;
        }
        case Kind::raw_pd: return component_count(pd_);
    }
    return 1;
}

long long Family::standard_writhe(int oracle_bound) const {
    switch (kind_) {
        case Kind::unknot:
        case Kind::unlink: return 0;
        case Kind::torus: return params_[0];
        case Kind::connected_sum:
        case Kind::disjoint_union: {
            long long w = 0;
            for (const Family& p : parts_) w += p.standard_writhe(oracle_bound);
            return w;
        }
        case Kind::raw_pd: return writhe(pd_);
        default: return writhe(synthesize(oracle_bound));
    }
}

int Family::crossing_number_bound() const {
    auto abs3 = [](int a, int b, int c) { return std::abs(a) + std::abs(b) + std::abs(c); };
    switch (kind_) {
        case Kind::unknot:
        case Kind::unlink: return 0;
        case Kind::torus: return std::abs(params_[0]);
        case Kind::twist: return std::abs(params_[0]) + std::abs(params_[1]);
        case Kind::pretzel: return abs3(params_[0], params_[1], params_[2]);
        case Kind::kq: return params_[0] + 4;
        case Kind::kqr: return params_[0] + params_[1] + 4;
        case Kind::connected_sum:
        case Kind::disjoint_union: {
            int total = 0;
            for (const Family& p : parts_) total += p.crossing_number_bound();
            return total;
        }
        case Kind::raw_pd: return static_cast<int>(pd_.crossing_count());
    }
    return 0;
}

PDCode Family::synthesize(int oracle_bound) const {
    switch (kind_) {
        case Kind::unknot: return PDCode{{}, 1, {}};
        case Kind::unlink: return PDCode{{}, params_[0], {}};
        case Kind::raw_pd: return pd_;
        case Kind::connected_sum: {
            PDCode out = parts_[0].synthesize(oracle_bound);
            for (size_t i = 1; i < parts_.size(); ++i) {
                out = connected_sum_pd(out, parts_[i].synthesize(oracle_bound));
            }
            return out;
        }
        case Kind::disjoint_union: {
            PDCode out = parts_[0].synthesize(oracle_bound);
            for (size_t i = 1; i < parts_.size(); ++i) {
                out = disjoint_union_pd(out, parts_[i].synthesize(oracle_bound));
            }
            return out;
        }
        default: {
            auto [t, cl] = to_tangle();
            PDCode d = synthesize_pd(t, cl);
            if (kind_ == Kind::torus && params_[0] % 2 == 0 && params_[0] != 0) {
                // Pin the parallel orientation: both strands pointing the same
                // way through the twist region, which makes the writhe equal
                // to the twist parameter.
                Traversal tr = traverse(d);
                if (tr.writhe != params_[0]) {
                    PDCode flipped = d;
                    std::vector<int> rev = tr.components.at(1);
                    std::reverse(rev.begin(), rev.end());
                    flipped.orientations.push_back(rev);
                    Traversal tf = traverse(flipped);
                    if (tf.writhe != params_[0]) {
                        throw InternalInconsistencyError(
                            "could not orient " + str() + " with writhe " +
                            std::to_string(params_[0]));
                    }
                    d = flipped;
                } else {
                    d.orientations.push_back(tr.components.at(0));
                }
            }
            return d;
        }
    }
}

}  // namespace skein
