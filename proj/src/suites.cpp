#include "skein/suites.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "skein/diagram.hpp"

namespace skein {

int SuiteResult::count(CaseStatus s) const {
    return static_cast<int>(std::count_if(cases.begin(), cases.end(),
                                          [&](const SuiteCase& c) { return c.status == s; }));
}

Laurent torus_jones_closed_form(int n) {
    if (n < 2) throw Error("the closed form is stated for n >= 2");
    Laurent v(Var::q);
    v += Laurent::monomial(Var::q, 1, n + 1);
    v += Laurent::monomial(Var::q, 1, n - 1);
    for (int k = 0; k < n; ++k) {
        v -= Laurent::monomial(Var::q, (k % 2) ? -1 : 1, n + 1 + 2 * k);
    }
    if (n % 2 == 0) v = -v;  // (-1)^(n+1)
    return v;
}

BracketVector tq_printed_vector(int q) {
    auto mono = [](int c, int e) { return Laurent::monomial(Var::a, c, e); };
    BracketVector v;
    if (q == 1) {
        v.f = mono(1, 2) - mono(1, -2) + mono(1, -6);
        v.g = -mono(1, -2) + mono(1, -6);
        return v;
    }
    v.f = mono(1, -q - 6) - mono(2, -q - 2) - mono(1, -q + 6) + mono(1, 3 * q - 2);
    v.g = mono(1, -q - 8) - mono(1, -q - 4);
    for (int k = 1; k < q; ++k) v.g += mono((k % 2) ? -1 : 1, q - 4 + 4 * k);
    return v;
}

std::vector<Family> oracle_grid(int max_crossings) {
    std::vector<Family> all;
    all.push_back(Family::unknot());
    all.push_back(Family::unlink(2));
    all.push_back(Family::unlink(3));
    for (int n = -7; n <= 7; ++n) all.push_back(Family::torus(n));
    for (int m = 1; m <= 5; ++m) {
        for (int n = 1; n <= 5; ++n) all.push_back(Family::twist(m, n));
    }
    all.push_back(Family::twist(-2, 3));
    all.push_back(Family::twist(2, -3));
    for (int p = -2; p <= 3; ++p) {
        for (int q = p; q <= 3; ++q) {
            for (int r = q; r <= 3; ++r) all.push_back(Family::pretzel(p, q, r));
        }
    }
    all.push_back(Family::pretzel(3, -3, 2));
    all.push_back(Family::pretzel(3, 3, -2));
    all.push_back(Family::pretzel(5, 3, -2));
    all.push_back(Family::pretzel(-5, 3, 2));
    for (int q = 1; q <= 7; q += 2) all.push_back(Family::kq(q));
    for (int q : {1, 3}) {
        for (int r : {3, 5}) all.push_back(Family::kqr(q, r));
    }
    all.push_back(Family::connected_sum({Family::torus(3), Family::torus(3)}));
    all.push_back(Family::connected_sum({Family::torus(3), Family::torus(-3)}));
    all.push_back(Family::connected_sum({Family::twist(2, 1), Family::twist(2, 2)}));
    all.push_back(Family::disjoint_union({Family::unknot(), Family::torus(4)}));
    all.push_back(Family::disjoint_union({Family::torus(2), Family::torus(3)}));

    std::vector<Family> out;
    for (Family& f : all) {
        if (f.crossing_number_bound() <= max_crossings) out.push_back(std::move(f));
    }
    return out;
}

std::vector<Family> knot_grid() {
    std::vector<Family> out;
    out.push_back(Family::unknot());
    for (int n = 3; n <= 25; n += 2) {
        out.push_back(Family::torus(n));
        out.push_back(Family::torus(-n));
    }
    for (int m = 1; m <= 8; ++m) {
        for (int n = 1; n <= 8; ++n) {
            if (m % 2 == 1 && n % 2 == 1) continue;
            out.push_back(Family::twist(m, n));
        }
    }
    for (int p = -5; p <= 5; ++p) {
        for (int q = -5; q <= 5; ++q) {
            for (int r = -5; r <= 5; ++r) {
                Family f = Family::pretzel(p, q, r);
                if (f.components() == 1) out.push_back(std::move(f));
            }
        }
    }
    for (int q = 1; q <= 9; q += 2) out.push_back(Family::kq(q));
    for (int q = 1; q <= 9; q += 2) {
        for (int r = 3; r <= 9; r += 2) out.push_back(Family::kqr(q, r));
    }
    out.push_back(Family::connected_sum({Family::torus(3), Family::torus(3)}));
    out.push_back(Family::connected_sum({Family::twist(2, 1), Family::twist(2, 4)}));
    return out;
}

namespace {

SuiteCase make_case(std::string label, bool ok, std::string detail_on_fail) {
    SuiteCase c;
    c.label = std::move(label);
    c.status = ok ? CaseStatus::pass : CaseStatus::fail;
    if (!ok) c.detail = std::move(detail_on_fail);
    return c;
}

SuiteResult run_torus_jones(const SuiteOptions& opt) {
    SuiteResult res{"torus-jones", {}};
    for (int n = 2; n <= opt.max_n; ++n) {
        Laurent got = jones_q(Family::torus(n), opt.oracle_bound);
        Laurent want = torus_jones_closed_form(n);
        res.cases.push_back(make_case("torus:" + std::to_string(n), got == want,
                                      "engine " + got.str() + " vs formula " + want.str()));
    }
    return res;
}

SuiteResult run_twist_span(const SuiteOptions& opt) {
    SuiteResult res{"twist-span", {}};
    for (int m = 1; m <= 8; ++m) {
        for (int n = 1; n <= 8; ++n) {
            long long got = span_t(Family::twist(m, n), opt.oracle_bound);
            res.cases.push_back(make_case("twist:" + std::to_string(m) + "," + std::to_string(n),
                                          got == m + n,
                                          "span " + std::to_string(got) + " vs m+n = " +
                                              std::to_string(m + n)));
        }
    }
    return res;
}

SuiteResult run_tq_bracket(const SuiteOptions& opt) {
    SuiteResult res{"tq-bracket", {}};
    std::vector<int> qs = opt.q_list;
    if (qs.empty()) {
        for (int q = 1; q <= 15; q += 2) qs.push_back(q);
    }
    for (int q : qs) {
        TangleRef tq = Tangle::product(
            Tangle::sum(Tangle::mirror(Tangle::vertical(3)), Tangle::vertical(q)),
            Tangle::horizontal(1));
        BracketVector engine = bracket_vector(tq);
        BracketVector printed = tq_printed_vector(q);

        // Extreme-terms mode: top of f is +a^(3q-2), bottom of g is +a^(-q-8).
        bool extremes = engine.f.max_exp() == 3 * q - 2 && engine.f.coeff(3 * q - 2) == 1 &&
                        engine.g.min_exp() == -q - 8 && engine.g.coeff(-q - 8) == 1;
        SuiteCase ext;
        ext.label = "tq:" + std::to_string(q) + ":extremes";
        if (extremes) {
            ext.status = CaseStatus::pass;
        } else if (q == 1) {
            // The q = 1 row of the printed formula is the documented anomaly.
            ext.status = CaseStatus::flag;
            ext.detail = "q=1 engine vector [" + engine.f.str() + " ; " + engine.g.str() +
                         "] does not reach the q>=3 extreme exponents";
        } else {
            ext.status = CaseStatus::fail;
            ext.detail = "extreme terms of [" + engine.f.str() + " ; " + engine.g.str() +
                         "] differ from a^" + std::to_string(3 * q - 2) + " / a^" +
                         std::to_string(-q - 8);
        }
        res.cases.push_back(ext);

        // Full-vector mode: interior differences against the printed formula
        // are reported, not failed.
        SuiteCase full;
        full.label = "tq:" + std::to_string(q) + ":full-vector";
        if (engine == printed) {
            full.status = CaseStatus::pass;
        } else {
            full.status = CaseStatus::flag;
            Laurent df = engine.f - printed.f;
            Laurent dg = engine.g - printed.g;
            full.detail = "engine minus printed: f: " + df.str() + "; g: " + dg.str();
        }
        res.cases.push_back(full);
    }
    return res;
}

SuiteResult run_kq_span(const SuiteOptions& opt) {
    SuiteResult res{"kq-span", {}};
    for (int q = 1; q <= 9; q += 2) {
        long long got = span_t(Family::kq(q), opt.oracle_bound);
        res.cases.push_back(make_case("kq:" + std::to_string(q), got == q + 3,
                                      "span " + std::to_string(got) + " vs q+3 = " +
                                          std::to_string(q + 3)));
    }
    return res;
}

SuiteResult run_kqr_span(const SuiteOptions& opt) {
    SuiteResult res{"kqr-span", {}};
    for (int q = 1; q <= 9; q += 2) {
        for (int r = 3; r <= 9; r += 2) {
            long long got = span_t(Family::kqr(q, r), opt.oracle_bound);
            long long want = q + r + 2;
            SuiteCase c;
            c.label = "kqr:" + std::to_string(q) + "," + std::to_string(r);
            if (got == want) {
                c.status = CaseStatus::pass;
            } else if (q == 1 && got == want + 1) {
                c.status = CaseStatus::flag;
                c.detail = "span " + std::to_string(got) + " exceeds the q+r+2 formula by 1 " +
                           "(documented q=1 anomaly)";
            } else {
                c.status = CaseStatus::fail;
                c.detail = "span " + std::to_string(got) + " vs q+r+2 = " + std::to_string(want);
            }
            res.cases.push_back(c);
        }
    }
    return res;
}

SuiteResult run_ganzell(const SuiteOptions& opt) {
    SuiteResult res{"ganzell", {}};
    for (const Family& f : knot_grid()) {
        bool divisible = ganzell_check(f, opt.oracle_bound);
        long long span = span_t(f, opt.oracle_bound);
        bool ok = divisible && span != 1 && span != 2;
        res.cases.push_back(make_case(f.str(), ok,
                                      divisible ? "span " + std::to_string(span) + " is forbidden"
                                                : "X - 1 not divisible by a^12 - 1"));
    }
    return res;
}

SuiteResult run_tri_multiplicativity(const SuiteOptions& opt) {
    SuiteResult res{"tri-multiplicativity", {}};
    std::vector<Family> pool;
    for (int n = 2; n <= 7; ++n) pool.push_back(Family::torus(n));
    for (int m = 1; m <= 3; ++m) {
        for (int n = 2; n <= 4; ++n) pool.push_back(Family::twist(m, n));
    }
    pool.push_back(Family::pretzel(3, -3, 2));
    pool.push_back(Family::pretzel(3, 3, 2));
    pool.push_back(Family::kq(3));
    pool.push_back(Family::unknot());
    std::mt19937 rng(20250809);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < opt.pair_count; ++i) {
        const Family& a = pool[pick(rng)];
        const Family& b = pool[pick(rng)];
        BigInt lhs = tricoloring(a, opt.oracle_bound) * tricoloring(b, opt.oracle_bound);
        BigInt rhs = 3 * tricoloring(Family::connected_sum({a, b}), opt.oracle_bound);
        res.cases.push_back(make_case(a.str() + " # " + b.str(), lhs == rhs,
                                      "tri(a)tri(b) = " + lhs.str() + " vs 3 tri(a#b) = " +
                                          rhs.str()));
    }
    return res;
}

SuiteResult run_oracle_equivalence(const SuiteOptions& opt) {
    SuiteResult res{"oracle-equivalence", {}};
    for (const Family& f : oracle_grid(opt.max_crossings)) {
        Laurent engine = f.bracket(opt.oracle_bound);
        Laurent oracle = state_sum_bracket(f.synthesize(opt.oracle_bound),
                                           std::max(opt.oracle_bound, opt.max_crossings));
        res.cases.push_back(make_case(f.str(), engine == oracle,
                                      "tangle bracket " + engine.str() + " vs state sum " +
                                          oracle.str()));
    }
    return res;
}

}  // namespace

const std::vector<SuiteDef>& suite_manifest() {
    static const std::vector<SuiteDef> manifest = {
        {"torus-jones", "torus link Jones polynomials match the alternating-series closed form",
         run_torus_jones},
        {"twist-span", "generalized twist links have span m+n", run_twist_span},
        {"tq-bracket", "T_q bracket vectors: extreme terms exact, printed-formula diffs flagged",
         run_tq_bracket},
        {"kq-span", "the knots K_q have span q+3", run_kq_span},
        {"kqr-span", "the knots K_{q,r} have span q+r+2 (q=1 anomaly flagged)", run_kqr_span},
        {"ganzell", "X - 1 is divisible by a^12 - 1 for every knot; no knot span is 1 or 2",
         run_ganzell},
        {"tri-multiplicativity", "tri(a)tri(b) = 3 tri(a#b) on sampled pairs",
         run_tri_multiplicativity},
        {"oracle-equivalence", "tangle-calculus brackets equal the brute-force state sum",
         run_oracle_equivalence},
    };
    return manifest;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
    for (const SuiteDef& def : suite_manifest()) {
        if (def.name == name) return def.run(opt);
    }
    std::string names;
    for (const SuiteDef& def : suite_manifest()) names += " " + def.name;
    throw Error("unknown suite '" + name + "'; available:" + names);
}

}  // namespace skein
