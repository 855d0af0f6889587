#include <doctest.h>

#include <json.hpp>

#include <random>

#include "skein/invariants.hpp"
#include "skein/suites.hpp"

using namespace skein;

namespace {

Laurent qpoly(std::initializer_list<std::pair<int, int>> terms) {
    Laurent p(Var::q);
    for (auto [c, e] : terms) p += Laurent::monomial(Var::q, c, e);
    return p;
}

}  // namespace

TEST_CASE("jones anchors") {
    CHECK(jones_q(Family::unknot()) == qpoly({{1, 0}}));
    // V(T(2,3)) = t + t^3 - t^4, carried as q^2 + q^6 - q^8.
    CHECK(jones_q(Family::torus(3)) == qpoly({{1, 2}, {1, 6}, {-1, 8}}));
    // The closed form holds exactly, including the sign, for 2 <= n <= 15.
    for (int n = 2; n <= 15; ++n) {
        CHECK(jones_q(Family::torus(n)) == torus_jones_closed_form(n));
    }
}

TEST_CASE("span anchors") {
    CHECK(span_t(Family::torus(7)) == 7);
    CHECK(span_t(Family::twist(4, 3)) == 7);
    CHECK(span_t(Family::kqr(3, 3)) == 8);
    CHECK(span_t(Family::torus(0)) == 1);
    CHECK(span_t(Family::torus(1)) == 0);
    CHECK(span_t(Family::unlink(3)) == 2);
    for (int q = 1; q <= 9; q += 2) CHECK(span_t(Family::kq(q)) == q + 3);
    // The q = 1 row of the K_{q,r} family exceeds the q+r+2 formula by one.
    for (int r = 3; r <= 9; r += 2) CHECK(span_t(Family::kqr(1, r)) == r + 4);
}

TEST_CASE("determinant anchors") {
    CHECK(determinant(Family::torus(9)) == 9);
    for (int n = 2; n <= 25; ++n) CHECK(determinant(Family::torus(n)) == n);
    CHECK(determinant(Family::pretzel(3, -3, 2)) == 9);
    CHECK(determinant(Family::twist(2, 3)) == 7);
    // det is multiplicative over connected sums: 3 * 9.
    CHECK(determinant(Family::connected_sum({Family::twist(2, 1), Family::twist(2, 4)})) == 27);
    CHECK(determinant(Family::unlink(2)) == 0);
}

TEST_CASE("pretzel determinant formula on the grid") {
    for (int p = -5; p <= 5; ++p) {
        for (int q = -5; q <= 5; ++q) {
            for (int r = -5; r <= 5; ++r) {
                Family f = Family::pretzel(p, q, r);
                if (f.components() != 1) continue;
                INFO("pretzel ", p, ",", q, ",", r);
                CHECK(determinant(f) == abs(BigInt(p) * q + BigInt(p) * r + BigInt(q) * r));
            }
        }
    }
}

TEST_CASE("tricoloring and beta") {
    CHECK(tricoloring(Family::unknot()) == 3);
    CHECK(beta(Family::unknot()) == 1);
    CHECK(tricoloring(Family::torus(3)) == 9);
    CHECK(beta(Family::torus(3)) == 2);
    CHECK(beta(Family::unlink(2)) == 2);

    // beta of a sum of n trefoils is n + 1.
    std::vector<Family> parts;
    for (int n = 1; n <= 8; ++n) {
        parts.push_back(Family::torus(3));
        CHECK(beta(Family::connected_sum(parts)) == n + 1);
    }
}

TEST_CASE("tricoloring multiplicativity") {
    std::mt19937 rng(67);
    std::vector<Family> pool = {Family::torus(2),      Family::torus(5),
                                Family::twist(2, 2),   Family::twist(3, 3),
                                Family::pretzel(3, 3, 2), Family::kq(3)};
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 25; ++i) {
        const Family& a = pool[pick(rng)];
        const Family& b = pool[pick(rng)];
        CHECK(tricoloring(a) * tricoloring(b) ==
              3 * tricoloring(Family::connected_sum({a, b})));
    }
}

TEST_CASE("divisibility and the forbidden spans") {
    CHECK(ganzell_check(Family::unknot()));
    CHECK(ganzell_check(Family::torus(3)));
    CHECK(ganzell_check(Family::pretzel(-5, 3, 2)));
    CHECK_THROWS_AS(ganzell_check(Family::torus(4)), Error);

    for (const Family& f : knot_grid()) {
        INFO(f.str());
        CHECK(ganzell_check(f));
        long long s = span_t(f);
        CHECK(s != 1);
        CHECK(s != 2);
    }
}

TEST_CASE("figure-eight standard diagram balances its signs") {
    CHECK(Family::twist(2, 2).standard_writhe() == 0);
    CHECK(determinant(Family::twist(2, 2)) == 5);
}

TEST_CASE("span adds and det multiplies over connected sums") {
    std::vector<Family> pool = {Family::torus(3),        Family::torus(5),
                                Family::twist(2, 2),     Family::twist(2, 3),
                                Family::pretzel(3, -3, 2), Family::kq(3)};
    for (const Family& a : pool) {
        for (const Family& b : pool) {
            Family sum = Family::connected_sum({a, b});
            CHECK(span_t(sum) == span_t(a) + span_t(b));
            CHECK(determinant(sum) == determinant(a) * determinant(b));
        }
    }
}

TEST_CASE("beta step bound") {
    CHECK(beta_step(Family::unknot(), Family::torus(3)) == 1);
    CHECK(beta_step(Family::torus(3), Family::torus(3)) == 0);
    std::vector<Family> three{Family::torus(3), Family::torus(3), Family::torus(3)};
    std::vector<Family> four = three;
    four.push_back(Family::torus(3));
    CHECK(beta_step(Family::connected_sum(three), Family::connected_sum(four)) == 1);
}

TEST_CASE("the derived invariants ignore mirroring") {
    for (const char* s : {"torus:5", "twist:2,3", "pretzel:3,-3,2", "kq:3"}) {
        Family f = Family::parse(s);
        auto [t, cl] = f.to_tangle();
        Family m = Family::raw_pd(synthesize_pd(Tangle::mirror(t), cl), "mirror");
        CHECK(span_t(f) == span_t(m));
        CHECK(determinant(f) == determinant(m));
        CHECK(tricoloring(f) == tricoloring(m));
    }
}

TEST_CASE("report invariants hold across a mixed grid") {
    for (const Family& f : oracle_grid(12)) {
        InvariantReport r = make_report(f);
        INFO(f.str());
        // det parity follows the component count; tri is a power of 3.
        CHECK((r.det % 2 != 0) == (r.components == 1));
        BigInt tri = r.tri;
        while (tri % 3 == 0) tri /= 3;
        CHECK(tri == 1);
        CHECK(r.beta >= 1);
        CHECK(r.span_integral);
        // Only closed-form prediction flags may appear, never parity or
        // consistency flags.
        for (const std::string& fl : r.flags) {
            CHECK(fl.find("family formula") != std::string::npos);
        }
        // Knots land in integer powers of t.
        if (r.components == 1) CHECK(r.jones_t.has_value());
    }
}

TEST_CASE("report JSON carries exactly the documented fields") {
    InvariantReport r = make_report(Family::torus(3));
    auto j = nlohmann::json::parse(report_json(r));
    for (const char* key : {"family", "jones_q", "jones_t", "span", "det", "tri", "beta",
                            "components", "writhe", "flags"}) {
        CHECK(j.contains(key));
    }
    CHECK(j.size() == 10);
    CHECK(j["family"] == "torus:3");
    CHECK(j["span"] == 3);
    CHECK(j["det"] == "3");
    CHECK(j["beta"] == 2);
    CHECK(j["jones_q"].size() == 3);

    // Links with odd q-powers have no t rendering.
    auto j2 = nlohmann::json::parse(report_json(make_report(Family::torus(2))));
    CHECK(!j2.contains("jones_t"));
}

TEST_CASE("prediction flags fire on the documented anomaly only") {
    CHECK(make_report(Family::kqr(3, 5)).flags.empty());
    InvariantReport r = make_report(Family::kqr(1, 5));
    REQUIRE(r.flags.size() == 1);
    CHECK(r.flags[0].find("q+r+2") != std::string::npos);
}
