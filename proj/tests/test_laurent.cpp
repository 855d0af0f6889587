#include <doctest.h>

#include <random>

#include "skein/laurent.hpp"

using namespace skein;

namespace {

Laurent mono(int c, int e) { return Laurent::monomial(Var::a, c, e); }

Laurent random_poly(std::mt19937& rng, Var v = Var::a) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> exp(-12, 12);
    std::uniform_int_distribution<int> count(0, 6);
    Laurent p(v);
    const int n = count(rng);
    for (int i = 0; i < n; ++i) p += Laurent::monomial(v, coeff(rng), exp(rng));
    return p;
}

}  // namespace

TEST_CASE("ring arithmetic on small anchors") {
    Laurent p = mono(1, 1) + mono(1, -1);   // a + a^-1
    Laurent r = mono(1, 1) - mono(1, -1);   // a - a^-1
    CHECK(p * r == mono(1, 2) - mono(1, -2));

    Laurent delta = Laurent::delta();
    CHECK(delta * delta == mono(1, 4) + mono(2, 0) + mono(1, -4));

    CHECK(p + Laurent(Var::a) == p);
    CHECK(p - p == Laurent(Var::a));
}

TEST_CASE("mismatched variables are a usage error") {
    CHECK_THROWS_AS(Laurent(Var::a) + Laurent(Var::q), VarMismatchError);
    CHECK_THROWS_AS(mono(1, 1) * Laurent::monomial(Var::q, 1, 1), VarMismatchError);
}

TEST_CASE("span") {
    CHECK((mono(1, 4) - mono(1, -4)).span() == 8);
    CHECK(Laurent::constant(Var::a, 1).span() == 0);
    CHECK_THROWS_AS(Laurent(Var::a).span(), ZeroPolynomialError);

    // Bracket of the standard trefoil diagram.
    Laurent trefoil = -mono(1, 5) - mono(1, -3) + mono(1, -7);
    CHECK(trefoil.span() == 12);
}

TEST_CASE("span is additive over products") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Laurent p = random_poly(rng), r = random_poly(rng);
        if (p.is_zero() || r.is_zero()) continue;
        CHECK((p * r).span() == p.span() + r.span());
    }
}

TEST_CASE("monomial substitution") {
    // Mirror: k = -1.
    Laurent p = mono(1, 3) + mono(1, -1);
    CHECK(p.substitute(-1, Var::a) == mono(1, -3) + mono(1, 1));

    // a-polynomial to q under q = a^-2: exponents halve and negate.
    CHECK(mono(1, -4).substitute(-2, Var::q) == Laurent::monomial(Var::q, 1, 2));

    // Non-divisible exponents name the offender.
    try {
        (void)mono(1, 3).substitute(-2, Var::q);
        FAIL("expected ExponentError");
    } catch (const ExponentError& e) {
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
}

TEST_CASE("mirror is an involution") {
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        Laurent p = random_poly(rng);
        CHECK(p.mirrored().mirrored() == p);
    }
}

TEST_CASE("divisibility by a^12 - 1") {
    Laurent a12m1 = mono(1, 12) - mono(1, 0);
    CHECK(Laurent(Var::a).divisible_by_a12_minus_1());
    CHECK(a12m1.divisible_by_a12_minus_1());
    CHECK(!mono(1, 12).divisible_by_a12_minus_1());
    CHECK(!(a12m1 + mono(1, 5)).divisible_by_a12_minus_1());

    std::mt19937 rng(13);
    for (int i = 0; i < 100; ++i) {
        Laurent h = random_poly(rng);
        CHECK((h * a12m1).divisible_by_a12_minus_1());
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(17);
    for (int i = 0; i < 100; ++i) {
        Laurent p = random_poly(rng), r = random_poly(rng), s = random_poly(rng);
        CHECK(p + r == r + p);
        CHECK(p * r == r * p);
        CHECK((p + r) + s == p + (r + s));
        CHECK((p * r) * s == p * (r * s));
        CHECK(p * (r + s) == p * r + p * s);
    }
}

TEST_CASE("rendering and parsing round-trip") {
    Laurent trefoil = -mono(1, 5) - mono(1, -3) + mono(1, -7);
    CHECK(trefoil.str() == "-1*a^5 - 1*a^-3 + 1*a^-7");
    CHECK(Laurent::parse(trefoil.str()) == trefoil);
    CHECK(Laurent(Var::a).str() == "0");
    CHECK(Laurent::parse("0").is_zero());

    std::mt19937 rng(19);
    for (int i = 0; i < 100; ++i) {
        Laurent p = random_poly(rng, Var::q);
        if (p.is_zero()) continue;
        CHECK(Laurent::parse(p.str()) == p);
    }

    CHECK_THROWS_AS(Laurent::parse("1*a^"), ParseError);
    CHECK_THROWS_AS(Laurent::parse("1*a^2 + 1*q^1"), ParseError);
}
