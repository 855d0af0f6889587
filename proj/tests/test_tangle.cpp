#include <doctest.h>

#include <random>

#include "skein/tangle.hpp"

using namespace skein;

namespace {

Laurent mono(int c, int e) { return Laurent::monomial(Var::a, c, e); }

TangleRef random_tangle(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> leaf(-3, 3);
    std::uniform_int_distribution<int> kind(0, depth > 0 ? 3 : 1);
    switch (kind(rng)) {
        case 0: return Tangle::horizontal(leaf(rng));
        case 1: return Tangle::vertical(leaf(rng));
        case 2: return Tangle::sum(random_tangle(rng, depth - 1), random_tangle(rng, depth - 1));
        default:
            return Tangle::product(random_tangle(rng, depth - 1), random_tangle(rng, depth - 1));
    }
}

}  // namespace

TEST_CASE("twist leaf vectors") {
    // br([1/3]) and its mirror, as printed.
    BracketVector v = bracket_vector(Tangle::vertical(3));
    CHECK(v.f == mono(1, -1) - mono(1, 3) + mono(1, 7));
    CHECK(v.g == mono(1, -3));

    BracketVector m = bracket_vector(Tangle::mirror(Tangle::vertical(3)));
    CHECK(m.f == mono(1, 1) - mono(1, -3) + mono(1, -7));
    CHECK(m.g == mono(1, 3));

    // Degenerate leaves.
    CHECK(bracket_vector(Tangle::zero()).f == mono(1, 0));
    CHECK(bracket_vector(Tangle::zero()).g.is_zero());
    CHECK(bracket_vector(Tangle::infinity()).f.is_zero());
    CHECK(bracket_vector(Tangle::infinity()).g == mono(1, 0));

    // A single crossing reads the same horizontally and vertically.
    CHECK(bracket_vector(Tangle::horizontal(1)) == bracket_vector(Tangle::vertical(1)));
}

TEST_CASE("negative twist counts normalize to mirrors") {
    TangleRef t = Tangle::horizontal(-3);
    CHECK(t->kind() == Tangle::Kind::mirror);
    CHECK(bracket_vector(t) == bracket_vector(Tangle::mirror(Tangle::horizontal(3))));
}

TEST_CASE("the tangle T_3") {
    TangleRef t3 = Tangle::product(
        Tangle::sum(Tangle::mirror(Tangle::vertical(3)), Tangle::vertical(3)),
        Tangle::horizontal(1));
    BracketVector v = bracket_vector(t3);
    CHECK(v.f == mono(1, 7) - mono(3, 3) + mono(2, -1) - mono(2, -5) + mono(1, -9));
    CHECK(v.g == mono(1, 9) - mono(1, 5) - mono(1, -7) + mono(1, -11));

    Laurent d = closure_bracket(t3, Closure::denominator);
    CHECK(d == -mono(1, 11) + mono(1, 7) - mono(2, 3) + mono(2, -1) - mono(1, -5) + mono(1, -9) -
                   mono(1, -13));
    CHECK(d.span() == 24);

    // Pairing with [3] gives the 10-crossing knot of span 8 in t-units.
    Laurent p = pairing(t3, Tangle::horizontal(3));
    CHECK(p.max_exp() == 12);
    CHECK(p.coeff(12) == -1);
    CHECK(p.min_exp() == -20);
    CHECK(p.coeff(-20) == -1);
    CHECK(p.span() == 32);
}

TEST_CASE("closures") {
    // [1/n]^D = delta a^-n + a^(-n+2) sum (-a^4)^k.
    Laurent delta = Laurent::delta();
    for (int n = 1; n <= 6; ++n) {
        Laurent expect = delta * mono(1, -n);
        for (int k = 0; k < n; ++k) expect += mono((k % 2) ? -1 : 1, -n + 2 + 4 * k);
        CHECK(closure_bracket(Tangle::vertical(n), Closure::denominator) == expect);
    }
    // [0]^N is the two-component unlink.
    CHECK(closure_bracket(Tangle::zero(), Closure::numerator) == delta);
    CHECK(closure_bracket(Tangle::zero(), Closure::denominator) == mono(1, 0));
}

TEST_CASE("pairing agrees with the closed sum and is symmetric") {
    std::mt19937 rng(31);
    for (int i = 0; i < 60; ++i) {
        TangleRef t = random_tangle(rng, 2), u = random_tangle(rng, 2);
        Laurent p = pairing(t, u);
        CHECK(p == closure_bracket(Tangle::sum(t, u), Closure::numerator));
        CHECK(p == pairing(u, t));
    }
    // Pairing against the basis tangles reads off the closures.
    TangleRef t = random_tangle(rng, 3);
    CHECK(pairing(t, Tangle::zero()) == closure_bracket(t, Closure::numerator));
    CHECK(pairing(t, Tangle::infinity()) == closure_bracket(t, Closure::denominator));
}

TEST_CASE("sum via the matrix equals expansion by bilinearity") {
    std::mt19937 rng(37);
    Laurent delta = Laurent::delta();
    for (int i = 0; i < 60; ++i) {
        TangleRef t = random_tangle(rng, 2), u = random_tangle(rng, 2);
        BracketVector bt = bracket_vector(t), bu = bracket_vector(u);
        BracketVector sum = bracket_vector(Tangle::sum(t, u));
        // Resolve u over the basis: T+[0] = T and br(T+[inf]) = (0, f + delta g).
        CHECK(sum.f == bu.f * bt.f);
        CHECK(sum.g == bu.f * bt.g + bu.g * (bt.f + delta * bt.g));
    }
}

TEST_CASE("mirroring commutes with closure") {
    std::mt19937 rng(41);
    for (int i = 0; i < 60; ++i) {
        TangleRef t = random_tangle(rng, 3);
        for (Closure c : {Closure::numerator, Closure::denominator}) {
            CHECK(closure_bracket(Tangle::mirror(t), c) == closure_bracket(t, c).mirrored());
        }
    }
}

TEST_CASE("closure exponents share the crossing-count parity") {
    std::mt19937 rng(43);
    for (int i = 0; i < 80; ++i) {
        TangleRef t = random_tangle(rng, 3);
        for (Closure c : {Closure::numerator, Closure::denominator}) {
            Laurent b = closure_bracket(t, c);
            for (const auto& [e, coeff] : b.terms()) {
                CHECK(((e - t->crossing_count()) % 2 + 2) % 2 == 0);
            }
        }
    }
}

TEST_CASE("writhe normalization") {
    CHECK(normalize_bracket(mono(1, 0), 0) == mono(1, 0));

    // Trefoil anchor: bracket of T(2,3) with writhe 3 maps to t + t^3 - t^4.
    Laurent trefoil = -mono(1, 5) - mono(1, -3) + mono(1, -7);
    Laurent x = normalize_bracket(trefoil, 3);
    CHECK(x == mono(1, -4) + mono(1, -12) - mono(1, -16));
    Laurent v = x.substitute(-2, Var::q);
    CHECK(v == Laurent::monomial(Var::q, 1, 2) + Laurent::monomial(Var::q, 1, 6) -
                   Laurent::monomial(Var::q, 1, 8));

    // The mirrored diagram with writhe -3 gives the mirrored polynomial.
    Laurent y = normalize_bracket(trefoil.mirrored(), -3);
    CHECK(y == x.mirrored());

    // After normalization all exponents are even (multiples of 4 for knots).
    for (const auto& [e, c] : x.terms()) CHECK(e % 4 == 0);
}

TEST_CASE("tangle grammar round-trip") {
    auto [t, cl] = parse_closed_tangle("(( -[1/3] + [1/5] ) * [1] )^D");
    CHECK(cl == Closure::denominator);
    CHECK(format_tangle(t) == "((-[1/3] + [1/5]) * [1])");

    std::mt19937 rng(47);
    for (int i = 0; i < 60; ++i) {
        TangleRef a = random_tangle(rng, 3);
        TangleRef b = parse_tangle(format_tangle(a));
        CHECK(format_tangle(b) == format_tangle(a));
        CHECK(bracket_vector(b) == bracket_vector(a));
    }

    // Product binds tighter than sum.
    TangleRef t2 = parse_tangle("[1] + [2] * [3]");
    CHECK(t2->kind() == Tangle::Kind::sum);

    CHECK_THROWS_AS(parse_tangle("[2/3]"), ParseError);
    CHECK_THROWS_AS(parse_tangle("[1/3] +"), ParseError);
    CHECK_THROWS_AS(parse_closed_tangle("[1/3]^X"), ParseError);
}

TEST_CASE("shared subtrees evaluate like duplicated ones") {
    TangleRef shared = Tangle::sum(Tangle::vertical(2), Tangle::horizontal(2));
    TangleRef with_sharing = Tangle::product(shared, shared);
    TangleRef duplicated = Tangle::product(
        Tangle::sum(Tangle::vertical(2), Tangle::horizontal(2)),
        Tangle::sum(Tangle::vertical(2), Tangle::horizontal(2)));
    CHECK(bracket_vector(with_sharing) == bracket_vector(duplicated));

    // Deep sharing: the expanded tree has 2^8 leaves, the DAG has one.
    TangleRef big = shared;
    for (int i = 0; i < 8; ++i) big = Tangle::sum(big, big);
    BracketVector v = bracket_vector(big);
    CHECK(!v.f.is_zero());
    CHECK(bracket_vector(big) == v);
}
