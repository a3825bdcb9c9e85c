#include "fpalg/poly.hpp"
#include "fpalg/random.hpp"

#include <doctest.h>

#include <random>

using namespace fpalg;

TEST_CASE("polynomial basics") {
    Poly E = Poly::gen(0), F = Poly::gen(1), H = Poly::gen(2);
    CHECK(Poly().is_zero());
    CHECK(Poly(0).is_zero());
    CHECK_FALSE(Poly(1).is_zero());
    CHECK((E - E).is_zero());
    CHECK((E * F).term_count() == 1);
    CHECK((E * F + F * E).term_count() == 2);
    CHECK((E + F).degree() == 1);
    CHECK((E * F - H).degree() == 2);
    CHECK_FALSE(Poly().degree().has_value());
    auto lead = (E * F - H).leading();
    REQUIRE(lead.has_value());
    CHECK(lead->first == Word::gen(0) * Word::gen(1));
    CHECK(lead->second == Scalar(1));
    CHECK((E * F - H).coeff(Word::gen(2)) == Scalar(-1));
    CHECK((E * F - H).coeff(Word::gen(1)) == Scalar(0));
}

TEST_CASE("ring identities on random polynomials") {
    std::mt19937 rng(31);
    for (int k = 0; k < 60; ++k) {
        Poly a = random_poly(rng, 3, 3), b = random_poly(rng, 3, 3),
             c = random_poly(rng, 3, 3);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * Poly(1) == a);
        CHECK(Poly(1) * a == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("commutator and anticommutator expand correctly") {
    Poly E = Poly::gen(0), F = Poly::gen(1);
    CHECK(commutator(E, F) == E * F - F * E);
    CHECK(anticommutator(E, F) == E * F + F * E);
    CHECK(commutator(E, E).is_zero());
}

TEST_CASE("substitution replaces generators by images") {
    Alphabet source({"X", "Y"});
    Poly X = Poly::gen(0), Y = Poly::gen(1);
    Poly E = Poly::gen(0), F = Poly::gen(1);
    std::map<unsigned, Poly> images{{0, E + F}, {1, Poly(2)}};
    // X*Y + Y -> (E+F)*2 + 2
    CHECK(substitute(X * Y + Y, images, source) == (E + F) * Poly(2) + 2);

    std::map<unsigned, Poly> partial{{0, E}};
    CHECK_THROWS_WITH_AS(substitute(X * Y, partial, source),
                         "no image for generator 'Y'", Error);
    // generators without an image are fine as long as they never occur
    CHECK(substitute(X * X, partial, source) == E * E);
}

TEST_CASE("scalar multiples and constants") {
    Poly E = Poly::gen(0);
    CHECK(Scalar::i() * E + Scalar::i() * E == 2 * (Scalar::i() * E));
    CHECK((E + 1) - 1 == E);
    CHECK(2 * (E * Scalar(Rational(1, 2))) == E);
}
