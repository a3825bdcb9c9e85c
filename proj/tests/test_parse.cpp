#include "fpalg/algebras.hpp"
#include "fpalg/parse.hpp"
#include "fpalg/print.hpp"
#include "fpalg/random.hpp"

#include <doctest.h>

#include <random>
#include <string>

using namespace fpalg;

namespace {
const Alphabet& sl2_alphabet() { return builtin(Builtin::Sl2).alphabet; }
} // namespace

TEST_CASE("expressions lower to canonical polynomials") {
    const Alphabet& a = sl2_alphabet();
    Poly E = Poly::gen(0), F = Poly::gen(1), H = Poly::gen(2);

    CHECK(parse_expr("E*F - H", a) == E * F - H);
    CHECK(parse_expr("H^2 - 4", a) == H * H - 4);
    CHECK(parse_expr("-E - -F", a) == F - E);
    CHECK(parse_expr("(E + F)^2", a) == E * E + E * F + F * E + F * F);
    CHECK(parse_expr("i*H", a) == Scalar::i() * H);
    CHECK(parse_expr("H/2", a) == H * Scalar(Rational(1, 2)));
    CHECK(parse_expr("3/4", a) == Poly(Scalar(Rational(3, 4))));
    CHECK(parse_expr("2^10", a) == Poly(1024));
    CHECK(parse_expr("E^0", a) == Poly(1));
}

TEST_CASE("the quadratic image expands to exactly five terms") {
    const Alphabet& a = sl2_alphabet();
    Poly E = Poly::gen(0), F = Poly::gen(1);
    Poly p = parse_expr("(E+F-2)*(E+F+2)/16", a);
    Scalar s(Rational(1, 16));
    Poly expected = (E * E + E * F + F * E + F * F) * s - Poly(Rational(1, 4));
    CHECK(p == expected);
    CHECK(p.term_count() == 5);
}

TEST_CASE("parse errors carry positions") {
    const Alphabet& a = sl2_alphabet();
    CHECK_THROWS_AS(parse_expr("E +", a), ParseError);
    CHECK_THROWS_AS(parse_expr("(E + F", a), ParseError);
    CHECK_THROWS_AS(parse_expr("E * X", a), ParseError);
    CHECK_THROWS_AS(parse_expr("E / F", a), ParseError);
    CHECK_THROWS_AS(parse_expr("E / 0", a), ParseError);
    CHECK_THROWS_AS(parse_expr("E ^ F", a), ParseError);
    CHECK_THROWS_AS(parse_expr("E F", a), ParseError); // juxtaposition disallowed
    CHECK_THROWS_AS(parse_expr("", a), ParseError);
    CHECK_THROWS_AS(parse_expr("E^99999", a), ParseError);

    try {
        parse_expr("E * X", a);
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
        CHECK(std::string(e.what()).find("position 5") != std::string::npos);
    }
}

TEST_CASE("division only by nonzero scalar subexpressions") {
    const Alphabet& a = sl2_alphabet();
    CHECK(parse_expr("H/(1/2)", a) == 2 * Poly::gen(2));
    CHECK(parse_expr("H/(2*i)", a) ==
          Poly::gen(2) * (Scalar(2) * Scalar::i()).inverse());
    CHECK_THROWS_AS(parse_expr("H/(1 - 1)", a), ParseError);
    // a divisor is fine as soon as it lowers to a nonzero constant
    CHECK(parse_expr("H/(E - E + 2)", a) ==
          Poly::gen(2) * Scalar(Rational(1, 2)));
}

TEST_CASE("printing and parsing are mutually inverse") {
    std::mt19937 rng(41);
    for (auto which : {Builtin::Sl2, Builtin::Acsa, Builtin::Sl2Z2, Builtin::Racah}) {
        const Presentation& pres = builtin(which);
        for (int k = 0; k < 50; ++k) {
            Poly p = random_poly(rng, unsigned(pres.alphabet.size()), 4);
            std::string text = to_string(p, pres.alphabet);
            CHECK(parse_expr(text, pres.alphabet) == p);
        }
    }
}
