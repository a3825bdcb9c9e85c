#include "fpalg/random.hpp"
#include "fpalg/scalar.hpp"

#include <doctest.h>

#include <random>

using namespace fpalg;

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(7).is_integer());
    CHECK_FALSE(Rational(7, 2).is_integer());
    CHECK(Rational(0).is_zero());
    CHECK(Rational(-5, 3).sign() < 0);
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), Error);
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational round trips through strings") {
    for (const char* text : {"0", "1", "-1", "3/4", "-22/7", "1000000000000"}) {
        Rational r = Rational::from_string(text);
        CHECK(r.to_string() == text);
    }
}

TEST_CASE("gaussian units multiply as expected") {
    Scalar i = Scalar::i();
    CHECK(i * i == Scalar(-1));
    CHECK(Scalar(Rational(1, 2)) * (i * Scalar(Rational(1, 2))) ==
          i * Scalar(Rational(1, 4)));
    Scalar half_i = i * Scalar(Rational(1, 2));
    CHECK(half_i * half_i * Scalar(-1) == Scalar(Rational(1, 4)));
}

TEST_CASE("gaussian inverse satisfies z * z^-1 = 1") {
    std::mt19937 rng(11);
    for (int k = 0; k < 50; ++k) {
        Scalar z = random_scalar(rng);
        CHECK(z * z.inverse() == Scalar(1));
    }
    CHECK_THROWS_AS(Scalar(0).inverse(), Error);
}

TEST_CASE("gaussian field axioms on random samples") {
    std::mt19937 rng(12);
    for (int k = 0; k < 50; ++k) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Scalar(0) == a);
        CHECK(a * Scalar(1) == a);
        CHECK((a.conj() * a).im().is_zero());
    }
}

TEST_CASE("scalar printing covers every coefficient shape") {
    Scalar i = Scalar::i();
    CHECK(Scalar(0).to_string() == "0");
    CHECK(Scalar(Rational(3, 4)).to_string() == "3/4");
    CHECK(i.to_string() == "i");
    CHECK((-i).to_string() == "-i");
    CHECK((Scalar(3) * i).to_string() == "3*i");
    CHECK((Scalar(Rational(3, 4)) * i).to_string() == "3/4*i");
    CHECK((Scalar(Rational(1, 2)) - Scalar(Rational(3, 4)) * i).to_string() ==
          "1/2 - 3/4*i");
}

TEST_CASE("scalar round trips through strings") {
    std::mt19937 rng(13);
    for (int k = 0; k < 50; ++k) {
        Scalar z = random_scalar(rng);
        CHECK(Scalar::from_string(z.to_string()) == z);
    }
    CHECK(Scalar::from_string("0") == Scalar(0));
}
