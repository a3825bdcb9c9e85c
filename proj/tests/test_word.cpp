#include "fpalg/word.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

using namespace fpalg;

namespace {

Word random_word(std::mt19937& rng, unsigned gens, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<unsigned> gen(0, gens - 1);
    std::vector<unsigned> letters(len(rng));
    for (auto& l : letters) l = gen(rng);
    return Word(std::move(letters));
}

} // namespace

TEST_CASE("alphabet validates generator names") {
    Alphabet a({"E", "F", "H"});
    CHECK(a.size() == 3);
    CHECK(a.name(1) == "F");
    CHECK(a.index_of("H") == 2);
    CHECK_FALSE(a.index_of("X").has_value());
    CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), Error);
    CHECK_THROWS_AS(Alphabet({"E", "E"}), Error);
    CHECK_THROWS_AS(Alphabet({"i"}), Error);       // reserved for the unit
    CHECK_THROWS_AS(Alphabet({"2x"}), Error);      // not an identifier
    CHECK_THROWS_AS(Alphabet({"a b"}), Error);
    CHECK(valid_generator_name("J_1"));
    CHECK(valid_generator_name("_tmp"));
    CHECK_FALSE(valid_generator_name(""));
}

TEST_CASE("degree-lexicographic order ranks by length first") {
    Word e = Word::gen(0), f = Word::gen(1), h = Word::gen(2);
    CHECK(Word() < e);
    CHECK(e < f);
    CHECK(f < h);
    CHECK(h < e * e);        // longer beats any shorter word
    CHECK(e * f < f * e);    // same length: compare letters left to right
    CHECK(e * h < f * e);
    CHECK(deg_lex_compare(e * f, f * e) == std::strong_ordering::less);
}

TEST_CASE("order is a total strict order compatible with concatenation") {
    std::mt19937 rng(21);
    for (int k = 0; k < 200; ++k) {
        Word a = random_word(rng, 3, 5), b = random_word(rng, 3, 5),
             c = random_word(rng, 3, 5);
        // antisymmetry and totality
        CHECK(((a < b) + (b < a) + (a == b)) == 1);
        // transitivity spot check
        if (a < b && b < c) CHECK(a < c);
        // multiplication on either side preserves strict order
        if (a < b) {
            CHECK(c * a < c * b);
            CHECK(a * c < b * c);
        }
    }
}

TEST_CASE("word factor search") {
    Word e = Word::gen(0), f = Word::gen(1), h = Word::gen(2);
    Word w = h * f * e;
    CHECK(w.degree() == 3);
    CHECK(w.find(f * e) == 1);
    CHECK_FALSE(w.find(e * f).has_value());
    CHECK(w.contains(h));
    CHECK(w.ends_with(e));
    CHECK_FALSE(w.ends_with(f));
    CHECK(w.prefix(2) == h * f);
    CHECK(w.suffix(2) == f * e);
    CHECK(w.without(1, 1) == h * e);
    CHECK((Word() * w) == w);
}
