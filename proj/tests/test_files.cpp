#include "fpalg/homs.hpp"
#include "fpalg/presentation_file.hpp"
#include "fpalg/print.hpp"

#include <doctest.h>

#include <string>

using namespace fpalg;

namespace {
std::string shipped(const std::string& name) {
    return std::string(FPALG_SOURCE_DIR) + "/presentations/" + name;
}
} // namespace

TEST_CASE("every shipped presentation file loads and orients") {
    for (const char* name : {"sl2.alg", "so3.alg", "acsa.alg", "sl2_z2.alg",
                             "acsa_z2.alg", "racah.alg", "qacsa.alg",
                             "acsa_bad_hom.alg"}) {
        INFO(name);
        CHECK_NOTHROW(load_presentation_file(shipped(name)));
    }
}

TEST_CASE("loaded systems agree with the builtins") {
    PresentationFile file = load_presentation_file(shipped("sl2_z2.alg"));
    const Presentation& ref = builtin(Builtin::Sl2Z2);
    CHECK(file.presentation.name == "sl2_z2");
    CHECK(file.presentation.alphabet == ref.alphabet);
    REQUIRE(file.presentation.system.has_value());
    REQUIRE(file.presentation.system->rules().size() == ref.system->rules().size());
    for (std::size_t k = 0; k < ref.system->rules().size(); ++k) {
        CHECK(file.presentation.system->rules()[k].lhs == ref.system->rules()[k].lhs);
        CHECK(file.presentation.system->rules()[k].rhs == ref.system->rules()[k].rhs);
    }
    CHECK(file.presentation.system->check_confluence().confluent);
}

TEST_CASE("embedded homomorphism blocks verify or fail as shipped") {
    PresentationFile good = load_presentation_file(shipped("acsa.alg"));
    REQUIRE(good.homs.size() == 1);
    CHECK(good.homs[0].name == "embed");
    CHECK(good.homs[0].target_name == "sl2_z2");
    CHECK(verify_hom(good.homs[0]).pass);

    PresentationFile bad = load_presentation_file(shipped("acsa_bad_hom.alg"));
    REQUIRE(bad.homs.size() == 1);
    CHECK_FALSE(verify_hom(bad.homs[0]).pass);
}

TEST_CASE("the q-deformation sample loads without claims") {
    PresentationFile file = load_presentation_file(shipped("qacsa.alg"));
    CHECK(file.presentation.name == "qacsa");
    CHECK(file.presentation.alphabet.size() == 5);
    CHECK(file.presentation.system.has_value());
    CHECK(file.homs.empty());
}

TEST_CASE("malformed files are rejected with the offending line") {
    auto expect_error = [](const std::string& text, const std::string& needle) {
        try {
            parse_presentation_text(text, "test.alg");
            FAIL_CHECK("expected a load error containing '", needle, "'");
        } catch (const Error& e) {
            INFO(e.what());
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };

    expect_error("generators: X Y\nrelation: X*Y - Y*X\n", "name");
    expect_error("name: t\nrelation: X\n", "generators");
    expect_error("name: t\ngenerators: X Y\nrelation: X*Z\n", "test.alg:3");
    expect_error("name: t\ngenerators: X Y\nrelation: 1\n",
                 "cannot be oriented");
    expect_error("name: t\ngenerators: X Y\nrelation: X*Y - X*Y\n", "zero");
    expect_error("name: t\ngenerators: X Y\nrelation: Y*X - X\n"
                 "relation: Y*X - Y\n",
                 "left-hand side");
    expect_error("name: t\ngenerators: X Y\nrelation: Y*X - X\n"
                 "hom: h -> nowhere\nimage: X -> E\nimage: Y -> F\n",
                 "nowhere");
    expect_error("name: t\ngenerators: X Y\nrelation: Y*X - X\n"
                 "hom: h -> sl2\nimage: X -> E\n",
                 "image");
    expect_error("name: t\ngenerators: X Y\nrelation: Y*X - X\nbogus: 1\n",
                 "bogus");
    expect_error("image: X -> E\n", "image");
}

TEST_CASE("missing files surface a readable error") {
    CHECK_THROWS_AS(load_presentation_file(shipped("does_not_exist.alg")), Error);
}
