#include "fpalg/homs.hpp"
#include "fpalg/parse.hpp"
#include "fpalg/print.hpp"

#include <doctest.h>

#include <string>

using namespace fpalg;

TEST_CASE("every builtin homomorphism verifies") {
    for (const auto& name : builtin_hom_names()) {
        const Hom& hom = builtin_hom(*builtin_hom_from_name(name));
        bool racah_source =
            hom.source.alphabet == builtin(Builtin::Racah).alphabet;
        Report report = racah_source ? verify_racah_hom(hom) : verify_hom(hom);
        INFO(name);
        CHECK(report.pass);
    }
}

TEST_CASE("hom lookup") {
    CHECK(builtin_hom_names().size() == 9);
    CHECK(builtin_hom_from_name("so3_to_sl2") == BuiltinHom::So3ToSl2);
    CHECK_FALSE(builtin_hom_from_name("nope").has_value());
    const Hom& hom = builtin_hom(BuiltinHom::So3ToSl2);
    CHECK(hom.name == "so3_to_sl2");
    CHECK(hom.target_name == "sl2");
    CHECK(hom.images.size() == 3);
}

TEST_CASE("relation verification catches a perturbed image") {
    const Hom& good = builtin_hom(BuiltinHom::So3ToSl2);
    REQUIRE(verify_hom(good).pass);

    // negate the image of I_2
    Hom bad = good.with_image(1, good.images.at(1) * Scalar(-1));
    Report report = verify_hom(bad);
    CHECK_FALSE(report.pass);
    CHECK_FALSE(report.checks[0].pass);
    CHECK_FALSE(report.checks[0].residual.is_zero());
}

TEST_CASE("verification of homs out of the racah presentation") {
    Report report = verify_racah_hom(builtin_hom(BuiltinHom::RacahToSl2));
    REQUIRE(report.checks.size() == 5);
    CHECK(report.pass);
    CHECK(report.checks[0].label == "B*C - C*B - 2*Delta -> 0");
    CHECK(report.checks[2].label == "alpha -> 0");
    for (const auto& check : report.checks) {
        CHECK(check.pass);
        CHECK(check.residual_text == "0");
    }

    // plain verify_hom has no image for Delta and must say so
    CHECK_THROWS_WITH_AS(verify_hom(builtin_hom(BuiltinHom::RacahToSl2)),
                         "no image for generator 'Delta'", Error);
}

TEST_CASE("composition pushes images through and normalizes") {
    const Hom& inner = builtin_hom(BuiltinHom::RacahToSo3);
    const Hom& outer = builtin_hom(BuiltinHom::So3ToSl2);
    Hom composed = compose(outer, inner);
    CHECK(composed.name == "so3_to_sl2 . racah_to_so3");
    CHECK(composed.source.name == "racah");
    CHECK(composed.target_name == "sl2");

    const RewriteSystem& sl2 = *builtin(Builtin::Sl2).system;
    const Hom& direct = builtin_hom(BuiltinHom::RacahToSl2);
    for (unsigned g = 0; g < 3; ++g)
        CHECK(composed.images.at(g) == sl2.normalize(direct.images.at(g)));

    // mismatched chain: target alphabet of inner differs from outer source
    CHECK_THROWS_AS(compose(outer, outer), Error);
}

TEST_CASE("mutually inverse pair verifies and a broken one fails") {
    const Hom& there = builtin_hom(BuiltinHom::AcsaZ2ToSl2Z2);
    const Hom& back = builtin_hom(BuiltinHom::Sl2Z2ToAcsaZ2);
    Report good = verify_mutually_inverse(there, back);
    CHECK(good.pass);
    CHECK(good.checks.size() == 8);

    Hom bad = back.with_image(2, Poly::gen(1)); // H -> J_2, dropping the 2
    Report report = verify_mutually_inverse(there, bad);
    CHECK_FALSE(report.pass);
}

TEST_CASE("diagram comparison reports per-generator agreement") {
    std::vector<Hom> top{builtin_hom(BuiltinHom::RacahToSl2),
                         builtin_hom(BuiltinHom::InclSl2InSl2Z2),
                         builtin_hom(BuiltinHom::Sl2Z2ToAcsaZ2)};
    std::vector<Hom> bottom{builtin_hom(BuiltinHom::RacahToAcsa),
                            builtin_hom(BuiltinHom::InclAcsaInAcsaZ2)};
    Report report = verify_diagram(top, bottom);
    REQUIRE(report.checks.size() == 3);
    CHECK(report.pass);
    CHECK(report.checks[0].label == "images of A agree");
}
