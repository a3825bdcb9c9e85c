#include "fpalg/algebras.hpp"
#include "fpalg/parse.hpp"
#include "fpalg/print.hpp"
#include "fpalg/random.hpp"

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

using namespace fpalg;

namespace {

std::vector<std::string> rule_strings(const Presentation& pres) {
    std::vector<std::string> out;
    for (const auto& rule : pres.system->rules())
        out.push_back(to_string(rule.lhs, pres.alphabet) + " -> " +
                      to_string(rule.rhs, pres.alphabet));
    return out;
}

} // namespace

TEST_CASE("builtin lookup") {
    CHECK(builtin_names().size() == 6);
    CHECK(builtin_from_name("sl2") == Builtin::Sl2);
    CHECK(builtin_from_name("acsa_z2") == Builtin::AcsaZ2);
    CHECK_FALSE(builtin_from_name("nope").has_value());
    CHECK(builtin(Builtin::Racah).system == std::nullopt);
    for (auto which : {Builtin::Sl2, Builtin::So3, Builtin::Acsa,
                       Builtin::Sl2Z2, Builtin::AcsaZ2})
        CHECK(builtin(which).system.has_value());
}

TEST_CASE("oriented rules of the builtin systems") {
    CHECK(rule_strings(builtin(Builtin::Sl2)) ==
          std::vector<std::string>{
              "H*E -> E*H + 2*E",
              "H*F -> F*H - 2*F",
              "F*E -> E*F - H",
          });
    CHECK(rule_strings(builtin(Builtin::Acsa)) ==
          std::vector<std::string>{
              "J_2*J_1 -> -J_1*J_2 + J_3",
              "J_3*J_2 -> -J_2*J_3 + J_1",
              "J_3*J_1 -> -J_1*J_3 + J_2",
          });
    CHECK(rule_strings(builtin(Builtin::Sl2Z2)) ==
          std::vector<std::string>{
              "H*E -> E*H + 2*E",
              "H*F -> F*H - 2*F",
              "F*E -> E*F - H",
              "rho*E -> F*rho",
              "rho*F -> E*rho",
              "rho*H -> -H*rho",
              "rho^2 -> 1",
          });
    CHECK(rule_strings(builtin(Builtin::AcsaZ2)) ==
          std::vector<std::string>{
              "J_2*J_1 -> -J_1*J_2 + J_3",
              "J_3*J_2 -> -J_2*J_3 + J_1",
              "J_3*J_1 -> -J_1*J_3 + J_2",
              "vrho*J_1 -> J_1*vrho",
              "vrho*J_2 -> -J_2*vrho",
              "vrho*J_3 -> -J_3*vrho",
              "vrho^2 -> 1",
          });
}

TEST_CASE("every builtin system is confluent") {
    for (auto which : {Builtin::Sl2, Builtin::So3, Builtin::Acsa,
                       Builtin::Sl2Z2, Builtin::AcsaZ2})
        CHECK(builtin(which).system->check_confluence().confluent);
}

TEST_CASE("irreducible word counts match the closed form") {
    const RewriteSystem& sl2 = *builtin(Builtin::Sl2).system;
    CHECK(pbw_count(sl2, 0) == 1);
    CHECK(pbw_count(sl2, 1) == 3);
    CHECK(pbw_count(sl2, 2) == 6);
    CHECK(pbw_count(sl2, 5) == 21);
    CHECK(irreducible_words(sl2, 2).size() == 6);

    const RewriteSystem& ext = *builtin(Builtin::Sl2Z2).system;
    CHECK(pbw_count(ext, 0) == 1);
    CHECK(pbw_count(ext, 1) == 4); // E, F, H, rho
}

TEST_CASE("the defining automorphisms act as stated") {
    Poly E = Poly::gen(0), F = Poly::gen(1), H = Poly::gen(2);
    CHECK(apply_automorphism(SkewBase::Sl2, E) == F);
    CHECK(apply_automorphism(SkewBase::Sl2, F) == E);
    CHECK(apply_automorphism(SkewBase::Sl2, H) == -H);
    Poly J1 = Poly::gen(0), J2 = Poly::gen(1), J3 = Poly::gen(2);
    CHECK(apply_automorphism(SkewBase::Acsa, J1) == J1);
    CHECK(apply_automorphism(SkewBase::Acsa, J2) == -J2);
    CHECK(apply_automorphism(SkewBase::Acsa, J3) == -J3);
    // automorphism property on a product
    Poly p = apply_automorphism(SkewBase::Sl2, E * H + 2 * F);
    const RewriteSystem& sys = *builtin(Builtin::Sl2).system;
    CHECK(p == sys.normalize(F * -H + 2 * E));
}

TEST_CASE("the automorphisms square to the identity on random elements") {
    std::mt19937 rng(61);
    for (auto base : {SkewBase::Sl2, SkewBase::Acsa}) {
        const RewriteSystem& sys = *base_presentation(base).system;
        for (int k = 0; k < 25; ++k) {
            Poly p = sys.normalize(random_poly(rng, 3, 4));
            CHECK(apply_automorphism(base, apply_automorphism(base, p)) == p);
        }
    }
}

TEST_CASE("skew pairs track products in the extension") {
    const Presentation& ext = extension_presentation(SkewBase::Sl2);
    const RewriteSystem& ext_sys = *ext.system;
    Poly E = Poly::gen(0), F = Poly::gen(1), rho = Poly::gen(3);

    // (E*rho)^2 = E * phi(E) = E*F as an even element
    Poly square = ext_sys.normalize(E * rho * E * rho);
    SkewPair pair = pair_of_normal_form(square, SkewBase::Sl2);
    CHECK(pair.even == builtin(Builtin::Sl2).system->normalize(E * F));
    CHECK(pair.odd.is_zero());

    // group generator sits at index 3 in both extensions
    CHECK(group_generator(SkewBase::Sl2) == 3);
    CHECK(group_generator(SkewBase::Acsa) == 3);

    // decompose then recompose: x = even + odd * rho
    Poly x = ext_sys.normalize(E * F * rho + 2 * F + rho);
    SkewPair parts = pair_of_normal_form(x, SkewBase::Sl2);
    CHECK(ext_sys.normalize(parts.even + parts.odd * rho) == x);
}

TEST_CASE("pair extraction rejects unreduced input") {
    Poly E = Poly::gen(0), rho = Poly::gen(3);
    // rho*E is reducible in the extension: the group letter is not rightmost
    CHECK_THROWS_AS(pair_of_normal_form(rho * E, SkewBase::Sl2), Error);
    CHECK_THROWS_AS(pair_of_normal_form(rho * rho, SkewBase::Sl2), Error);
}

TEST_CASE("skew multiplication oracle matches on fixed samples") {
    const RewriteSystem& base = *builtin(Builtin::Sl2).system;
    Poly E = Poly::gen(0), F = Poly::gen(1), H = Poly::gen(2);
    SkewPair x{base.normalize(E * F), base.normalize(H)};
    SkewPair y{Poly(1), base.normalize(E + F)};
    SkewPair z = skew_pair_mul(x, y, SkewBase::Sl2);
    // even: EF*1 + H*phi(E+F) = EF + H*(F+E); odd: EF*(E+F) + H*1
    CHECK(z.even == base.normalize(E * F + H * (E + F)));
    CHECK(z.odd == base.normalize(E * F * (E + F) + H));
}

TEST_CASE("racah relation data") {
    RacahData data = racah_data();
    Poly A = Poly::gen(data.a), B = Poly::gen(data.b);
    CHECK(data.delta_from_ab == (A * B - B * A) * Scalar(Rational(1, 2)));
    Poly C = Poly::gen(data.c), D = Poly::gen(data.delta);
    CHECK(data.alpha == commutator(A, D) + A * C - B * A);
    CHECK(data.beta == commutator(B, D) + B * A - C * B);
    CHECK(data.gamma == commutator(C, D) + C * B - A * C);
    // the non-commutator parts cancel in the sum, leaving [A+B+C, Delta]
    CHECK(data.alpha + data.beta + data.gamma == commutator(A + B + C, D));
}
