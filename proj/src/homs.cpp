#include "fpalg/homs.hpp"

#include "fpalg/print.hpp"

namespace fpalg {

Hom Hom::with_image(unsigned generator, Poly image) const {
    Hom copy = *this;
    copy.images[generator] = std::move(image);
    return copy;
}

namespace {

Poly gp(unsigned g) { return Poly::gen(g); }

Hom make_hom(std::string name, const Presentation& source,
             const Presentation& target, std::map<unsigned, Poly> images) {
    if (!target.system)
        throw Error("hom '" + name + "': target '" + target.name +
                    "' carries no rewrite system");
    for (const auto& [g, image] : images) {
        if (g >= source.alphabet.size())
            throw Error("hom '" + name + "': image given for a generator "
                        "outside the source alphabet");
        for (const auto& [w, c] : image.terms())
            for (unsigned letter : w)
                if (letter >= target.alphabet.size())
                    throw Error("hom '" + name + "': image of '" +
                                source.alphabet.name(g) +
                                "' mentions a generator outside the target");
    }
    return Hom{std::move(name), source, target.name, *target.system,
               std::move(images)};
}

Hom make_racah_to_sl2() {
    const auto& src = builtin(Builtin::Racah);
    const auto& tgt = builtin(Builtin::Sl2);
    Poly E = gp(0), F = gp(1), H = gp(2);
    Scalar i = Scalar::i();
    Scalar sixteenth(Rational(1, 16));
    return make_hom("racah_to_sl2", src, tgt,
                    {{0, (E + F - 2) * (E + F + 2) * sixteenth},
                     {1, (H - 2) * (H + 2) * sixteenth},
                     {2, (i * E - i * F - 2) * (i * E - i * F + 2) * sixteenth}});
}

Hom make_racah_to_so3() {
    const auto& src = builtin(Builtin::Racah);
    const auto& tgt = builtin(Builtin::So3);
    Poly I1 = gp(0), I2 = gp(1), I3 = gp(2);
    Poly iu(Scalar::i());
    Scalar neg_quarter(Rational(-1, 4));
    return make_hom("racah_to_so3", src, tgt,
                    {{0, (I1 - iu) * (I1 + iu) * neg_quarter},
                     {1, (I2 - iu) * (I2 + iu) * neg_quarter},
                     {2, (I3 - iu) * (I3 + iu) * neg_quarter}});
}

Hom make_so3_to_sl2() {
    const auto& src = builtin(Builtin::So3);
    const auto& tgt = builtin(Builtin::Sl2);
    Poly E = gp(0), F = gp(1), H = gp(2);
    Scalar half_i = Scalar::i() * Scalar(Rational(1, 2));
    return make_hom("so3_to_sl2", src, tgt,
                    {{0, (E + F) * half_i},
                     {1, H * half_i},
                     {2, (E - F) * Scalar(Rational(1, 2))}});
}

std::map<unsigned, Poly> acsa_generator_images() {
    // Images of J_1, J_2, J_3 inside the extended sl2 algebra.
    Poly E = gp(0), F = gp(1), H = gp(2), rho = gp(3);
    Scalar half(Rational(1, 2));
    return {{0, (E + F) * rho * half}, {1, H * half}, {2, (E - F) * rho * half}};
}

Hom make_acsa_to_sl2z2() {
    return make_hom("acsa_to_sl2z2", builtin(Builtin::Acsa),
                    builtin(Builtin::Sl2Z2), acsa_generator_images());
}

Hom make_racah_to_acsa() {
    const auto& src = builtin(Builtin::Racah);
    const auto& tgt = builtin(Builtin::Acsa);
    Poly J1 = gp(0), J2 = gp(1), J3 = gp(2);
    Scalar quarter(Rational(1, 4));
    return make_hom("racah_to_acsa", src, tgt,
                    {{0, (J1 - 1) * (J1 + 1) * quarter},
                     {1, (J2 - 1) * (J2 + 1) * quarter},
                     {2, (J3 - 1) * (J3 + 1) * quarter}});
}

Hom make_acsa_z2_to_sl2_z2() {
    auto images = acsa_generator_images();
    images.emplace(3, gp(3));
    return make_hom("acsa_z2_to_sl2_z2", builtin(Builtin::AcsaZ2),
                    builtin(Builtin::Sl2Z2), std::move(images));
}

Hom make_sl2_z2_to_acsa_z2() {
    Poly J1 = gp(0), J2 = gp(1), J3 = gp(2), vr = gp(3);
    return make_hom("sl2_z2_to_acsa_z2", builtin(Builtin::Sl2Z2),
                    builtin(Builtin::AcsaZ2),
                    {{0, (J1 + J3) * vr}, {1, (J1 - J3) * vr}, {2, 2 * J2},
                     {3, vr}});
}

Hom make_inclusion(std::string name, Builtin small, Builtin big) {
    const auto& src = builtin(small);
    std::map<unsigned, Poly> images;
    for (unsigned g = 0; g < src.alphabet.size(); ++g) images.emplace(g, gp(g));
    return make_hom(std::move(name), src, builtin(big), std::move(images));
}

} // namespace

const Hom& builtin_hom(BuiltinHom which) {
    static const Hom racah_to_sl2 = make_racah_to_sl2();
    static const Hom racah_to_so3 = make_racah_to_so3();
    static const Hom so3_to_sl2 = make_so3_to_sl2();
    static const Hom acsa_to_sl2z2 = make_acsa_to_sl2z2();
    static const Hom racah_to_acsa = make_racah_to_acsa();
    static const Hom acsa_z2_to_sl2_z2 = make_acsa_z2_to_sl2_z2();
    static const Hom sl2_z2_to_acsa_z2 = make_sl2_z2_to_acsa_z2();
    static const Hom incl_sl2 =
        make_inclusion("incl_sl2_in_sl2z2", Builtin::Sl2, Builtin::Sl2Z2);
    static const Hom incl_acsa =
        make_inclusion("incl_acsa_in_acsaz2", Builtin::Acsa, Builtin::AcsaZ2);
    switch (which) {
        case BuiltinHom::RacahToSl2: return racah_to_sl2;
        case BuiltinHom::RacahToSo3: return racah_to_so3;
        case BuiltinHom::So3ToSl2: return so3_to_sl2;
        case BuiltinHom::AcsaToSl2Z2: return acsa_to_sl2z2;
        case BuiltinHom::RacahToAcsa: return racah_to_acsa;
        case BuiltinHom::AcsaZ2ToSl2Z2: return acsa_z2_to_sl2_z2;
        case BuiltinHom::Sl2Z2ToAcsaZ2: return sl2_z2_to_acsa_z2;
        case BuiltinHom::InclSl2InSl2Z2: return incl_sl2;
        case BuiltinHom::InclAcsaInAcsaZ2: return incl_acsa;
    }
    throw Error("unknown built-in homomorphism");
}

std::optional<BuiltinHom> builtin_hom_from_name(std::string_view name) {
    if (name == "racah_to_sl2") return BuiltinHom::RacahToSl2;
    if (name == "racah_to_so3") return BuiltinHom::RacahToSo3;
    if (name == "so3_to_sl2") return BuiltinHom::So3ToSl2;
    if (name == "acsa_to_sl2z2") return BuiltinHom::AcsaToSl2Z2;
    if (name == "racah_to_acsa") return BuiltinHom::RacahToAcsa;
    if (name == "acsa_z2_to_sl2_z2") return BuiltinHom::AcsaZ2ToSl2Z2;
    if (name == "sl2_z2_to_acsa_z2") return BuiltinHom::Sl2Z2ToAcsaZ2;
    if (name == "incl_sl2_in_sl2z2") return BuiltinHom::InclSl2InSl2Z2;
    if (name == "incl_acsa_in_acsaz2") return BuiltinHom::InclAcsaInAcsaZ2;
    return std::nullopt;
}

const std::vector<std::string>& builtin_hom_names() {
    static const std::vector<std::string> names{
        "racah_to_sl2",      "racah_to_so3",      "so3_to_sl2",
        "acsa_to_sl2z2",     "racah_to_acsa",     "acsa_z2_to_sl2_z2",
        "sl2_z2_to_acsa_z2", "incl_sl2_in_sl2z2", "incl_acsa_in_acsaz2"};
    return names;
}

Check make_check(std::string label, Poly residual, const Alphabet& alphabet) {
    bool pass = residual.is_zero();
    std::string text = to_string(residual, alphabet);
    return Check{std::move(label), std::move(residual), std::move(text), pass};
}

Report make_report(std::string title, std::vector<Check> checks) {
    bool pass = true;
    for (const auto& c : checks) pass = pass && c.pass;
    return Report{std::move(title), std::move(checks), pass};
}

Report verify_hom(const Hom& hom) {
    std::vector<Check> checks;
    for (const auto& rel : hom.source.relations) {
        Poly residual =
            hom.target.normalize(substitute(rel, hom.images, hom.source.alphabet));
        checks.push_back(make_check(to_string(rel, hom.source.alphabet) + " -> 0",
                                    std::move(residual), hom.target.alphabet()));
    }
    return make_report("verify-hom " + hom.name, std::move(checks));
}

Report verify_racah_hom(const Hom& hom) {
    const Presentation& racah = builtin(Builtin::Racah);
    if (hom.source.alphabet != racah.alphabet)
        throw Error("verify_racah_hom: '" + hom.name +
                    "' is not a hom out of the racah presentation");
    const RacahData& data = racah_data();
    std::map<unsigned, Poly> images;
    for (unsigned g : {data.a, data.b, data.c}) {
        auto it = hom.images.find(g);
        if (it == hom.images.end())
            throw Error("verify_racah_hom: '" + hom.name + "' has no image for '" +
                        racah.alphabet.name(g) + "'");
        images.emplace(g, hom.target.normalize(it->second));
    }
    // The image of Delta is not part of the data: it is derived from the
    // first relation and the remaining identities are checked against it.
    images[data.delta] = hom.target.normalize(
        substitute(data.delta_from_ab, images, racah.alphabet));

    auto residual_of = [&](const Poly& src_poly) {
        return hom.target.normalize(substitute(src_poly, images, racah.alphabet));
    };
    std::vector<Check> checks;
    auto push = [&](std::string label, Poly residual) {
        checks.push_back(make_check(std::move(label), std::move(residual),
                                    hom.target.alphabet()));
    };
    push("B*C - C*B - 2*Delta -> 0", residual_of(racah.relations[1]));
    push("C*A - A*C - 2*Delta -> 0", residual_of(racah.relations[2]));
    push("alpha -> 0", residual_of(data.alpha));
    push("beta -> 0", residual_of(data.beta));
    push("gamma -> 0", residual_of(data.gamma));
    return make_report("verify-racah " + hom.name, std::move(checks));
}

Hom compose(const Hom& outer, const Hom& inner) {
    if (inner.target.alphabet() != outer.source.alphabet)
        throw Error("compose: target of '" + inner.name +
                    "' does not match source of '" + outer.name + "'");
    std::map<unsigned, Poly> images;
    for (const auto& [g, image] : inner.images)
        images.emplace(g, outer.target.normalize(substitute(
                              image, outer.images, outer.source.alphabet)));
    return Hom{outer.name + " . " + inner.name, inner.source, outer.target_name,
               outer.target, std::move(images)};
}

Report verify_mutually_inverse(const Hom& h1, const Hom& h2) {
    if (h1.target_name != h2.source.name || h2.target_name != h1.source.name)
        throw Error("verify_mutually_inverse: '" + h1.name + "' and '" +
                    h2.name + "' do not connect the same two algebras");
    std::vector<Check> checks;
    auto direction = [&](const Hom& first, const Hom& second) {
        Hom round = compose(second, first);
        const Alphabet& alphabet = first.source.alphabet;
        for (unsigned g = 0; g < alphabet.size(); ++g) {
            auto it = round.images.find(g);
            if (it == round.images.end())
                throw Error("verify_mutually_inverse: no image for '" +
                            alphabet.name(g) + "'");
            Poly residual = second.target.normalize(it->second - Poly::gen(g));
            checks.push_back(make_check(first.source.name + " round trip: " +
                                            alphabet.name(g) + " -> " +
                                            to_string(it->second, alphabet),
                                        std::move(residual), alphabet));
        }
    };
    direction(h1, h2);
    direction(h2, h1);
    return make_report(
        "verify-inverse " + h1.name + "," + h2.name, std::move(checks));
}

Report verify_diagram(const std::vector<Hom>& path_a,
                      const std::vector<Hom>& path_b) {
    if (path_a.empty() || path_b.empty())
        throw Error("verify_diagram: a path has no homs");
    auto fold = [](const std::vector<Hom>& path) {
        Hom acc = path.front();
        for (std::size_t k = 1; k < path.size(); ++k)
            acc = compose(path[k], acc);
        return acc;
    };
    Hom comp_a = fold(path_a);
    Hom comp_b = fold(path_b);
    if (comp_a.source.alphabet != comp_b.source.alphabet)
        throw Error("verify_diagram: the paths start from different algebras");
    if (comp_a.target_name != comp_b.target_name)
        throw Error("verify_diagram: the paths end in different algebras");
    std::vector<Check> checks;
    for (const auto& [g, image_a] : comp_a.images) {
        auto it = comp_b.images.find(g);
        if (it == comp_b.images.end())
            throw Error("verify_diagram: the second path has no image for '" +
                        comp_a.source.alphabet.name(g) + "'");
        Poly residual = comp_a.target.normalize(image_a - it->second);
        checks.push_back(make_check(
            "images of " + comp_a.source.alphabet.name(g) + " agree",
            std::move(residual), comp_a.target.alphabet()));
    }
    if (comp_b.images.size() != comp_a.images.size())
        throw Error("verify_diagram: the paths map different generator sets");
    return make_report("verify-diagram " + comp_a.source.name + " => " +
                           comp_a.target_name, std::move(checks));
}

} // namespace fpalg
