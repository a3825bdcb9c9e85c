#include "fpalg/algebras.hpp"

#include "fpalg/print.hpp"

namespace fpalg {

namespace {

Poly gp(unsigned g) { return Poly::gen(g); }

Presentation make_sl2() {
    Alphabet a({"E", "F", "H"});
    Poly E = gp(0), F = gp(1), H = gp(2);
    std::vector<Poly> rels{
        commutator(H, E) - 2 * E,
        commutator(H, F) + 2 * F,
        commutator(E, F) - H,
    };
    auto system = RewriteSystem::orient(a, rels);
    return {"sl2", std::move(a), std::move(rels), std::move(system)};
}

Presentation make_so3() {
    Alphabet a({"I_1", "I_2", "I_3"});
    Poly I1 = gp(0), I2 = gp(1), I3 = gp(2);
    std::vector<Poly> rels{
        commutator(I1, I2) - I3,
        commutator(I2, I3) - I1,
        commutator(I3, I1) - I2,
    };
    auto system = RewriteSystem::orient(a, rels);
    return {"so3", std::move(a), std::move(rels), std::move(system)};
}

Presentation make_acsa() {
    Alphabet a({"J_1", "J_2", "J_3"});
    Poly J1 = gp(0), J2 = gp(1), J3 = gp(2);
    std::vector<Poly> rels{
        anticommutator(J1, J2) - J3,
        anticommutator(J2, J3) - J1,
        anticommutator(J3, J1) - J2,
    };
    auto system = RewriteSystem::orient(a, rels);
    return {"acsa", std::move(a), std::move(rels), std::move(system)};
}

Presentation make_sl2_z2() {
    Alphabet a({"E", "F", "H", "rho"});
    Poly E = gp(0), F = gp(1), H = gp(2), rho = gp(3);
    // The commutation of rho past E and past F are both stored even though
    // either follows from the other together with rho^2 = 1: the oriented
    // system needs both directions to be confluent.
    std::vector<Poly> rels{
        commutator(H, E) - 2 * E,
        commutator(H, F) + 2 * F,
        commutator(E, F) - H,
        rho * E - F * rho,
        E * rho - rho * F,
        H * rho + rho * H,
        rho * rho - 1,
    };
    auto system = RewriteSystem::orient(a, rels);
    return {"sl2_z2", std::move(a), std::move(rels), std::move(system)};
}

Presentation make_acsa_z2() {
    Alphabet a({"J_1", "J_2", "J_3", "vrho"});
    Poly J1 = gp(0), J2 = gp(1), J3 = gp(2), vr = gp(3);
    std::vector<Poly> rels{
        anticommutator(J1, J2) - J3,
        anticommutator(J2, J3) - J1,
        anticommutator(J3, J1) - J2,
        vr * J1 - J1 * vr,
        vr * J2 + J2 * vr,
        vr * J3 + J3 * vr,
        vr * vr - 1,
    };
    auto system = RewriteSystem::orient(a, rels);
    return {"acsa_z2", std::move(a), std::move(rels), std::move(system)};
}

Presentation make_racah() {
    Alphabet a({"A", "B", "C", "Delta"});
    Poly A = gp(0), B = gp(1), C = gp(2), D = gp(3);
    std::vector<Poly> rels{
        commutator(A, B) - 2 * D,
        commutator(B, C) - 2 * D,
        commutator(C, A) - 2 * D,
    };
    return {"racah", std::move(a), std::move(rels), std::nullopt};
}

} // namespace

const Presentation& builtin(Builtin which) {
    static const Presentation sl2 = make_sl2();
    static const Presentation so3 = make_so3();
    static const Presentation acsa = make_acsa();
    static const Presentation sl2_z2 = make_sl2_z2();
    static const Presentation acsa_z2 = make_acsa_z2();
    static const Presentation racah = make_racah();
    switch (which) {
        case Builtin::Sl2: return sl2;
        case Builtin::So3: return so3;
        case Builtin::Acsa: return acsa;
        case Builtin::Sl2Z2: return sl2_z2;
        case Builtin::AcsaZ2: return acsa_z2;
        case Builtin::Racah: return racah;
    }
    throw Error("unknown built-in algebra");
}

std::optional<Builtin> builtin_from_name(std::string_view name) {
    if (name == "sl2") return Builtin::Sl2;
    if (name == "so3") return Builtin::So3;
    if (name == "acsa") return Builtin::Acsa;
    if (name == "sl2_z2") return Builtin::Sl2Z2;
    if (name == "acsa_z2") return Builtin::AcsaZ2;
    if (name == "racah") return Builtin::Racah;
    return std::nullopt;
}

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names{"sl2",    "so3",     "acsa",
                                                "sl2_z2", "acsa_z2", "racah"};
    return names;
}

const RacahData& racah_data() {
    static const RacahData data = [] {
        Poly A = gp(0), B = gp(1), C = gp(2), D = gp(3);
        RacahData d{0, 1, 2, 3, Poly(), Poly(), Poly(), Poly()};
        d.alpha = commutator(A, D) + A * C - B * A;
        d.beta = commutator(B, D) + B * A - C * B;
        d.gamma = commutator(C, D) + C * B - A * C;
        d.delta_from_ab = commutator(A, B) * Scalar(Rational(1, 2));
        return d;
    }();
    return data;
}

const Presentation& base_presentation(SkewBase base) {
    return builtin(base == SkewBase::Sl2 ? Builtin::Sl2 : Builtin::Acsa);
}

const Presentation& extension_presentation(SkewBase base) {
    return builtin(base == SkewBase::Sl2 ? Builtin::Sl2Z2 : Builtin::AcsaZ2);
}

unsigned group_generator(SkewBase base) {
    return static_cast<unsigned>(base_presentation(base).alphabet.size());
}

namespace {

const std::map<unsigned, Poly>& involution_images(SkewBase base) {
    static const std::map<unsigned, Poly> sl2{
        {0, gp(1)}, {1, gp(0)}, {2, -gp(2)}};
    static const std::map<unsigned, Poly> acsa{
        {0, gp(0)}, {1, -gp(1)}, {2, -gp(2)}};
    return base == SkewBase::Sl2 ? sl2 : acsa;
}

void require_base_word(const Word& w, SkewBase base, const char* where) {
    const Presentation& pres = base_presentation(base);
    for (unsigned g : w)
        if (g >= pres.alphabet.size())
            throw Error(std::string(where) +
                        ": element mentions a generator outside the base "
                        "algebra '" + pres.name + "'");
}

} // namespace

Poly apply_automorphism(SkewBase base, const Poly& p) {
    const Presentation& pres = base_presentation(base);
    for (const auto& [w, c] : p.terms())
        require_base_word(w, base, "apply_automorphism");
    return pres.system->normalize(
        substitute(p, involution_images(base), pres.alphabet));
}

SkewPair skew_pair_mul(const SkewPair& x, const SkewPair& y, SkewBase base) {
    const Presentation& pres = base_presentation(base);
    for (const Poly* part : {&x.even, &x.odd, &y.even, &y.odd})
        for (const auto& [w, c] : part->terms())
            require_base_word(w, base, "skew_pair_mul");
    const RewriteSystem& sys = *pres.system;
    return {
        sys.normalize(x.even * y.even + x.odd * apply_automorphism(base, y.odd)),
        sys.normalize(x.even * y.odd + x.odd * apply_automorphism(base, y.even)),
    };
}

SkewPair pair_of_normal_form(const Poly& p, SkewBase base) {
    const unsigned g = group_generator(base);
    SkewPair out;
    for (const auto& [w, c] : p.terms()) {
        bool odd = false;
        for (std::size_t pos = 0; pos < w.degree(); ++pos) {
            if (w[pos] > g)
                throw Error("pair_of_normal_form: element mentions a generator "
                            "outside the extension algebra");
            if (w[pos] == g) {
                if (pos + 1 != w.degree())
                    throw Error(
                        "pair_of_normal_form: element is not in normal form, "
                        "the group generator appears away from the right end "
                        "in " + to_string(w, extension_presentation(base).alphabet));
                odd = true;
            }
        }
        if (odd)
            out.odd.add_term(w.prefix(w.degree() - 1), c);
        else
            out.even.add_term(w, c);
    }
    return out;
}

namespace {

bool ends_with_rule_lhs(const std::vector<unsigned>& word,
                        const RewriteSystem& system) {
    for (const auto& rule : system.rules()) {
        std::size_t n = rule.lhs.degree();
        if (n > word.size()) continue;
        bool hit = true;
        for (std::size_t k = 0; k < n; ++k)
            if (word[word.size() - n + k] != rule.lhs[k]) { hit = false; break; }
        if (hit) return true;
    }
    return false;
}

void extend_irreducible(std::vector<unsigned>& word, std::size_t degree,
                        const RewriteSystem& system, std::vector<Word>& out) {
    if (word.size() == degree) {
        out.push_back(Word(word));
        return;
    }
    // A forbidden factor inside a growing word is always detected the moment
    // its last letter is appended, so checking suffixes alone is exhaustive.
    for (unsigned g = 0; g < system.alphabet().size(); ++g) {
        word.push_back(g);
        if (!ends_with_rule_lhs(word, system))
            extend_irreducible(word, degree, system, out);
        word.pop_back();
    }
}

} // namespace

std::vector<Word> irreducible_words(const RewriteSystem& system, std::size_t degree) {
    std::vector<Word> out;
    std::vector<unsigned> word;
    extend_irreducible(word, degree, system, out);
    return out;
}

std::size_t pbw_count(const RewriteSystem& system, std::size_t degree) {
    return irreducible_words(system, degree).size();
}

} // namespace fpalg
