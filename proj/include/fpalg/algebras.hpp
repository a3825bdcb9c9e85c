#pragma once

#include "fpalg/rewrite.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fpalg {

/// A finitely presented algebra: named alphabet plus defining relations, with
/// the oriented rewrite system attached whenever the presentation carries one.
struct Presentation {
    std::string name;
    Alphabet alphabet;
    std::vector<Poly> relations;
    std::optional<RewriteSystem> system;
};

enum class Builtin { Sl2, So3, Acsa, Sl2Z2, AcsaZ2, Racah };

/// The six built-in presentations. All carry a confluent rewrite system
/// except `racah`, whose claims are only ever verified inside its targets.
const Presentation& builtin(Builtin which);
std::optional<Builtin> builtin_from_name(std::string_view name);
const std::vector<std::string>& builtin_names();

/// Distinguished data of the `racah` presentation: generator indices and the
/// three designated central elements expressed over its alphabet.
struct RacahData {
    unsigned a, b, c, delta;
    Poly alpha, beta, gamma;
    /// Delta rewritten through the commutator convention: (A*B - B*A)/2.
    Poly delta_from_ab;
};
const RacahData& racah_data();

/// The two bases that admit a Z/2Z extension by an involution.
enum class SkewBase { Sl2, Acsa };

const Presentation& base_presentation(SkewBase base);
const Presentation& extension_presentation(SkewBase base);
/// Index of the adjoined group generator inside the extension alphabet.
unsigned group_generator(SkewBase base);

/// Applies the defining involution of the base (E <-> F, H -> -H for sl2;
/// J_1 fixed, J_2 and J_3 negated for the anticommutator algebra) and returns
/// the normal form. The input must not mention the group generator.
Poly apply_automorphism(SkewBase base, const Poly& p);

/// Element a + b*g of the skew group ring, stored as its two components in
/// base normal form.
struct SkewPair {
    Poly even;
    Poly odd;

    bool operator==(const SkewPair& o) const = default;
};

/// Product in the skew group ring:
///   (a1 + b1*g) * (a2 + b2*g) = (a1*a2 + b1*phi(b2)) + (a1*b2 + b1*phi(a2))*g
/// with phi the defining involution. Components are normalized in the base.
SkewPair skew_pair_mul(const SkewPair& x, const SkewPair& y, SkewBase base);

/// Splits a normal form of the extension algebra into components. Requires
/// the group generator to appear only as the rightmost letter of a word, at
/// most once, which the extension's normal forms guarantee.
SkewPair pair_of_normal_form(const Poly& p, SkewBase base);

/// All irreducible words of exact degree `degree`, in increasing order.
std::vector<Word> irreducible_words(const RewriteSystem& system, std::size_t degree);

/// Number of irreducible words of exact degree `degree`.
std::size_t pbw_count(const RewriteSystem& system, std::size_t degree);

} // namespace fpalg
