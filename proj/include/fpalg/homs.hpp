#pragma once

#include "fpalg/algebras.hpp"

#include <map>
#include <string>
#include <vector>

namespace fpalg {

/// Algebra homomorphism given by generator images. The source keeps its full
/// presentation; the target is carried as a rewrite system so images and
/// residuals can be normalized. Value semantics throughout: a hom can be
/// copied, rebuilt with tweaked images, and verified independently.
struct Hom {
    std::string name;
    Presentation source;
    std::string target_name;
    RewriteSystem target;
    std::map<unsigned, Poly> images;

    /// Copy with one generator image replaced.
    Hom with_image(unsigned generator, Poly image) const;
};

enum class BuiltinHom {
    RacahToSl2,
    RacahToSo3,
    So3ToSl2,
    AcsaToSl2Z2,
    RacahToAcsa,
    AcsaZ2ToSl2Z2,
    Sl2Z2ToAcsaZ2,
    InclSl2InSl2Z2,
    InclAcsaInAcsaZ2,
};

const Hom& builtin_hom(BuiltinHom which);
std::optional<BuiltinHom> builtin_hom_from_name(std::string_view name);
const std::vector<std::string>& builtin_hom_names();

/// One verified identity: the checked polynomial residual and its verdict.
/// A check passes exactly when the residual is the zero polynomial. The
/// canonical rendering is captured eagerly because different checks of one
/// report may live over different alphabets (round trips, for instance).
struct Check {
    std::string label;
    Poly residual;
    std::string residual_text;
    bool pass;
};

Check make_check(std::string label, Poly residual, const Alphabet& alphabet);

struct Report {
    std::string title;
    std::vector<Check> checks;
    bool pass;
};

Report make_report(std::string title, std::vector<Check> checks);

/// Substitutes every defining relation of the source and normalizes in the
/// target: one check per relation. Requires an image for each generator that
/// occurs in the relations.
Report verify_hom(const Hom& hom);

/// Verification for homs out of the `racah` presentation, where the image of
/// Delta is not given but derived as half the commutator of the images of A
/// and B. Checks the two remaining defining relations against the derived
/// Delta and that the three designated central elements map to zero.
Report verify_racah_hom(const Hom& hom);

/// outer after inner. Image of g: inner's image pushed through outer's
/// images, normalized in outer's target.
Hom compose(const Hom& outer, const Hom& inner);

/// Checks h2(h1(g)) = g for every generator of h1's source and h1(h2(g)) = g
/// for every generator of h2's source. Requires the two homs to connect the
/// same pair of algebras in opposite directions.
Report verify_mutually_inverse(const Hom& h1, const Hom& h2);

/// Checks that two composable chains out of a common source agree on every
/// generator image in the common target. Chains compose left to right:
/// {f, g} means g after f.
Report verify_diagram(const std::vector<Hom>& path_a,
                      const std::vector<Hom>& path_b);

} // namespace fpalg
