#pragma once

#include "fpalg/homs.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fpalg {

/// A presentation loaded from structured text. The line-based format:
///
///   # comment
///   name: my_algebra
///   generators: X Y Z          (listing order = monomial precedence)
///   relation: X*Y + Y*X - Z    (each relation means expression = 0)
///   hom: embed -> sl2_z2       (optional blocks; target is a built-in)
///   image: X -> (E + F)*rho/2  (one per source generator)
///
/// Loading orients the relations; a file whose relations cannot be oriented
/// is rejected with the offending relation named.
struct PresentationFile {
    Presentation presentation;
    std::vector<Hom> homs;
};

PresentationFile parse_presentation_text(std::string_view text,
                                         const std::string& origin);

PresentationFile load_presentation_file(const std::string& path);

} // namespace fpalg
