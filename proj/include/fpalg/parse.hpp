#pragma once

#include "fpalg/poly.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fpalg {

/// Parse failure with a 1-based character position in the input.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Syntax tree of an input expression. Multiplication is never implicit, "i"
/// is the imaginary unit, "^" takes a nonnegative integer exponent, and "/"
/// divides by a scalar-valued subexpression.
struct ExprNode {
    enum class Kind {
        Literal,    // value
        Generator,  // name
        Sum,        // children[0] + children[1]
        Difference, // children[0] - children[1]
        Product,    // children[0] * children[1]
        Quotient,   // children[0] / children[1], children[1] scalar-valued
        Power,      // children[0] ^ exponent
        Negation,   // -children[0]
    };

    Kind kind;
    std::size_t pos = 0;
    Scalar value;
    std::string name;
    unsigned long exponent = 0;
    std::vector<ExprNode> children;
};

/// Parses the expression grammar without resolving generator names.
ExprNode parse_expr_ast(std::string_view text);

/// Resolves names against the alphabet and folds the tree into a canonical
/// polynomial. Unknown generators and non-scalar divisors are reported with
/// their positions.
Poly lower_expr(const ExprNode& node, const Alphabet& alphabet);

/// parse_expr_ast followed by lower_expr.
Poly parse_expr(std::string_view text, const Alphabet& alphabet);

} // namespace fpalg
