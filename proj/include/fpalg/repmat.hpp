#pragma once

#include "fpalg/homs.hpp"

#include <string>
#include <vector>

namespace fpalg {

/// Dense square matrix over Q(i), row-major, exact entries.
class ExactMatrix {
public:
    explicit ExactMatrix(unsigned dim) : dim_(dim), entries_(std::size_t(dim) * dim) {}

    static ExactMatrix identity(unsigned dim);

    unsigned dim() const { return dim_; }
    const Scalar& at(unsigned row, unsigned col) const;
    Scalar& at(unsigned row, unsigned col);

    bool is_zero() const;

    ExactMatrix operator-() const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator*(const Scalar& c) const;

    bool operator==(const ExactMatrix& o) const = default;

    /// Rows as bracketed entry lists, one row per line.
    std::string to_string() const;

private:
    void check_same_dim(const ExactMatrix& o) const;

    unsigned dim_;
    std::vector<Scalar> entries_;
};

/// Matrices assigned to every generator of an alphabet, all of one dimension.
struct Representation {
    Alphabet alphabet;
    std::vector<ExactMatrix> images;
    unsigned dim;
};

/// The (n+1)-dimensional irreducible representation of the sl2 presentation
/// on basis v_0..v_n:
///   H v_k = (n - 2k) v_k,  E v_k = (n - k + 1) v_{k-1},  F v_k = (k + 1) v_{k+1}.
Representation sl2_irrep(unsigned n);

/// Basis reversal v_k -> v_{n-k}. Conjugation by it swaps the images of E and
/// F and negates the image of H, and it squares to the identity, so it
/// extends sl2_irrep(n) to the Z/2Z extension.
ExactMatrix weyl_operator(unsigned n);

/// Evaluates a polynomial by substituting the generator matrices.
ExactMatrix eval(const Poly& p, const Representation& rep);

/// Derived representations, all built on top of sl2_irrep(n).
enum class InducedRep { So3, Acsa, AcsaZ2, Sl2Z2, RacahImages };
Representation induced_rep(InducedRep which, unsigned n);

struct RepCheck {
    std::string label;
    ExactMatrix residual;
    bool pass;
};

struct RepReport {
    std::string title;
    std::vector<RepCheck> checks;
    bool pass;
};

/// Evaluates every rule of the system as the relation lhs - rhs and checks
/// that the result is the zero matrix.
RepReport verify_rep(const RewriteSystem& system, const Representation& rep);

/// For a representation of the racah presentation (including a matrix for
/// Delta): checks the three defining relations and the three designated
/// central elements.
RepReport verify_racah_rep(const Representation& rep);

} // namespace fpalg
