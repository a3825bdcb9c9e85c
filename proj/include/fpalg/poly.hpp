#pragma once

#include "fpalg/scalar.hpp"
#include "fpalg/word.hpp"

#include <map>
#include <optional>
#include <utility>

namespace fpalg {

/// Noncommutative polynomial over Q(i) in canonical form: a term map keyed by
/// monomial in degree-lexicographic order, never holding a zero coefficient.
/// Two polynomials are equal iff their term maps are equal.
class Poly {
public:
    using Terms = std::map<Word, Scalar>;

    Poly() = default;
    Poly(long n) { add_term(Word(), Scalar(n)); }
    Poly(const Scalar& c) { add_term(Word(), c); }

    static Poly gen(unsigned g) { return monomial(Word::gen(g)); }
    static Poly monomial(Word w, Scalar c = Scalar(1));

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    /// Degree of the leading (largest) monomial; nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    /// Largest term, if any.
    std::optional<std::pair<Word, Scalar>> leading() const;

    /// Coefficient of `w` (zero if absent).
    Scalar coeff(const Word& w) const;

    void add_term(const Word& w, const Scalar& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Scalar& c) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Scalar& c);

    bool operator==(const Poly& o) const = default;

private:
    Terms terms_;
};

inline Poly operator*(const Scalar& c, const Poly& p) { return p * c; }
inline Poly operator*(long n, const Poly& p) { return p * Scalar(n); }
inline Poly operator+(const Poly& p, long n) { return p + Poly(n); }
inline Poly operator-(const Poly& p, long n) { return p - Poly(n); }

/// a*b - b*a
Poly commutator(const Poly& a, const Poly& b);
/// a*b + b*a
Poly anticommutator(const Poly& a, const Poly& b);

/// Applies the substitution sending generator g to images.at(g) to every term.
/// Every generator occurring in `p` must have an image; a missing one is an
/// error naming the generator via `source`, which also bounds valid indices.
Poly substitute(const Poly& p, const std::map<unsigned, Poly>& images,
                const Alphabet& source);

} // namespace fpalg
