#pragma once

#include "fpalg/poly.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace fpalg {

/// Thrown by normalize when the rewrite-step budget runs out.
class FuelExhausted : public Error {
public:
    explicit FuelExhausted(long budget)
        : Error("normalization exceeded the rewrite budget of " +
                std::to_string(budget) + " steps") {}
};

/// Oriented rule lhs -> rhs. Every monomial of rhs is strictly smaller than
/// lhs in the degree-lexicographic order, so rewriting always descends.
struct RewriteRule {
    Word lhs;
    Poly rhs;

    bool operator==(const RewriteRule& o) const = default;
};

/// A reducible position inside a word: rule `rule` applies at offset `pos`.
struct Match {
    std::size_t pos;
    std::size_t rule;
};

/// Two rules meeting on one word. Overlap kind: a proper suffix of one
/// left-hand side equals a proper prefix of the other. Inclusion kind: one
/// left-hand side contains the other as a proper factor.
struct CriticalPair {
    enum class Kind { Overlap, Inclusion };

    Word word;          // the ambiguously reducible word
    std::size_t rule_a; // rule applied on the left/outside
    std::size_t rule_b; // rule applied on the right/inside
    Kind kind;
    Poly left;  // one-step reduction via rule_a
    Poly right; // one-step reduction via rule_b
};

struct ConfluenceEntry {
    Word word;
    Poly left_normal_form;
    Poly right_normal_form;
    bool resolved;
};

struct ConfluenceReport {
    std::vector<ConfluenceEntry> pairs;
    bool confluent;
};

/// Step budget for normalization: FPALG_FUEL from the environment when set to
/// a positive integer, otherwise 1000000.
long default_fuel();

/// A finite oriented rewriting system over an alphabet. Immutable after
/// construction; all queries are const and safe to run concurrently.
class RewriteSystem {
public:
    RewriteSystem(Alphabet alphabet, std::vector<RewriteRule> rules,
                  long fuel = default_fuel());

    /// Orients each nonzero relation r into leading(r) -> -rest(r)/lc(r).
    /// Fails when a relation has a constant leading monomial (unorientable)
    /// or two relations orient to the same left-hand side with different
    /// right-hand sides; duplicate rules are kept once.
    static RewriteSystem orient(const Alphabet& alphabet,
                                const std::vector<Poly>& relations,
                                long fuel = default_fuel());

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    long fuel() const { return fuel_; }
    /// Copy with a different step budget.
    RewriteSystem with_fuel(long fuel) const;

    /// Leftmost reducible position, trying rules in listing order at each
    /// offset; nullopt when the word is irreducible.
    std::optional<Match> find_match(const Word& w) const;
    bool is_reducible(const Word& w) const { return find_match(w).has_value(); }

    /// Full normal form: repeatedly rewrites the largest reducible monomial
    /// at its leftmost match until no monomial is reducible. Throws
    /// FuelExhausted when the step budget runs out.
    Poly normalize(const Poly& p) const;

    /// One rewrite of word `w` at the given match, scaled by `c`.
    Poly apply_at(const Word& w, const Scalar& c, const Match& m) const;

    /// All overlap and inclusion ambiguities between rules, sorted by
    /// ambiguous word, then rule indices. Deterministic for a fixed system.
    std::vector<CriticalPair> critical_pairs() const;

    /// Normalizes both sides of every critical pair. Confluent iff every pair
    /// resolves to the same normal form.
    ConfluenceReport check_confluence() const;

    bool operator==(const RewriteSystem& o) const {
        return alphabet_ == o.alphabet_ && rules_ == o.rules_;
    }

private:
    Alphabet alphabet_;
    std::vector<RewriteRule> rules_;
    long fuel_;
};

} // namespace fpalg
