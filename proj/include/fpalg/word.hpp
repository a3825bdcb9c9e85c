#pragma once

#include "fpalg/scalar.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fpalg {

/// Ordered list of generator names. The listing order fixes the precedence
/// used by the degree-lexicographic monomial order: earlier names are smaller.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(unsigned g) const;
    const std::vector<std::string>& names() const { return names_; }
    std::optional<unsigned> index_of(std::string_view name) const;

    bool operator==(const Alphabet& o) const = default;

private:
    std::vector<std::string> names_;
};

/// Returns whether `name` is usable as a generator name: an identifier
/// ([A-Za-z_][A-Za-z0-9_]*) other than the reserved imaginary unit "i".
bool valid_generator_name(std::string_view name);

/// Monomial of the free algebra: a finite sequence of generator indices.
/// The empty word is the multiplicative identity. Comparison is the
/// degree-lexicographic order: shorter words first, ties by letter indices.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<unsigned> letters) : letters_(std::move(letters)) {}

    static Word gen(unsigned g) { return Word({g}); }

    std::size_t degree() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    unsigned operator[](std::size_t pos) const { return letters_[pos]; }
    const std::vector<unsigned>& letters() const { return letters_; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    /// Concatenation.
    Word operator*(const Word& o) const;

    Word prefix(std::size_t len) const;
    Word suffix(std::size_t len) const;
    /// The word with the length-`len` segment at `pos` removed.
    Word without(std::size_t pos, std::size_t len) const;

    /// First position >= from where `w` occurs as a factor, if any.
    std::optional<std::size_t> find(const Word& w, std::size_t from = 0) const;
    /// Whether `w` occurs as a factor (contiguous subword).
    bool contains(const Word& w) const { return find(w).has_value(); }
    /// Whether `w` is a suffix.
    bool ends_with(const Word& w) const;

    bool operator==(const Word& o) const = default;
    std::strong_ordering operator<=>(const Word& o) const {
        if (letters_.size() != o.letters_.size())
            return letters_.size() <=> o.letters_.size();
        return letters_ <=> o.letters_;
    }

private:
    std::vector<unsigned> letters_;
};

/// Three-way degree-lexicographic comparison, exposed as a named helper.
inline std::strong_ordering deg_lex_compare(const Word& a, const Word& b) {
    return a <=> b;
}

} // namespace fpalg
