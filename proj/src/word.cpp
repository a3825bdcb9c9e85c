#include "fpalg/word.hpp"

#include <cctype>
#include <unordered_set>

namespace fpalg {

bool valid_generator_name(std::string_view name) {
    if (name.empty() || name == "i") return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
    for (char c : name.substr(1))
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw Error("alphabet must list at least one generator");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (!valid_generator_name(n))
            throw Error("invalid generator name '" + n + "'");
        if (!seen.insert(n).second)
            throw Error("duplicate generator name '" + n + "'");
    }
}

const std::string& Alphabet::name(unsigned g) const {
    if (g >= names_.size()) throw Error("generator index out of range");
    return names_[g];
}

std::optional<unsigned> Alphabet::index_of(std::string_view name) const {
    for (std::size_t k = 0; k < names_.size(); ++k)
        if (names_[k] == name) return static_cast<unsigned>(k);
    return std::nullopt;
}

Word Word::operator*(const Word& o) const {
    std::vector<unsigned> letters = letters_;
    letters.insert(letters.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(letters));
}

Word Word::prefix(std::size_t len) const {
    if (len > letters_.size()) throw Error("prefix length exceeds word degree");
    return Word(std::vector<unsigned>(letters_.begin(), letters_.begin() + len));
}

Word Word::suffix(std::size_t len) const {
    if (len > letters_.size()) throw Error("suffix length exceeds word degree");
    return Word(std::vector<unsigned>(letters_.end() - len, letters_.end()));
}

Word Word::without(std::size_t pos, std::size_t len) const {
    if (pos + len > letters_.size()) throw Error("segment exceeds word degree");
    std::vector<unsigned> letters(letters_.begin(), letters_.begin() + pos);
    letters.insert(letters.end(), letters_.begin() + pos + len, letters_.end());
    return Word(std::move(letters));
}

std::optional<std::size_t> Word::find(const Word& w, std::size_t from) const {
    if (w.degree() > letters_.size()) return std::nullopt;
    for (std::size_t pos = from; pos + w.degree() <= letters_.size(); ++pos) {
        bool hit = true;
        for (std::size_t k = 0; k < w.degree(); ++k)
            if (letters_[pos + k] != w[k]) { hit = false; break; }
        if (hit) return pos;
    }
    return std::nullopt;
}

bool Word::ends_with(const Word& w) const {
    if (w.degree() > letters_.size()) return false;
    std::size_t off = letters_.size() - w.degree();
    for (std::size_t k = 0; k < w.degree(); ++k)
        if (letters_[off + k] != w[k]) return false;
    return true;
}

} // namespace fpalg
