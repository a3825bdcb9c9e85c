#include "fpalg/poly.hpp"

namespace fpalg {

Poly Poly::monomial(Word w, Scalar c) {
    Poly p;
    p.add_term(w, c);
    return p;
}

std::optional<std::size_t> Poly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
}

std::optional<std::pair<Word, Scalar>> Poly::leading() const {
    if (terms_.empty()) return std::nullopt;
    return *terms_.rbegin();
}

Scalar Poly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

void Poly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out = *this;
    out += o;
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    Poly out = *this;
    out -= o;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    Poly out;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_)
            out.add_term(w1 * w2, c1 * c2);
    return out;
}

Poly Poly::operator*(const Scalar& c) const {
    Poly out;
    if (c.is_zero()) return out;
    for (const auto& [w, k] : terms_) out.terms_.emplace(w, k * c);
    return out;
}

Poly& Poly::operator*=(const Scalar& c) {
    *this = *this * c;
    return *this;
}

Poly commutator(const Poly& a, const Poly& b) { return a * b - b * a; }

Poly anticommutator(const Poly& a, const Poly& b) { return a * b + b * a; }

Poly substitute(const Poly& p, const std::map<unsigned, Poly>& images,
                const Alphabet& source) {
    Poly out;
    for (const auto& [w, c] : p.terms()) {
        Poly factor(c);
        for (unsigned g : w) {
            auto it = images.find(g);
            if (it == images.end())
                throw Error("no image for generator '" + source.name(g) + "'");
            factor = factor * it->second;
        }
        out += factor;
    }
    return out;
}

} // namespace fpalg
