#include "fpalg/random.hpp"

namespace fpalg {

Scalar random_scalar(std::mt19937& rng) {
    static const std::vector<Scalar> palette = [] {
        std::vector<Scalar> out;
        const Rational values[] = {Rational(1),     Rational(-1), Rational(2),
                                   Rational(-2),    Rational(1, 2), Rational(-1, 2),
                                   Rational(3, 4),  Rational(-3, 4)};
        for (const auto& v : values) out.push_back(Scalar(v));
        out.push_back(Scalar::i());
        out.push_back(-Scalar::i());
        out.push_back(Scalar(Rational(1), Rational(1)));
        out.push_back(Scalar(Rational(1, 2), Rational(-1)));
        out.push_back(Scalar(Rational(-2), Rational(1, 2)));
        return out;
    }();
    std::uniform_int_distribution<std::size_t> pick(0, palette.size() - 1);
    return palette[pick(rng)];
}

Poly random_poly(std::mt19937& rng, unsigned generator_count,
                 unsigned max_degree, unsigned max_terms) {
    std::uniform_int_distribution<unsigned> term_count(1, max_terms);
    std::uniform_int_distribution<unsigned> degree(0, max_degree);
    std::uniform_int_distribution<unsigned> letter(0, generator_count - 1);
    Poly out;
    unsigned terms = term_count(rng);
    for (unsigned t = 0; t < terms; ++t) {
        std::vector<unsigned> letters(degree(rng));
        for (auto& g : letters) g = letter(rng);
        out.add_term(Word(std::move(letters)), random_scalar(rng));
    }
    return out;
}

} // namespace fpalg
