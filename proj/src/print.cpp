#include "fpalg/print.hpp"

namespace fpalg {

std::string to_string(const Word& w, const Alphabet& alphabet) {
    if (w.empty()) return "1";
    std::string out;
    std::size_t pos = 0;
    while (pos < w.degree()) {
        unsigned g = w[pos];
        std::size_t run = 1;
        while (pos + run < w.degree() && w[pos + run] == g) ++run;
        if (!out.empty()) out += "*";
        out += alphabet.name(g);
        if (run > 1) out += "^" + std::to_string(run);
        pos += run;
    }
    return out;
}

namespace {

// Positive imaginary coefficient: "i", "2*i", "(1/4)*i".
std::string imaginary_coeff(const Rational& im) {
    if (im.is_one()) return "i";
    if (im.is_integer()) return im.to_string() + "*i";
    return "(" + im.to_string() + ")*i";
}

// Rendering of a coefficient with positive display sign in front of a word.
// Empty result means the coefficient is 1 and is dropped.
std::string coeff_prefix(const Scalar& c) {
    if (c.is_one()) return "";
    if (c.is_rational()) {
        if (c.re().is_integer()) return c.re().to_string();
        return "(" + c.re().to_string() + ")";
    }
    if (c.re().is_zero()) return imaginary_coeff(c.im());
    return "(" + c.to_string() + ")";
}

// Rendering of a constant term with positive display sign.
std::string constant_term(const Scalar& c) {
    if (c.is_rational()) return c.re().to_string();
    if (c.re().is_zero()) return imaginary_coeff(c.im());
    return "(" + c.to_string() + ")";
}

} // namespace

std::string to_string(const Poly& p, const Alphabet& alphabet) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [w, c] = *it;
        bool neg = c.re().is_zero() ? c.im().sign() < 0 : c.re().sign() < 0;
        Scalar mag = neg ? -c : c;
        std::string term;
        if (w.empty()) {
            term = constant_term(mag);
        } else {
            std::string prefix = coeff_prefix(mag);
            term = prefix.empty() ? to_string(w, alphabet)
                                  : prefix + "*" + to_string(w, alphabet);
        }
        if (out.empty())
            out = neg ? "-" + term : term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

} // namespace fpalg
