#include "fpalg/scalar.hpp"

#include <cctype>
#include <cstddef>

namespace fpalg {

Rational::Rational(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) {
    // mpq_class arithmetic keeps values canonical; canonicalize defensively
    // for values built from raw numerator/denominator pairs.
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw Error("invalid rational literal '" + text + "'");
    if (q.get_den() == 0) throw Error("rational with zero denominator");
    q.canonicalize();
    return Rational(q);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw Error("division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

std::string Rational::to_string() const {
    return v_.get_str();
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

Scalar Scalar::inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw Error("division by zero");
    return Scalar(re_ / n, -im_ / n);
}

namespace {

// Reads a rational magnitude ("p" or "p/q", no sign) starting at pos.
Rational read_rational(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw Error("invalid scalar literal '" + s + "'");
    std::string num = s.substr(start, pos - start);
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) throw Error("invalid scalar literal '" + s + "'");
        return Rational::from_string(num + "/" + s.substr(dstart, pos - dstart));
    }
    return Rational::from_string(num);
}

void skip_spaces(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
}

// One signed part: either a rational or [rational*]i. Returns its value.
Scalar read_part(const std::string& s, std::size_t& pos) {
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
        skip_spaces(s, pos);
    }
    Scalar value;
    if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        value = Scalar::i();
    } else {
        Rational mag = read_rational(s, pos);
        if (pos < s.size() && s[pos] == '*') {
            if (pos + 1 >= s.size() || s[pos + 1] != 'i')
                throw Error("invalid scalar literal '" + s + "'");
            pos += 2;
            value = Scalar(Rational(0), mag);
        } else {
            value = Scalar(mag);
        }
    }
    return neg ? -value : value;
}

} // namespace

Scalar Scalar::from_string(const std::string& text) {
    std::size_t pos = 0;
    skip_spaces(text, pos);
    Scalar result = read_part(text, pos);
    skip_spaces(text, pos);
    if (pos < text.size()) {
        if (text[pos] != '+' && text[pos] != '-')
            throw Error("invalid scalar literal '" + text + "'");
        Scalar second = read_part(text, pos);
        if (!result.is_rational() || second.is_rational())
            throw Error("invalid scalar literal '" + text + "'");
        result += second;
        skip_spaces(text, pos);
    }
    if (pos != text.size()) throw Error("invalid scalar literal '" + text + "'");
    return result;
}

namespace {

// Renders the imaginary part (must be nonzero) without sign handling quirks:
// callers pass a value whose sign they want printed via leading '-'.
std::string imaginary_string(const Rational& im) {
    if (im.is_one()) return "i";
    if (im == Rational(-1)) return "-i";
    return im.to_string() + "*i";
}

} // namespace

std::string Scalar::to_string() const {
    if (is_zero()) return "0";
    if (im_.is_zero()) return re_.to_string();
    if (re_.is_zero()) return imaginary_string(im_);
    std::string out = re_.to_string();
    if (im_.sign() > 0)
        out += " + " + imaginary_string(im_);
    else
        out += " - " + imaginary_string(-im_);
    return out;
}

} // namespace fpalg
