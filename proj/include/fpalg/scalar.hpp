#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace fpalg {

/// Base class for every error thrown by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact rational number backed by GMP. Always stored reduced, denominator > 0.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& q);

    /// Parses "p" or "p/q" with optional leading sign.
    static Rational from_string(const std::string& text);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = cmp(v_, o.v_);
        return c <=> 0;
    }

    std::string to_string() const;

private:
    mpq_class v_;
};

/// Element of the Gaussian rationals Q(i): re + im*i with exact rational parts.
/// Equality is componentwise; every nonzero element is invertible.
class Scalar {
public:
    Scalar() = default;
    Scalar(long n) : re_(n) {}
    Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    /// The imaginary unit.
    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    /// Parses the textual form "a/b + c/d*i" with omitted zero parts.
    static Scalar from_string(const std::string& text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_rational() const { return im_.is_zero(); }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// |z|^2 = re^2 + im^2, zero iff z = 0.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar operator+(const Scalar& o) const { return Scalar(re_ + o.re_, im_ + o.im_); }
    Scalar operator-(const Scalar& o) const { return Scalar(re_ - o.re_, im_ - o.im_); }
    Scalar operator*(const Scalar& o) const {
        return Scalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    bool operator==(const Scalar& o) const = default;

    std::string to_string() const;

private:
    Rational re_;
    Rational im_;
};

inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }

} // namespace fpalg
