#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace algch {

using Rational = mpq_class;

/// Parse "p", "-p/q" (arbitrary precision). Throws Error on malformed text or zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Gaussian rational re + i*im. The coefficient field of every complex in the library.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}
    Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im))
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return {re_, -im_}; }
    /// |z|^2 = re^2 + im^2.
    Rational norm2() const { return re_ * re_ + im_ * im_; }
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return {-re_, -im_}; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    Rational re_{0};
    Rational im_{0};
};

/// "3/2", "-1/3+2i", "i" style rendering; exact.
std::string to_string(const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// (-1)^k as a Scalar.
inline Scalar sign_scalar(int k) { return Scalar((k % 2 == 0) ? 1L : -1L); }

} // namespace algch
