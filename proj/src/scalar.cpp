#include "algch/scalar.hpp"

#include "algch/error.hpp"

#include <cctype>
#include <ostream>

namespace algch {

Rational parse_rational(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s.push_back(ch);
    auto valid_int = [](std::string_view v) {
        if (!v.empty() && (v.front() == '-' || v.front() == '+'))
            v.remove_prefix(1);
        if (v.empty())
            return false;
        for (char ch : v)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                return false;
        return true;
    };
    const auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
        throw Error("malformed rational '" + std::string(text) + "'");
    if (num.front() == '+')
        num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0)
        throw Error("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Scalar Scalar::inverse() const
{
    const Rational n = norm2();
    if (sgn(n) == 0)
        throw Error("division by zero scalar");
    return {re_ / n, -im_ / n};
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

std::string to_string(const Scalar& s)
{
    if (s.is_real())
        return to_string(s.re());
    std::string im;
    if (s.im() == 1)
        im = "i";
    else if (s.im() == -1)
        im = "-i";
    else
        im = to_string(s.im()) + "i";
    if (sgn(s.re()) == 0)
        return im;
    return to_string(s.re()) + (sgn(s.im()) > 0 ? "+" : "") + im;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

} // namespace algch
