#include "siglap/rational.hpp"

#include <cctype>
#include <ostream>

#include "siglap/errors.hpp"

namespace siglap {

Rational::Rational(long num, long den)
{
    if (den == 0)
        throw IllFormedInput("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q))
{
    if (q_.get_den() == 0)
        throw IllFormedInput("rational with zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto is_int = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };

    std::string_view num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_int(num, true) || !is_int(den, false))
        throw IllFormedInput("not a rational: '" + std::string(text) + "'");

    std::string n(num);
    if (n.front() == '+')
        n.erase(0, 1);
    mpz_class zn(n, 10), zd(std::string(den), 10);
    if (zd == 0)
        throw IllFormedInput("rational with zero denominator: '" + std::string(text) + "'");
    return Rational(mpq_class(zn, zd));
}

Rational Rational::abs() const
{
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw IllFormedInput("inverse of zero");
    Rational r;
    r.q_ = 1 / q_;
    r.q_.canonicalize();
    return r;
}

std::string Rational::str() const
{
    // mpq_class::get_str already omits "/1" for canonical integers.
    return q_.get_str(10);
}

Rational& Rational::operator+=(const Rational& o)
{
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw IllFormedInput("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::operator-() const
{
    Rational r;
    r.q_ = -q_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

}  // namespace siglap
