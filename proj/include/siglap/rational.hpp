#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace siglap {

/**
 * Exact arbitrary-precision fraction.
 *
 * The value is kept canonical after every operation: the denominator is
 * positive and coprime to the numerator.  Equality is therefore field-wise.
 */
class Rational
{
public:
    Rational() = default;
    Rational(long value) : q_(value) {}
    Rational(int value) : q_(static_cast<long>(value)) {}
    Rational(long num, long den);
    explicit Rational(mpq_class q);

    /** Parses `p` or `p/q` (optional leading sign on p, q nonzero). Throws IllFormedInput. */
    static Rational parse(std::string_view text);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational abs() const;
    Rational inverse() const;

    /** Canonical `p/q` text, with `/q` omitted when q = 1. */
    std::string str() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace siglap
