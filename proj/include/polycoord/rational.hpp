#ifndef POLYCOORD_RATIONAL_HPP
#define POLYCOORD_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polycoord {

/**
 * Exact signed fraction of arbitrary precision, always held in lowest terms
 * with a positive denominator.
 *
 * Text form is "p/q" (also for integers, e.g. "3/1" and "0/1"). The parser
 * additionally accepts a bare integer "p".
 */
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {} // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);

    static Rational parse(std::string_view text);
    static Rational from_mpq(mpq_class value);

    std::string str() const;
    std::string numerator_str() const { return value_.get_num().get_str(); }
    std::string denominator_str() const { return value_.get_den().get_str(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// Floor/ceiling as integral rationals.
    Rational floor() const;
    Rational ceil() const;

    /// Integral value as int64; throws InvalidInput when not integral or out of range.
    std::int64_t to_int64() const;

    const mpq_class &mpq() const { return value_; }

    Rational &operator+=(const Rational &rhs) { value_ += rhs.value_; return *this; }
    Rational &operator-=(const Rational &rhs) { value_ -= rhs.value_; return *this; }
    Rational &operator*=(const Rational &rhs) { value_ *= rhs.value_; return *this; }
    Rational &operator/=(const Rational &rhs);

    friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational &x) { return from_mpq(mpq_class(-x.value_)); }

    friend bool operator==(const Rational &lhs, const Rational &rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

Rational min(const Rational &a, const Rational &b);
Rational max(const Rational &a, const Rational &b);

} // namespace polycoord

#endif // POLYCOORD_RATIONAL_HPP
