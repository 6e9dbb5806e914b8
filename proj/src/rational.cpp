#include "polycoord/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "polycoord/errors.hpp"

namespace polycoord {

namespace {

bool is_integer_literal(std::string_view text) {
    if (text.empty()) {
        return false;
    }
    std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
    if (start == text.size()) {
        return false;
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view text) {
    if (!is_integer_literal(text)) {
        throw InvalidInput("malformed rational component '" + std::string(text) + "'");
    }
    std::string digits(text.front() == '+' ? text.substr(1) : text);
    return mpz_class(digits, 10);
}

} // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw InvalidInput("zero denominator");
    }
    value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    Rational r;
    if (slash == std::string_view::npos) {
        r.value_ = mpq_class(parse_integer(text));
        return r;
    }
    const mpz_class num = parse_integer(text.substr(0, slash));
    const mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
        throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    }
    r.value_ = mpq_class(num, den);
    r.value_.canonicalize();
    return r;
}

Rational Rational::from_mpq(mpq_class value) {
    Rational r;
    r.value_ = std::move(value);
    r.value_.canonicalize();
    return r;
}

std::string Rational::str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return from_mpq(mpq_class(q));
}

Rational Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return from_mpq(mpq_class(q));
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) {
        throw InvalidInput("rational " + str() + " is not an integer");
    }
    const mpz_class &num = value_.get_num();
    static const mpz_class lo(std::to_string(std::numeric_limits<std::int64_t>::min()), 10);
    static const mpz_class hi(std::to_string(std::numeric_limits<std::int64_t>::max()), 10);
    if (num < lo || num > hi) {
        throw InvalidInput("integer " + num.get_str() + " exceeds 64-bit range");
    }
    return std::stoll(num.get_str());
}

Rational &Rational::operator/=(const Rational &rhs) {
    if (rhs.is_zero()) {
        throw InvalidInput("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

Rational min(const Rational &a, const Rational &b) { return b < a ? b : a; }
Rational max(const Rational &a, const Rational &b) { return a < b ? b : a; }

} // namespace polycoord
