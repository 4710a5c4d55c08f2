#ifndef QSN_RATIONAL_HPP
#define QSN_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qsn
{

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper around GMP's mpq_class.
class Rational
{
public:
    Rational() = default;
    Rational(long v) : value_(v) {}
    Rational(const BigInt &v) : value_(v) {}
    /// Throws std::domain_error when den == 0.
    Rational(const BigInt &num, const BigInt &den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Accepts "n" or "n/d" with optional leading sign.
    static Rational parse(std::string_view s);

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }
    const mpq_class &get() const { return value_; }

    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    BigInt floor() const;
    BigInt ceil() const;

    /// Integer value; throws std::domain_error if not integral or not
    /// representable as long.
    long to_long() const;

    /// "n" when integral, otherwise "n/d".
    std::string to_string() const;

    Rational &operator+=(const Rational &o)
    {
        value_ += o.value_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        value_ -= o.value_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        value_ *= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(const Rational &a, const Rational &b);
    friend Rational operator-(const Rational &a)
    {
        Rational r;
        r.value_ = -a.value_;
        return r;
    }

    friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

/// Floor division for integers, rounding toward minus infinity.
constexpr long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

constexpr long ceil_div(long a, long b) { return -floor_div(-a, b); }

/// Mathematical (non-negative) remainder.
constexpr long mod_floor(long a, long b) { return a - b * floor_div(a, b); }

std::string to_string(const BigInt &v);

} // namespace qsn

#endif
