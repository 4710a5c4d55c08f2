#include "qsn/rational.hpp"

#include <climits>
#include <stdexcept>

namespace qsn
{

Rational::Rational(const BigInt &num, const BigInt &den)
{
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view s)
{
    std::string str(s);
    auto slash = str.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(str));
        return Rational(BigInt(str.substr(0, slash)), BigInt(str.substr(slash + 1)));
    } catch (const std::invalid_argument &) {
        throw std::invalid_argument("Rational: malformed value '" + str + "'");
    }
}

Rational operator/(const Rational &a, const Rational &b)
{
    if (b.is_zero())
        throw std::domain_error("Rational: division by zero");
    Rational r;
    r.value_ = a.value_ / b.value_;
    return r;
}

BigInt Rational::floor() const
{
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return r;
}

BigInt Rational::ceil() const
{
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return r;
}

long Rational::to_long() const
{
    if (!is_integer())
        throw std::domain_error("Rational: " + to_string() + " is not an integer");
    const BigInt n = value_.get_num();
    if (!n.fits_slong_p())
        throw std::domain_error("Rational: " + to_string() + " does not fit in long");
    return n.get_si();
}

std::string Rational::to_string() const
{
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string to_string(const BigInt &v) { return v.get_str(); }

} // namespace qsn
