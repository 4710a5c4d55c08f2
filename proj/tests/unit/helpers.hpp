#ifndef QSN_TEST_HELPERS_HPP
#define QSN_TEST_HELPERS_HPP

#include <initializer_list>
#include <random>
#include <tuple>

#include "qsn/bilaurent.hpp"

namespace qsn::test
{

/// Builds a polynomial from (q exponent, z exponent, coefficient) triples.
inline BiLaurent P(std::initializer_list<std::tuple<const char *, long, long>> terms)
{
    BiLaurent p;
    for (const auto &[q, z, c] : terms)
        p.add_term(Rational::parse(q), z, c);
    return p;
}

/// z-free polynomial from dense coefficients starting at q^0.
inline BiLaurent Q(std::initializer_list<long> coeffs, long offset = 0)
{
    BiLaurent p;
    long e = offset;
    for (long c : coeffs)
        p.add_term(Rational(e++), 0, c);
    return p;
}

/// Random polynomial with half-integer q exponents in [-4, 4] and z in [-2, 2].
inline BiLaurent random_poly(std::mt19937_64 &rng, int max_terms = 6)
{
    std::uniform_int_distribution<int> nterms(0, max_terms), qe(-8, 8), ze(-2, 2), co(-5, 5);
    BiLaurent p;
    for (int i = nterms(rng); i > 0; --i)
        p.add_term(Rational(qe(rng), 2), ze(rng), co(rng));
    return p;
}

} // namespace qsn::test

#endif
