#ifndef QSN_DETAIL_DENSE_Q_HPP
#define QSN_DETAIL_DENSE_Q_HPP

#include <vector>

#include "qsn/bilaurent.hpp"

namespace qsn::detail
{

/// Dense Laurent polynomial in q alone: c[i] is the coefficient of
/// q^(offset + i). Used on the hot paths of the lattice sums, where every
/// factor is z-free with integer exponents.
struct DenseQ
{
    long offset = 0;
    std::vector<BigInt> c;

    bool is_zero() const { return c.empty(); }

    static DenseQ one() { return DenseQ{0, {BigInt(1)}}; }
    static DenseQ from(const BiLaurent &p);

    /// Adds this * z^z q^qshift into out.
    void accumulate_into(BiLaurent &out, const Rational &qshift, long z) const;
};

DenseQ operator*(const DenseQ &a, const DenseQ &b);

/// In-place a += b.
void add_to(DenseQ &a, const DenseQ &b, long shift = 0);

/// Cached dense forms of qbin / qbin_plus (per thread).
const DenseQ &qbin_dense(long n, long m);
const DenseQ &qbin_plus_dense(long n, long m);

} // namespace qsn::detail

#endif
