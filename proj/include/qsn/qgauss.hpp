#ifndef QSN_QGAUSS_HPP
#define QSN_QGAUSS_HPP

#include <map>
#include <utility>

#include "qsn/bilaurent.hpp"

namespace qsn
{

/// Index pair (n, m) of a q-binomial; either entry may be negative.
struct QBinArgs
{
    long n = 0;
    long m = 0;

    friend auto operator<=>(const QBinArgs &, const QBinArgs &) = default;
};

/// (q)_n = (1-q)(1-q^2)...(1-q^n); (q)_0 = 1. Throws std::invalid_argument
/// for n < 0.
BiLaurent qpoch(long n);

/// Gaussian binomial (q)_n / ((q)_{n-m} (q)_m) for n >= m >= 0, zero
/// otherwise.
BiLaurent qbin(long n, long m);

/// Extended q-binomial: equals qbin for n >= 0; for n < 0 it is
/// (-1)^{n-m} q^{-((n-m)^2 + (n-m))/2} qbin(-m-1, -n-1)|_{q -> 1/q}.
BiLaurent qbin_plus(long n, long m);

/// Cheap zero test for qbin_plus without building the polynomial:
/// nonzero iff 0 <= m <= n (n >= 0) or m <= n (n < 0).
constexpr bool qbin_plus_nonzero(long n, long m)
{
    return n >= 0 ? (m >= 0 && m <= n) : (m <= n);
}

/// Ordinary binomial coefficient, zero outside 0 <= m <= n.
BigInt binomial(long n, long m);

/// Rebuilds qbin_plus on the window [n_lo, n_hi] x [m_lo, m_hi] using only
/// the two q-Pascal identities and the boundary values qbin_plus(m, m) = 1,
/// qbin_plus(n, 0) = 0 for n < 0.
///
/// Subtracting the identities gives, within each row n,
///   (1 - q^m) f(n, m) = (1 - q^{n+1-m}) f(n, m-1),
/// which is walked outward from the diagonal. Where the walk would divide by
/// 1 - q^0 (m = 0 approached from below on a row n < 0) the boundary value
/// f(n, 0) = 0 is used instead.
std::map<QBinArgs, BiLaurent> regenerate_qbin_plus(long n_lo, long n_hi, long m_lo, long m_hi);

namespace detail
{
/// Reference into a per-thread cache; valid for the lifetime of the calling
/// thread.
const BiLaurent &qbin_cached(long n, long m);
const BiLaurent &qbin_plus_cached(long n, long m);
} // namespace detail

} // namespace qsn

#endif
