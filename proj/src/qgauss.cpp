#include "qsn/qgauss.hpp"

#include <stdexcept>
#include <unordered_map>

namespace qsn
{

namespace
{

struct PairHash
{
    std::size_t operator()(const std::pair<long, long> &k) const noexcept
    {
        return std::hash<long>{}(k.first) * 0x9e3779b97f4a7c15ULL ^ std::hash<long>{}(k.second);
    }
};

using Cache = std::unordered_map<std::pair<long, long>, BiLaurent, PairHash>;

// 1 - q^k
BiLaurent one_minus_qk(long k)
{
    BiLaurent r = BiLaurent::one();
    r.add_term(Rational(k), 0, -1);
    return r;
}

const BiLaurent &zero_poly()
{
    static const BiLaurent z;
    return z;
}

} // namespace

BiLaurent qpoch(long n)
{
    if (n < 0)
        throw std::invalid_argument("qpoch: negative index " + std::to_string(n));
    // Dense product keeps this cheap for the sizes the engines use.
    std::vector<BigInt> c{BigInt(1)};
    for (long k = 1; k <= n; ++k) {
        std::vector<BigInt> next(c.size() + static_cast<std::size_t>(k), BigInt(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] += c[i];
            next[i + static_cast<std::size_t>(k)] -= c[i];
        }
        c = std::move(next);
    }
    return BiLaurent::from_q_coefficients(c);
}

const BiLaurent &detail::qbin_cached(long n, long m)
{
    if (!(n >= m && m >= 0))
        return zero_poly();
    thread_local Cache cache;
    auto it = cache.find({n, m});
    if (it != cache.end())
        return it->second;
    // Exact division with a zero-remainder post-check.
    BiLaurent v = divide_exact(qpoch(n), qpoch(n - m) * qpoch(m));
    return cache.emplace(std::make_pair(n, m), std::move(v)).first->second;
}

const BiLaurent &detail::qbin_plus_cached(long n, long m)
{
    if (n >= 0)
        return qbin_cached(n, m);
    if (!qbin_plus_nonzero(n, m))
        return zero_poly();
    thread_local Cache cache;
    auto it = cache.find({n, m});
    if (it != cache.end())
        return it->second;
    const long k = n - m;
    BiLaurent v = invert_q(qbin_cached(-m - 1, -n - 1)).shifted(Rational(-(k * k + k), 2));
    if (k % 2 != 0)
        v = -std::move(v);
    return cache.emplace(std::make_pair(n, m), std::move(v)).first->second;
}

BiLaurent qbin(long n, long m) { return detail::qbin_cached(n, m); }

BiLaurent qbin_plus(long n, long m) { return detail::qbin_plus_cached(n, m); }

BigInt binomial(long n, long m)
{
    if (!(n >= m && m >= 0))
        return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
    return r;
}

std::map<QBinArgs, BiLaurent> regenerate_qbin_plus(long n_lo, long n_hi, long m_lo, long m_hi)
{
    std::map<QBinArgs, BiLaurent> table;
    for (long n = n_lo; n <= n_hi; ++n) {
        const long lo = std::min(m_lo, n);
        const long hi = std::max(m_hi, n);
        std::map<long, BiLaurent> row;
        row[n] = BiLaurent::one();
        for (long m = n; m > lo; --m) {
            // f(n, m-1) = f(n, m) (1 - q^m) / (1 - q^{n+1-m})
            row[m - 1] = divide_exact(row[m] * one_minus_qk(m), one_minus_qk(n + 1 - m));
        }
        for (long m = n + 1; m <= hi; ++m) {
            if (m == 0) {
                row[m] = BiLaurent{}; // boundary: f(n, 0) = 0 for n < 0
                continue;
            }
            // f(n, m) = f(n, m-1) (1 - q^{n+1-m}) / (1 - q^m)
            row[m] = divide_exact(row[m - 1] * one_minus_qk(n + 1 - m), one_minus_qk(m));
        }
        for (long m = m_lo; m <= m_hi; ++m)
            table.emplace(QBinArgs{n, m}, std::move(row[m]));
    }
    return table;
}

} // namespace qsn
