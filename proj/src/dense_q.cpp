#include "qsn/detail/dense_q.hpp"

#include <stdexcept>
#include <unordered_map>

#include "qsn/qgauss.hpp"

namespace qsn::detail
{

DenseQ DenseQ::from(const BiLaurent &p)
{
    DenseQ d;
    if (p.is_zero())
        return d;
    if (!p.is_z_free() || !p.has_integer_q_exponents())
        throw std::domain_error("DenseQ: polynomial must be z-free with integer q exponents");
    d.offset = p.min_q_degree()->to_long();
    d.c.assign(static_cast<std::size_t>(p.max_q_degree()->to_long() - d.offset + 1), BigInt(0));
    for (const auto &[m, v] : p.terms())
        d.c[static_cast<std::size_t>(m.q.to_long() - d.offset)] = v;
    return d;
}

void DenseQ::accumulate_into(BiLaurent &out, const Rational &qshift, long z) const
{
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0)
            out.add_term(qshift + Rational(offset + static_cast<long>(i)), z, c[i]);
}

DenseQ operator*(const DenseQ &a, const DenseQ &b)
{
    DenseQ r;
    if (a.is_zero() || b.is_zero())
        return r;
    r.offset = a.offset + b.offset;
    r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            mpz_addmul(r.c[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
    }
    return r;
}

void add_to(DenseQ &a, const DenseQ &b, long shift)
{
    if (b.is_zero())
        return;
    const long b_lo = b.offset + shift;
    const long b_hi = b_lo + static_cast<long>(b.c.size()) - 1;
    if (a.is_zero()) {
        a.offset = b_lo;
        a.c = b.c;
        return;
    }
    const long lo = std::min(a.offset, b_lo);
    const long hi = std::max(a.offset + static_cast<long>(a.c.size()) - 1, b_hi);
    if (lo != a.offset || hi != a.offset + static_cast<long>(a.c.size()) - 1) {
        std::vector<BigInt> grown(static_cast<std::size_t>(hi - lo + 1), BigInt(0));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            grown[static_cast<std::size_t>(a.offset - lo) + i] = std::move(a.c[i]);
        a.c = std::move(grown);
        a.offset = lo;
    }
    for (std::size_t i = 0; i < b.c.size(); ++i)
        a.c[static_cast<std::size_t>(b_lo - a.offset) + i] += b.c[i];
}

namespace
{

struct PairHash
{
    std::size_t operator()(const std::pair<long, long> &k) const noexcept
    {
        return std::hash<long>{}(k.first) * 0x9e3779b97f4a7c15ULL ^ std::hash<long>{}(k.second);
    }
};

const DenseQ &empty_dense()
{
    static const DenseQ e;
    return e;
}

} // namespace

const DenseQ &qbin_dense(long n, long m)
{
    if (!(n >= m && m >= 0))
        return empty_dense();
    thread_local std::unordered_map<std::pair<long, long>, DenseQ, PairHash> cache;
    auto it = cache.find({n, m});
    if (it != cache.end())
        return it->second;
    return cache.emplace(std::make_pair(n, m), DenseQ::from(qbin_cached(n, m))).first->second;
}

const DenseQ &qbin_plus_dense(long n, long m)
{
    if (n >= 0)
        return qbin_dense(n, m);
    if (!qbin_plus_nonzero(n, m))
        return empty_dense();
    thread_local std::unordered_map<std::pair<long, long>, DenseQ, PairHash> cache;
    auto it = cache.find({n, m});
    if (it != cache.end())
        return it->second;
    return cache.emplace(std::make_pair(n, m), DenseQ::from(qbin_plus_cached(n, m))).first->second;
}

} // namespace qsn::detail
