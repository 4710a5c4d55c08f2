#include "qsn/verlinde.hpp"

#include <stdexcept>

namespace qsn
{

FusionVector FusionVector::unit(int p)
{
    CyclotomicVector u = CyclotomicVector::unit(p);
    return {p, std::move(u.coeffs)};
}

BigInt FusionVector::total() const
{
    BigInt s = 0;
    for (const auto &v : dims)
        s += v;
    return s;
}

FusionVector fuse(const FusionVector &a, const FusionVector &b)
{
    if (a.p != b.p)
        throw std::invalid_argument("fuse: mismatched p (" + std::to_string(a.p) + " vs " + std::to_string(b.p) +
                                    ")");
    CyclotomicVector r = CyclotomicVector{a.p, a.dims} * CyclotomicVector{b.p, b.dims};
    return {a.p, std::move(r.coeffs)};
}

FusionVector elementary_dims(int p, const ElementaryPair &pair)
{
    if (p < 1)
        throw std::invalid_argument("elementary_dims: p must be positive");
    if (pair.i < 0 || pair.i > p)
        throw std::invalid_argument("elementary_dims: i = " + std::to_string(pair.i) + " outside [0, " +
                                    std::to_string(p) + "]");
    FusionVector v{p, std::vector<BigInt>(static_cast<std::size_t>(p), BigInt(0))};
    for (int r = 0; r < p; ++r) {
        // n ranges over [ceil(-(j+r)/p), floor((i-j-r)/p)]
        const long lo = ceil_div(-(pair.j + r), p);
        const long hi = floor_div(pair.i - pair.j - r, p);
        v.dims[r] = std::max(0L, hi - lo + 1);
    }
    return v;
}

FusionVector d_vector(int p, const std::vector<ElementaryPair> &pairs)
{
    BiLaurent prod = BiLaurent::one();
    for (const auto &pr : pairs) {
        if (pr.i < 0 || pr.i > p)
            throw std::invalid_argument("d_vector: i = " + std::to_string(pr.i) + " outside [0, p]");
        BiLaurent f;
        for (long k = 0; k <= pr.i; ++k)
            f.add_term(Rational(0), k - pr.j, 1);
        prod *= f;
    }
    CyclotomicVector c = project_cyclotomic(prod, p);
    return {p, std::move(c.coeffs)};
}

SiteVector elementary_site_vector(int p, const ElementaryPair &pair)
{
    std::vector<long> h(static_cast<std::size_t>(p - 1));
    for (int k = 0; k < p - 1; ++k)
        h[k] = std::min<long>(k + 1, pair.i);
    return SiteVector::make(p, pair.i - pair.j, pair.j, std::move(h));
}

std::vector<ElementaryPair> decompose_N(const SiteVector &n)
{
    n.validate();
    if (n.d != n.p - 1)
        throw std::invalid_argument("decompose_N: site vector must have d = p - 1");
    if (!n.is_monotone())
        throw std::invalid_argument("decompose_N: " + n.to_string() + " is not monotone");
    const LVector l = l_vector(n);
    for (std::size_t i = 0; i < l.size(); ++i)
        if (l[i] < 0)
            throw std::invalid_argument("decompose_N: not decomposable, L_" + std::to_string(i + 1) + " = " +
                                        std::to_string(l[i]));

    std::vector<ElementaryPair> pairs;
    for (std::size_t i = 0; i < l.size(); ++i)
        for (long c = 0; c < l[i]; ++c)
            pairs.push_back({static_cast<long>(i + 1), 0});
    if (pairs.empty()) {
        if (n.n_plus != 0 || n.n_minus != 0)
            pairs.push_back({0, n.n_minus});
    } else {
        pairs.front().j = n.n_minus;
    }

    // Reconstruct and compare.
    SiteVector sum = SiteVector::make(n.p, 0, 0, std::vector<long>(static_cast<std::size_t>(n.d), 0));
    long total_i = 0;
    for (const auto &pr : pairs) {
        const SiteVector e = elementary_site_vector(n.p, pr);
        sum.n_plus += e.n_plus;
        sum.n_minus += e.n_minus;
        for (int k = 0; k < n.d; ++k)
            sum.n_h[k] += e.n_h[k];
        total_i += pr.i;
    }
    if (total_i != n.n_plus + n.n_minus || sum != n)
        throw std::logic_error("decompose_N: reconstruction of " + n.to_string() + " gave " + sum.to_string());
    return pairs;
}

BigInt d_via_supernomial(const SiteVector &n, int r)
{
    n.validate();
    if (n.d != n.p - 1)
        throw std::invalid_argument("d_via_supernomial: site vector must have d = p - 1");
    const LVector l = l_vector(n);
    for (std::size_t i = 0; i < l.size(); ++i)
        if (l[i] < 0)
            throw std::invalid_argument("d_via_supernomial: not decomposable, L_" + std::to_string(i + 1) +
                                        " < 0");
    const long deg = supernomial_degree(l);
    const long shift = n.n_minus - r;
    BigInt s = 0;
    for (long a = ceil_div(-shift, n.p); a <= floor_div(deg - shift, n.p); ++a)
        s += qsup_at1(l, n.p * a + shift);
    return s;
}

std::optional<BigInt> closed_form_dim(int p, const LVector &l)
{
    if (p < 2 || static_cast<int>(l.size()) != p)
        throw std::invalid_argument("closed_form_dim: L must have length p >= 2");
    if (l[p - 2] < 1)
        return std::nullopt;
    BigInt r = 1, f;
    for (int j = 1; j <= p; ++j) {
        const long e = (j == p - 1) ? l[j - 1] - 1 : l[j - 1];
        mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(j + 1), static_cast<unsigned long>(e));
        r *= f;
    }
    return r;
}

} // namespace qsn
