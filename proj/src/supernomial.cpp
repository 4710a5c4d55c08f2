#include "qsn/supernomial.hpp"

#include <map>
#include <stdexcept>

#include "qsn/detail/dense_q.hpp"
#include "qsn/qgauss.hpp"

namespace qsn
{

TMatrix t_matrix(int m)
{
    if (m < 1)
        throw std::invalid_argument("t_matrix: size must be >= 1, got " + std::to_string(m));
    TMatrix t{m, IntMatrix(static_cast<std::size_t>(m), std::vector<long>(static_cast<std::size_t>(m), 0))};
    for (int i = 0; i < m; ++i) {
        t.entries[i][i] = (i == m - 1) ? 1 : 2;
        if (i + 1 < m)
            t.entries[i][i + 1] = t.entries[i + 1][i] = -1;
    }
    return t;
}

IntMatrix min_matrix(int m)
{
    IntMatrix r(static_cast<std::size_t>(m), std::vector<long>(static_cast<std::size_t>(m), 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            r[i][j] = std::min(i, j) + 1;
    return r;
}

IntMatrix matmul(const IntMatrix &a, const IntMatrix &b)
{
    const std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
    IntMatrix r(rows, std::vector<long>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != inner)
            throw std::invalid_argument("matmul: dimension mismatch");
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < cols; ++j)
                r[i][j] += a[i][k] * b[k][j];
    }
    return r;
}

LVector l_vector(const SiteVector &n)
{
    std::vector<long> np = n.n_h;
    np.push_back(n.n_plus + n.n_minus);
    const TMatrix t = t_matrix(n.d + 1);
    LVector l(np.size(), 0);
    for (std::size_t j = 0; j < np.size(); ++j)
        for (std::size_t i = 0; i < np.size(); ++i)
            l[j] += np[i] * t.entries[i][j];
    return l;
}

long supernomial_degree(const LVector &l)
{
    long s = 0;
    for (std::size_t j = 0; j < l.size(); ++j)
        s += static_cast<long>(j + 1) * l[j];
    return s;
}

namespace
{

void check_l(const LVector &l, const char *who)
{
    if (l.empty())
        throw std::invalid_argument(std::string(who) + ": empty L vector");
    for (std::size_t j = 0; j < l.size(); ++j)
        if (l[j] < 0)
            throw std::invalid_argument(std::string(who) + ": L_" + std::to_string(j + 1) + " = " +
                                        std::to_string(l[j]) + " is negative");
}

// Walks the compositions n_1 + ... + n_k = a with n_k in [0, L_k] and
// n_{i-1} in [0, L_{i-1} + n_i], calling visit(n) for each. Branches whose
// remaining sum can no longer be reached are cut.
template <typename Visit>
void for_each_composition(const LVector &l, long a, Visit &&visit)
{
    const std::size_t k = l.size();
    std::vector<long> n(k, 0);
    // prefix[i] = L_0 + ... + L_{i-1} (0-based), so the largest possible
    // n_0 + ... + n_{i-1} given n_i is sum_{j<i} (n_i + prefix[i] - prefix[j]).
    std::vector<long> prefix(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i)
        prefix[i + 1] = prefix[i] + l[i];

    auto max_below = [&](std::size_t i, long ni) {
        long s = 0;
        for (std::size_t j = 0; j < i; ++j)
            s += ni + prefix[i] - prefix[j];
        return s;
    };

    auto rec = [&](auto &&self, std::size_t i, long rem) -> void {
        const long cap = l[i] + (i + 1 < k ? n[i + 1] : 0);
        if (i == 0) {
            if (rem >= 0 && rem <= cap) {
                n[0] = rem;
                visit(n);
            }
            return;
        }
        for (long v = 0; v <= cap && v <= rem; ++v) {
            if (rem - v > max_below(i, v))
                continue;
            n[i] = v;
            self(self, i - 1, rem - v);
        }
    };
    rec(rec, k - 1, a);
}

long composition_exponent(const LVector &l, const std::vector<long> &n)
{
    long e = 0, suffix = 0;
    // sum_{i=1..k-1} n_{i-1} (sum_{j>=i} L_j - n_i), 0-based
    for (std::size_t i = l.size(); i-- > 1;) {
        suffix += l[i];
        e += n[i - 1] * (suffix - n[i]);
    }
    return e;
}

} // namespace

BiLaurent qsup(const LVector &l, long a)
{
    check_l(l, "qsup");
    if (a < 0 || a > supernomial_degree(l))
        return {};

    thread_local std::map<std::pair<LVector, long>, BiLaurent> cache;
    auto key = std::make_pair(l, a);
    if (auto it = cache.find(key); it != cache.end())
        return it->second;

    detail::DenseQ acc;
    const std::size_t k = l.size();
    for_each_composition(l, a, [&](const std::vector<long> &n) {
        detail::DenseQ term = detail::DenseQ::one();
        for (std::size_t j = 0; j < k; ++j) {
            const long top = l[j] + (j + 1 < k ? n[j + 1] : 0);
            const auto &f = detail::qbin_dense(top, n[j]);
            if (f.is_zero())
                return;
            term = term * f;
        }
        detail::add_to(acc, term, composition_exponent(l, n));
    });

    BiLaurent r;
    acc.accumulate_into(r, Rational(0), 0);
    cache.emplace(std::move(key), r);
    return r;
}

BigInt qsup_at1(const LVector &l, long a)
{
    check_l(l, "qsup_at1");
    if (a < 0 || a > supernomial_degree(l))
        return 0;
    BigInt total = 0;
    const std::size_t k = l.size();
    for_each_composition(l, a, [&](const std::vector<long> &n) {
        BigInt term = 1;
        for (std::size_t j = 0; j < k; ++j)
            term *= binomial(l[j] + (j + 1 < k ? n[j + 1] : 0), n[j]);
        total += term;
    });
    return total;
}

} // namespace qsn
