#include "qsn/fermionic.hpp"

#include <map>
#include <unordered_map>

#include "qsn/detail/dense_q.hpp"
#include "qsn/qgauss.hpp"

namespace qsn
{

NonFiniteSupport::NonFiniteSupport(std::size_t l_index, long value)
    : std::domain_error("support is not finite: L_" + std::to_string(l_index) + " = " + std::to_string(value) +
                        " < 0"),
      index_(l_index)
{
}

void QuadraticData::normalize()
{
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n)
            throw std::invalid_argument("QuadraticData: matrix is not square");
        for (std::size_t j = 0; j < i; ++j)
            if (a[i][j] != a[j][i])
                throw std::invalid_argument("QuadraticData: matrix is not symmetric");
    }
    if (v.empty())
        v.assign(n, Rational(0));
    if (w.empty())
        w.assign(n, 0);
    if (u.size() != n || v.size() != n || w.size() != n)
        throw std::invalid_argument("QuadraticData: u, v, w must have length " + std::to_string(n));
}

IntMatrix build_matrix_A(int p, int d)
{
    if (p < 2 || d < 0 || d > 2 * p - 3)
        throw std::invalid_argument("build_matrix_A: need p >= 2 and 0 <= d <= 2p-3, got p=" + std::to_string(p) +
                                    ", d=" + std::to_string(d));
    const std::size_t n = static_cast<std::size_t>(d) + 2;
    IntMatrix a(n, std::vector<long>(n, 0));
    a[0][0] = a[1][1] = p;
    a[0][1] = a[1][0] = d + 1 - p;
    for (int i = 0; i < d; ++i) {
        a[0][2 + i] = a[2 + i][0] = a[1][2 + i] = a[2 + i][1] = i + 1;
        for (int j = 0; j < d; ++j)
            a[2 + i][2 + j] = 2L * (std::min(i, j) + 1);
    }
    return a;
}

std::vector<long> charge_vector(int d)
{
    std::vector<long> u(static_cast<std::size_t>(d) + 2, 0);
    u[0] = 1;
    u[1] = -1;
    return u;
}

namespace
{

SiteVector shifted_site(const SiteVector &n, const std::vector<long> &w)
{
    if (w.empty())
        return n;
    if (w.size() != static_cast<std::size_t>(n.d) + 2)
        throw std::invalid_argument("weight vector must have length d+2");
    SiteVector s = n;
    s.n_plus += w[0];
    s.n_minus += w[1];
    for (int i = 0; i < n.d; ++i)
        s.n_h[i] += w[2 + i];
    return s;
}

} // namespace

SupportResult support_box(const SiteVector &n, const std::vector<long> &w)
{
    n.validate();
    const SiteVector eff = shifted_site(n, w);
    const LVector l = l_vector(eff);
    for (std::size_t i = 0; i < l.size(); ++i)
        if (l[i] < 0)
            return {std::nullopt, i + 1};

    const int d = n.d, p = n.p;
    const long denom = 2L * p - d - 2;
    const long last = eff.last_h();
    auto lower = [&](long nn) {
        // floor(C) + 1 with C = (2N - N_{d-1}) / (2p - d - 2)
        return std::min(0L, floor_div(2 * nn - last, denom) + 1);
    };
    SupportBox box;
    box.lo = {lower(eff.n_plus), lower(eff.n_minus)};
    const long s = eff.n_plus + eff.n_minus;
    const long dp1 = d + 1;
    box.hi = {floor_div(s - dp1 * box.lo[1], dp1), floor_div(s - dp1 * box.lo[0], dp1)};
    for (int i = 0; i < d; ++i) {
        box.lo.push_back(0);
        box.hi.push_back(floor_div(s - dp1 * (box.lo[0] + box.lo[1]), 2L * (i + 1)));
    }
    return {std::move(box), 0};
}

namespace
{

struct FracKey
{
    long z;
    Rational frac;
    friend auto operator<=>(const FracKey &a, const FracKey &b)
    {
        if (auto c = a.z <=> b.z; c != 0)
            return c;
        return a.frac <=> b.frac;
    }
    friend bool operator==(const FracKey &, const FracKey &) = default;
};

} // namespace

BiLaurent chi_general(const QuadraticData &qd_in, const std::vector<long> &n_vec, const SupportBox &box,
                      const SumOptions &opts, const std::optional<LinearBudget> &budget)
{
    QuadraticData qd = qd_in;
    qd.normalize();
    const std::size_t dim = qd.dim();
    if (n_vec.size() != dim)
        throw std::invalid_argument("chi_general: N must have length " + std::to_string(dim));
    if (box.lo.size() != dim || box.hi.size() != dim)
        throw std::invalid_argument("chi_general: support box must have dimension " + std::to_string(dim));
    if (budget) {
        if (budget->coeff.size() != dim)
            throw std::invalid_argument("chi_general: budget dimension mismatch");
        for (long c : budget->coeff)
            if (c <= 0)
                throw std::invalid_argument("chi_general: budget coefficients must be positive");
    }

    // Smallest contribution of coordinates i.. to the budget.
    std::vector<long> min_tail(dim + 1, 0);
    if (budget)
        for (std::size_t i = dim; i-- > 0;)
            min_tail[i] = min_tail[i + 1] + budget->coeff[i] * box.lo[i];

    std::vector<long> top_base(dim);
    for (std::size_t a = 0; a < dim; ++a)
        top_base[a] = n_vec[a] + qd.w[a];

    std::map<FracKey, detail::DenseQ> acc;
    std::vector<long> n(dim, 0), na(dim, 0);

    auto leaf = [&]() {
        for (std::size_t b = 0; b < dim; ++b) {
            long s = 0;
            for (std::size_t a = 0; a < dim; ++a)
                s += n[a] * qd.a[a][b];
            na[b] = s;
        }
        // Vanishing test first; it is pure integer arithmetic.
        for (std::size_t a = 0; a < dim; ++a) {
            const long top = top_base[a] + n[a] - na[a];
            const bool nonzero = opts.kind == BinomialKind::extended
                                     ? qbin_plus_nonzero(top, n[a])
                                     : (top >= n[a] && n[a] >= 0);
            if (!nonzero)
                return;
        }
        detail::DenseQ term = detail::DenseQ::one();
        for (std::size_t a = 0; a < dim; ++a) {
            const long top = top_base[a] + n[a] - na[a];
            const auto &f = opts.kind == BinomialKind::extended ? detail::qbin_plus_dense(top, n[a])
                                                                 : detail::qbin_dense(top, n[a]);
            term = term * f;
        }
        if (term.is_zero())
            return;
        if (opts.on_contributing)
            opts.on_contributing(n);
        long quad = 0, z = 0;
        Rational lin(0);
        for (std::size_t a = 0; a < dim; ++a) {
            quad += n[a] * na[a];
            z += qd.u[a] * n[a];
            if (n[a] != 0)
                lin += qd.v[a] * Rational(n[a]);
        }
        const Rational e = Rational(quad, 2) + lin;
        const BigInt fl = e.floor();
        const Rational frac = e - Rational(fl);
        detail::add_to(acc[FracKey{z, frac}], term, fl.get_si());
    };

    auto rec = [&](auto &&self, std::size_t i, long used) -> void {
        if (i == dim) {
            leaf();
            return;
        }
        for (long v = box.lo[i]; v <= box.hi[i]; ++v) {
            long now = used;
            if (budget) {
                now += budget->coeff[i] * v;
                if (now + min_tail[i + 1] > budget->limit)
                    break; // coefficients are positive, larger v only grows
            }
            n[i] = v;
            self(self, i + 1, now);
        }
    };
    rec(rec, 0, 0);

    BiLaurent out;
    for (const auto &[key, poly] : acc)
        poly.accumulate_into(out, key.frac, key.z);
    return out;
}

BiLaurent chi_fermionic(const SiteVector &n, const std::vector<long> &w, const SumOptions &opts)
{
    const SupportResult sr = support_box(n, w);
    if (!sr.box) {
        const LVector l = l_vector(shifted_site(n, w));
        throw NonFiniteSupport(sr.negative_l_index, l[sr.negative_l_index - 1]);
    }
    QuadraticData qd{build_matrix_A(n.p, n.d), charge_vector(n.d), {}, w};
    LinearBudget budget;
    budget.coeff = {n.d + 1L, n.d + 1L};
    for (int i = 0; i < n.d; ++i)
        budget.coeff.push_back(2L * (i + 1));
    budget.limit = n.n_plus + n.n_minus + (w.empty() ? 0 : w[0] + w[1]);
    return chi_general(qd, n.coords(), *sr.box, opts, budget);
}

BiLaurent chi_supernomial(int p, const LVector &l, long n_minus)
{
    for (std::size_t i = 0; i < l.size(); ++i)
        if (l[i] < 0)
            throw NonFiniteSupport(i + 1, l[i]);
    const long deg = supernomial_degree(l);
    BiLaurent out;
    for (long a = ceil_div(-n_minus, p); a <= floor_div(deg - n_minus, p); ++a) {
        BiLaurent s = qsup(l, p * a + n_minus);
        out += s.shifted(Rational(p * a * a, 2), a);
    }
    return out;
}

namespace
{

// 1/(q)_n truncated to degree max_deg, dense from q^0.
const std::vector<BigInt> &inv_poch_truncated(long n, long max_deg)
{
    thread_local std::map<std::pair<long, long>, std::vector<BigInt>> cache;
    auto key = std::make_pair(n, max_deg);
    if (auto it = cache.find(key); it != cache.end())
        return it->second;
    std::vector<BigInt> c(static_cast<std::size_t>(max_deg + 1), BigInt(0));
    c[0] = 1;
    for (long k = 1; k <= n && k <= max_deg; ++k)
        for (long i = k; i <= max_deg; ++i)
            c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - k)];
    return cache.emplace(key, std::move(c)).first->second;
}

std::vector<BigInt> truncated_product(const std::vector<BigInt> &a, const std::vector<BigInt> &b, long max_deg)
{
    std::vector<BigInt> r(static_cast<std::size_t>(max_deg + 1), BigInt(0));
    for (long i = 0; i <= max_deg && i < static_cast<long>(a.size()); ++i) {
        if (a[i] == 0)
            continue;
        for (long j = 0; i + j <= max_deg && j < static_cast<long>(b.size()); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return r;
}

} // namespace

BiLaurent chi_gordon_character(int p, int d, int r, long max_q, long zwin)
{
    if (max_q < 0 || zwin < 0)
        throw std::invalid_argument("chi_gordon_character: cutoffs must be nonnegative");
    if (p < 2 || d < 0 || d > p - 1)
        throw std::invalid_argument("chi_gordon_character: need p >= 2 and 0 <= d <= p-1");
    if (r < 0 || r >= p)
        throw std::invalid_argument("chi_gordon_character: need 0 <= r < p");

    const IntMatrix a = build_matrix_A(p, d);
    const std::size_t dim = a.size();
    const Rational v_plus = Rational(p, 2) - Rational(r + 1);
    const Rational cutoff(max_q);

    auto exponent = [&](const std::vector<long> &n) {
        long quad = 0;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                quad += n[i] * a[i][j] * n[j];
        return Rational(quad, 2) + v_plus * Rational(n[0] - n[1]);
    };

    BiLaurent out;
    std::vector<long> n(dim, 0);
    for (long k = -zwin; k <= zwin; ++k) {
        // n_+ = t + max(k, 0), n_- = t + max(-k, 0). With n_+ - n_- fixed the
        // exponent is nondecreasing in t and in every h-coordinate, so shell
        // minima (shell = t + sum n_h) are nondecreasing and the walk can stop
        // at the first shell lying entirely above the cutoff.
        std::optional<Rational> prev_min;
        for (long shell = 0;; ++shell) {
            std::optional<Rational> shell_min;
            // enumerate (t, n_0, ..., n_{d-1}) with sum == shell
            std::vector<long> parts(static_cast<std::size_t>(d) + 1, 0);
            auto visit = [&]() {
                const long t = parts[0];
                n[0] = t + std::max(k, 0L);
                n[1] = t + std::max(-k, 0L);
                for (int i = 0; i < d; ++i)
                    n[2 + i] = parts[1 + i];
                const Rational e = exponent(n);
                if (!shell_min || e < *shell_min)
                    shell_min = e;
                if (e > cutoff)
                    return;
                const long room = (cutoff - e).floor().get_si();
                std::vector<BigInt> series{BigInt(1)};
                for (std::size_t i = 0; i < dim; ++i)
                    series = truncated_product(series, inv_poch_truncated(n[i], room), room);
                for (long i = 0; i <= room; ++i)
                    out.add_term(e + Rational(i), k, series[static_cast<std::size_t>(i)]);
            };
            auto split = [&](auto &&self, std::size_t idx, long rem) -> void {
                if (idx + 1 == parts.size()) {
                    parts[idx] = rem;
                    visit();
                    return;
                }
                for (long x = 0; x <= rem; ++x) {
                    parts[idx] = x;
                    self(self, idx + 1, rem - x);
                }
            };
            split(split, 0, shell);
            if (prev_min && *shell_min < *prev_min)
                throw std::logic_error("chi_gordon_character: shell minima decreased; truncation not certified");
            prev_min = shell_min;
            if (*shell_min > cutoff)
                break;
        }
    }
    return out;
}

BiLaurent rdc_rhs(long big_n, long big_m, long n, long m)
{
    const long rest = big_n + big_m - n - m;
    if (rest < 0)
        return {};
    long lo, hi;
    if (big_n - m >= 0) {
        lo = n + m - big_n;
        hi = n;
    } else {
        lo = n + m - big_m;
        hi = m;
    }
    detail::DenseQ acc;
    for (long l = lo; l <= hi; ++l) {
        const auto &f1 = detail::qbin_plus_dense(big_n - m, n - l);
        if (f1.is_zero())
            continue;
        const auto &f2 = detail::qbin_plus_dense(big_m - n, m - l);
        if (f2.is_zero())
            continue;
        const auto &f3 = detail::qbin_plus_dense(rest + l, l);
        if (f3.is_zero())
            continue;
        detail::add_to(acc, f1 * f2 * f3, (n - l) * (m - l));
    }
    BiLaurent out;
    acc.accumulate_into(out, Rational(0), 0);
    return out;
}

BiLaurent knuth_lhs(long big_m, long s, long a)
{
    if (big_m + s < 0)
        throw std::invalid_argument("knuth_lhs: requires M + S >= 0");
    long lo, hi;
    if (big_m >= 0) {
        lo = -a;
        hi = big_m - a;
    } else {
        lo = 0;
        hi = s;
    }
    detail::DenseQ acc;
    for (long k = lo; k <= hi; ++k) {
        const auto &f1 = detail::qbin_plus_dense(big_m, a + k);
        const auto &f2 = detail::qbin_plus_dense(s, k);
        if (f1.is_zero() || f2.is_zero())
            continue;
        detail::add_to(acc, f1 * f2, k * k + a * k);
    }
    BiLaurent out;
    acc.accumulate_into(out, Rational(0), 0);
    return out;
}

} // namespace qsn
