#include "qsn/characters.hpp"

#include <stdexcept>
#include <string>

#include "qsn/supernomial.hpp"

namespace qsn
{

namespace
{

void check_pr(int p, int r, int p_min, const char *who)
{
    if (p < p_min)
        throw std::invalid_argument(std::string(who) + ": p must be >= " + std::to_string(p_min));
    if (r < 0 || r >= p)
        throw std::invalid_argument(std::string(who) + ": need 0 <= r < p, got r = " + std::to_string(r));
}

LVector checked_l(const SiteVector &n)
{
    const LVector l = l_vector(n);
    for (std::size_t i = 0; i < l.size(); ++i)
        if (l[i] < 0)
            throw NonFiniteSupport(i + 1, l[i]);
    return l;
}

// sum_m z^m q^{(p/2)(m^2+m) - (r+1)m} qsup(L, p m + shift)
BiLaurent supernomial_sum(int p, int r, const LVector &l, long shift)
{
    const long deg = supernomial_degree(l);
    BiLaurent out;
    for (long m = ceil_div(-shift, p); m <= floor_div(deg - shift, p); ++m) {
        const BiLaurent s = qsup(l, p * m + shift);
        if (s.is_zero())
            continue;
        const Rational e = Rational(p * (m * m + m), 2) - Rational((r + 1) * m);
        out += s.shifted(e, m);
    }
    return out;
}

} // namespace

CharacterValue CharacterValue::normalized() const
{
    const BigInt kq = q_shift.floor();
    const BigInt kz = z_shift.floor();
    CharacterValue c;
    c.q_shift = q_shift - Rational(kq);
    c.z_shift = z_shift - Rational(kz);
    c.poly = poly.shifted(Rational(kq), kz.get_si());
    return c;
}

bool operator==(const CharacterValue &a, const CharacterValue &b)
{
    const CharacterValue x = a.normalized(), y = b.normalized();
    return x.q_shift == y.q_shift && x.z_shift == y.z_shift && x.poly == y.poly;
}

std::pair<Rational, Rational> character_prefactor(int p, int r)
{
    return {Rational(static_cast<long>(r) * (r - p + 2), 2L * p), Rational(-r, p)};
}

CharacterValue char_rep(int p, int r, long max_q, long zwin)
{
    check_pr(p, r, 1, "char_rep");
    if (max_q < 0 || zwin < 0)
        throw std::invalid_argument("char_rep: cutoffs must be nonnegative");
    BiLaurent theta;
    for (long n = -zwin; n <= zwin; ++n)
        theta.add_term(Rational(p * (n * n + n), 2) - Rational(n * (r + 1)), n, 1);
    const auto [qs, zs] = character_prefactor(p, r);
    return {qs, zs, truncate_qdeg(theta * pochhammer_inv_series(max_q), Rational(max_q))};
}

CharacterValue char_coinv_supernomial(int p, int r, const SiteVector &n)
{
    check_pr(p, r, 2, "char_coinv_supernomial");
    n.validate();
    if (n.p != p || n.d != p - 1)
        throw std::invalid_argument("char_coinv_supernomial: site vector must have this p and d = p - 1");
    const LVector l = checked_l(n);
    const auto [qs, zs] = character_prefactor(p, r);
    return {qs, zs, supernomial_sum(p, r, l, n.n_minus - r)};
}

CharacterValue char_coinv_fermionic(int p, int r, const SiteVector &n)
{
    check_pr(p, r, 2, "char_coinv_fermionic");
    n.validate();
    if (n.p != p || n.d > p - 1)
        throw std::invalid_argument("char_coinv_fermionic: site vector must have this p and d <= p - 1");
    std::vector<long> w(static_cast<std::size_t>(n.d) + 2, 0);
    w[0] = r;
    w[1] = -r;
    const BiLaurent f = chi_fermionic(n, w);
    const auto [qs, zs] = character_prefactor(p, r);
    return {qs, zs, substitute_z(f, Rational(p, 2) - Rational(r + 1))};
}

FlowCheck spectral_flow_check(int p, int r, const SiteVector &n)
{
    check_pr(p, r, 2, "spectral_flow_check");
    n.validate();
    if (n.p != p || n.d != p - 1)
        throw std::invalid_argument("spectral_flow_check: site vector must have this p and d = p - 1");
    const LVector l = checked_l(n);
    FlowCheck fc;
    fc.lhs = supernomial_sum(p, r, l, n.n_minus - p - r);
    fc.rhs = substitute_z(supernomial_sum(p, r, l, n.n_minus - r), Rational(p)).shifted(Rational(p - r - 1), 1);
    fc.pass = fc.lhs == fc.rhs;
    return fc;
}

BiLaurent char_brep(const QuadraticData &qd, const std::vector<long> &n_vec, const SupportBox &box, long max_q,
                    long zwin)
{
    if (max_q < 0 || zwin < 0)
        throw std::invalid_argument("char_brep: cutoffs must be nonnegative");
    return truncate_zdeg(truncate_qdeg(chi_general(qd, n_vec, box), Rational(max_q)), zwin);
}

BiLaurent char_brep_gordon(int p, int d, int r, long max_q, long zwin)
{
    return chi_gordon_character(p, d, r, max_q, zwin);
}

CharacterValue truncate(const CharacterValue &c, long max_q, long zwin)
{
    return {c.q_shift, c.z_shift, truncate_zdeg(truncate_qdeg(c.poly, Rational(max_q)), zwin)};
}

} // namespace qsn
