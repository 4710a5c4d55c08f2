#ifndef QSN_CHARACTERS_HPP
#define QSN_CHARACTERS_HPP

#include <optional>
#include <vector>

#include "qsn/bilaurent.hpp"
#include "qsn/fermionic.hpp"
#include "qsn/site_vector.hpp"

namespace qsn
{

/// z^{z_shift} q^{q_shift} * poly. The shifts carry the fractional prefactors
/// that cannot live in a BiLaurent z exponent.
struct CharacterValue
{
    Rational q_shift;
    Rational z_shift;
    BiLaurent poly;

    /// Moves the integer parts of both shifts into poly, leaving shifts in [0, 1).
    CharacterValue normalized() const;

    friend bool operator==(const CharacterValue &a, const CharacterValue &b);
};

/// Prefactor exponents (q, z) = (r(r-p+2)/(2p), -r/p).
std::pair<Rational, Rational> character_prefactor(int p, int r);

/// Truncation (q-degree <= max_q, |z-degree| <= zwin) of
/// (1/(q)_inf) sum_n z^n q^{(p/2)(n^2+n) - n(r+1)}, with the prefactor.
/// Requires p >= 1, 0 <= r < p, cutoffs >= 0.
CharacterValue char_rep(int p, int r, long max_q, long zwin);

/// sum_m z^m q^{(p/2)(m^2+m) - (r+1)m} qsup(L, p m - r + N_-), d = p - 1.
/// Throws NonFiniteSupport when some L_i < 0.
CharacterValue char_coinv_supernomial(int p, int r, const SiteVector &n);

/// Fermionic form: chi_fermionic(N, w = r u) with z -> z q^{p/2 - r - 1}.
/// n.d is either p-1 or smaller (the reduced form, caller passes truncated N).
CharacterValue char_coinv_fermionic(int p, int r, const SiteVector &n);

/// Result of a spectral-flow comparison; lhs and rhs are the poly parts.
struct FlowCheck
{
    bool pass = false;
    BiLaurent lhs;
    BiLaurent rhs;
};

/// Compares chi[L, N_- - p] with z q^{p-r-1} (chi[L, N_-] at z -> z q^p).
/// Requires d = p - 1 and L >= 0.
FlowCheck spectral_flow_check(int p, int r, const SiteVector &n);

/// Character of a general quadratic form summed over a supplied finite box,
/// truncated to q-degree <= max_q and |z-degree| <= zwin.
BiLaurent char_brep(const QuadraticData &qd, const std::vector<long> &n_vec, const SupportBox &box, long max_q,
                    long zwin);

/// Unbounded (Gordon-type) variant for the standard form with v = (p/2-r-1)u.
BiLaurent char_brep_gordon(int p, int d, int r, long max_q, long zwin);

/// Truncates a character value's poly to q-degree <= max_q and |z| <= zwin.
CharacterValue truncate(const CharacterValue &c, long max_q, long zwin);

} // namespace qsn

#endif
