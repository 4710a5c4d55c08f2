#ifndef QSN_VERLINDE_HPP
#define QSN_VERLINDE_HPP

#include <optional>
#include <vector>

#include "qsn/bilaurent.hpp"
#include "qsn/site_vector.hpp"
#include "qsn/supernomial.hpp"

namespace qsn
{

/// Element of the fusion ring of Z/pZ: dims[r] is the multiplicity of the
/// r-th representation. The product is cyclic convolution; e_0 is the unit.
struct FusionVector
{
    int p = 1;
    std::vector<BigInt> dims;

    static FusionVector unit(int p);
    BigInt total() const;

    friend bool operator==(const FusionVector &, const FusionVector &) = default;
};

/// (i, j) labelling an elementary site vector (i - j, j; 1, 2, ..., i, ..., i).
struct ElementaryPair
{
    long i = 0;
    long j = 0;

    friend bool operator==(const ElementaryPair &, const ElementaryPair &) = default;
};

/// Cyclic convolution. Throws std::invalid_argument on mismatched p.
FusionVector fuse(const FusionVector &a, const FusionVector &b);

/// dims[r] = #{ n in Z : 0 <= p n + j + r <= i }. Throws
/// std::invalid_argument unless 0 <= i <= p.
FusionVector elementary_dims(int p, const ElementaryPair &pair);

/// Coefficients of prod_s (x^{-j_s} + ... + x^{-j_s + i_s}) in Z[x]/(x^p - 1).
FusionVector d_vector(int p, const std::vector<ElementaryPair> &pairs);

/// The elementary site vector of a pair, with d = p - 1.
SiteVector elementary_site_vector(int p, const ElementaryPair &pair);

/// Writes N (d = p-1) as a sum of elementary vectors: L_1 pairs with i = 1,
/// ..., L_p pairs with i = p; the first pair carries j = N_-, the rest
/// j = 0. When L = 0 the single pair (0, N_-) is returned (nothing when
/// N = 0). Throws std::invalid_argument if some L_i < 0 or N is not
/// monotone, std::logic_error if the reconstruction check fails.
std::vector<ElementaryPair> decompose_N(const SiteVector &n);

/// sum_a qsup_at1(L, p a + N_- - r) with L = l_vector(n), d = p - 1.
BigInt d_via_supernomial(const SiteVector &n, int r);

/// 2^{L_1} 3^{L_2} ... (p-1)^{L_{p-2}} p^{L_{p-1} - 1} (p+1)^{L_p} when
/// L_{p-1} >= 1, otherwise nothing. L must have length p.
std::optional<BigInt> closed_form_dim(int p, const LVector &l);

} // namespace qsn

#endif
