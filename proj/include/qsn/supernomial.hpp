#ifndef QSN_SUPERNOMIAL_HPP
#define QSN_SUPERNOMIAL_HPP

#include <vector>

#include "qsn/bilaurent.hpp"
#include "qsn/site_vector.hpp"

namespace qsn
{

/// (L_1, ..., L_k); stored 0-based, so entry j-1 holds L_j.
using LVector = std::vector<long>;

using IntMatrix = std::vector<std::vector<long>>;

/// The m x m tridiagonal matrix with 2 on the diagonal except a final 1,
/// and -1 on the off-diagonals. Its inverse is (min(i, j))_{ij}.
struct TMatrix
{
    int m = 1;
    IntMatrix entries;
};

/// Throws std::invalid_argument for m < 1.
TMatrix t_matrix(int m);

/// (min(i, j))_{1 <= i, j <= m}.
IntMatrix min_matrix(int m);

IntMatrix matmul(const IntMatrix &a, const IntMatrix &b);

/// L = N' T_{d+1} with N' = (N_0, ..., N_{d-1}, N_+ + N_-). Length d+1.
LVector l_vector(const SiteVector &n);

/// Sum of j L_j: the top degree of every nonzero supernomial.
long supernomial_degree(const LVector &l);

/// q-supernomial coefficient
///   sum over n_1 + ... + n_k = a of
///   q^{sum_{i=2..k} n_{i-1} (sum_{j>=i} L_j - n_i)}
///   [L_k, n_k] [L_{k-1} + n_k, n_{k-1}] ... [L_1 + n_2, n_1].
/// Zero outside 0 <= a <= sum j L_j. Throws std::invalid_argument if any
/// L_j < 0 or L is empty.
BiLaurent qsup(const LVector &l, long a);

/// qsup at q = 1: the coefficient of x^a in prod_j (1 + x + ... + x^j)^{L_j}.
/// Computed from the same composition sum with ordinary binomials.
BigInt qsup_at1(const LVector &l, long a);

} // namespace qsn

#endif
