#ifndef QSN_FERMIONIC_HPP
#define QSN_FERMIONIC_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qsn/bilaurent.hpp"
#include "qsn/site_vector.hpp"
#include "qsn/supernomial.hpp"

namespace qsn
{

/// Parameters of a fermionic sum
///   sum_n z^{u.n} q^{nAn/2 + v.n} prod_a [e_a.(N + w + n - nA), n_a]^+.
/// A is symmetric; u and w are integral (w enters binomial tops), v may be
/// half-integral.
struct QuadraticData
{
    IntMatrix a;
    std::vector<long> u;
    std::vector<Rational> v;
    std::vector<long> w;

    std::size_t dim() const { return a.size(); }

    /// Checks squareness, symmetry and vector lengths. Empty v or w are
    /// filled with zeros.
    void normalize();
};

/// Inclusive per-coordinate bounds on the lattice vectors of a sum.
struct SupportBox
{
    std::vector<long> lo;
    std::vector<long> hi;
};

/// Raised when a sum is not known to be finite: some L_i < 0.
class NonFiniteSupport : public std::domain_error
{
public:
    NonFiniteSupport(std::size_t l_index, long value);
    /// 1-based index i of the offending L_i.
    std::size_t l_index() const { return index_; }

private:
    std::size_t index_;
};

/// The (d+2) x (d+2) matrix over indices (+, -, 0, ..., d-1):
/// A_{++} = A_{--} = p, A_{+-} = d+1-p, A_{+-,i} = i+1, A_{ij} = 2(min(i,j)+1).
/// Throws std::invalid_argument unless p >= 2 and 0 <= d <= 2p-3.
IntMatrix build_matrix_A(int p, int d);

/// (1, -1, 0, ..., 0) of length d+2.
std::vector<long> charge_vector(int d);

/// Result of support_box: either a finite box or the index of a negative L.
struct SupportResult
{
    std::optional<SupportBox> box;
    std::size_t negative_l_index = 0; // 1-based, meaningful when !box
};

/// A finite box containing every n for which the summand of chi_fermionic
/// can be nonzero. w has length d+2 (or is empty for w = 0).
///
/// n_i >= 0 for the h-coordinates; n_+- >= min(0, floor(C_+-) + 1) with
/// C_+- = (2N_+- + 2w_+- - N_{d-1}) / (2p-d-2); upper bounds follow from
/// (d+1)(n_+ + n_-) + sum_i 2(i+1) n_i <= N_+ + N_- + w_+ + w_-.
SupportResult support_box(const SiteVector &n, const std::vector<long> &w = {});

enum class BinomialKind
{
    extended, ///< qbin_plus, valid for any sign of the top index
    standard  ///< ordinary qbin (zero for negative tops)
};

/// Options for the lattice-sum engines.
struct SumOptions
{
    BinomialKind kind = BinomialKind::extended;
    /// Called once for every lattice vector whose summand is nonzero.
    std::function<void(const std::vector<long> &)> on_contributing;
};

/// Linear budget used to prune a box: sum_a coeff[a] n_a <= limit. All
/// coefficients must be positive.
struct LinearBudget
{
    std::vector<long> coeff;
    long limit = 0;
};

/// sum over the box of z^{u.n} q^{nAn/2 + v.n} prod_a [e_a.(N + w + n - nA), n_a].
/// Throws std::invalid_argument if the box does not match the dimension.
BiLaurent chi_general(const QuadraticData &qd, const std::vector<long> &n_vec, const SupportBox &box,
                      const SumOptions &opts = {}, const std::optional<LinearBudget> &budget = std::nullopt);

/// Fermionic side of the lattice identity for A = build_matrix_A(p, d),
/// u = (1, -1, 0, ...), v = 0 and binomial tops N + w + n - nA, summed
/// over the certified support box. Throws NonFiniteSupport when some
/// L_i < 0.
BiLaurent chi_fermionic(const SiteVector &n, const std::vector<long> &w = {}, const SumOptions &opts = {});

/// Supernomial side: sum_a z^a q^{p a^2 / 2} qsup(L, p a + N_-) with
/// L = l_vector(n). Throws NonFiniteSupport when some L_i < 0.
BiLaurent chi_supernomial(int p, const LVector &l, long n_minus);

/// Gordon-type character series
///   sum_{n >= 0} z^{u.n} q^{nAn/2 + v.n} prod_a 1/(q)_{n_a},  v = (p/2 - r - 1) u,
/// truncated to q-degree <= max_q and |z-degree| <= zwin. Requires
/// 0 <= d <= p-1 and 0 <= r < p.
BiLaurent chi_gordon_character(int p, int d, int r, long max_q, long zwin);

// Identity sides used by the verification sweeps.

/// sum_l q^{(n-l)(m-l)} [N-m, n-l]^+ [M-n, m-l]^+ [N+M-n-m+l, l]^+, summed
/// over the finite range that can contribute.
BiLaurent rdc_rhs(long big_n, long big_m, long n, long m);

/// sum_k q^{k^2 + a k} [M, a+k]^+ [S, k]^+ for M + S >= 0.
/// Throws std::invalid_argument when M + S < 0.
BiLaurent knuth_lhs(long big_m, long s, long a);

} // namespace qsn

#endif
