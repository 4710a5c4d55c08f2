#ifndef QSN_SITE_VECTOR_HPP
#define QSN_SITE_VECTOR_HPP

#include <string>
#include <vector>

namespace qsn
{

/// N = (N_+, N_-; N_0, ..., N_{d-1}) together with p and d.
struct SiteVector
{
    int p = 2;
    int d = 0;
    long n_plus = 0;
    long n_minus = 0;
    std::vector<long> n_h;

    /// Builds and validates; throws std::invalid_argument unless p >= 2,
    /// 0 <= d <= 2p-3 and n_h has length d.
    static SiteVector make(int p, long n_plus, long n_minus, std::vector<long> n_h);

    void validate() const;

    /// 0 <= N_0 <= ... <= N_{d-1} <= N_+ + N_-.
    bool is_monotone() const;

    /// N_{d-1}, with the convention N_{-1} = 0 when d = 0.
    long last_h() const { return d == 0 ? 0 : n_h.back(); }

    /// Coordinates in index order (+, -, 0, ..., d-1).
    std::vector<long> coords() const;

    /// "(N+,N-;N0,...)".
    std::string to_string() const;

    friend bool operator==(const SiteVector &, const SiteVector &) = default;
};

} // namespace qsn

#endif
