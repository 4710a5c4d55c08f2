#include "qsn/site_vector.hpp"

#include <stdexcept>

namespace qsn
{

SiteVector SiteVector::make(int p, long n_plus, long n_minus, std::vector<long> n_h)
{
    SiteVector n{p, static_cast<int>(n_h.size()), n_plus, n_minus, std::move(n_h)};
    n.validate();
    return n;
}

void SiteVector::validate() const
{
    if (p < 2)
        throw std::invalid_argument("SiteVector: p must be >= 2, got " + std::to_string(p));
    if (d < 0 || d > 2 * p - 3)
        throw std::invalid_argument("SiteVector: d must lie in [0, 2p-3], got d=" + std::to_string(d) +
                                    " for p=" + std::to_string(p));
    if (static_cast<int>(n_h.size()) != d)
        throw std::invalid_argument("SiteVector: expected " + std::to_string(d) + " h-components, got " +
                                    std::to_string(n_h.size()));
}

bool SiteVector::is_monotone() const
{
    long prev = 0;
    for (long v : n_h) {
        if (v < prev)
            return false;
        prev = v;
    }
    return prev <= n_plus + n_minus;
}

std::vector<long> SiteVector::coords() const
{
    std::vector<long> c{n_plus, n_minus};
    c.insert(c.end(), n_h.begin(), n_h.end());
    return c;
}

std::string SiteVector::to_string() const
{
    std::string s = "(" + std::to_string(n_plus) + "," + std::to_string(n_minus) + ";";
    for (std::size_t i = 0; i < n_h.size(); ++i)
        s += (i ? "," : "") + std::to_string(n_h[i]);
    return s + ")";
}

} // namespace qsn
