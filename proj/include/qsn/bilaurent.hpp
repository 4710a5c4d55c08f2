#ifndef QSN_BILAURENT_HPP
#define QSN_BILAURENT_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsn/rational.hpp"

namespace qsn
{

/// Exponent pair of a single term q^q z^z.
struct Monomial
{
    Rational q;
    long z = 0;

    friend bool operator==(const Monomial &, const Monomial &) = default;
    /// Canonical order: lexicographic by (q, z).
    friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b)
    {
        if (auto c = a.q <=> b.q; c != 0)
            return c;
        return a.z <=> b.z;
    }
};

/// Sparse Laurent polynomial in q (rational exponents) and z (integer
/// exponents) with arbitrary-precision integer coefficients. Zero
/// coefficients are never stored, so equality of values is equality of
/// their term maps.
class BiLaurent
{
public:
    using TermMap = std::map<Monomial, BigInt>;

    BiLaurent() = default;

    static BiLaurent monomial(const Rational &q, long z = 0, const BigInt &c = 1);
    static BiLaurent constant(const BigInt &c) { return monomial(Rational(0), 0, c); }
    static BiLaurent one() { return constant(1); }

    /// Builds a z-free polynomial from dense coefficients of q^offset, q^(offset+1), ...
    static BiLaurent from_q_coefficients(const std::vector<BigInt> &coeffs, long offset = 0);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap &terms() const { return terms_; }

    BigInt coefficient(const Rational &q, long z = 0) const;

    /// Adds c q^q z^z in place, dropping the term if it cancels.
    void add_term(const Rational &q, long z, const BigInt &c);

    /// True when no term carries a z exponent.
    bool is_z_free() const;
    /// True when every q exponent is an integer.
    bool has_integer_q_exponents() const;

    std::optional<Rational> min_q_degree() const;
    std::optional<Rational> max_q_degree() const;

    BiLaurent &operator+=(const BiLaurent &o);
    BiLaurent &operator-=(const BiLaurent &o);
    BiLaurent &operator*=(const BiLaurent &o);
    BiLaurent &operator*=(const BigInt &c);

    friend BiLaurent operator+(BiLaurent a, const BiLaurent &b) { return a += b; }
    friend BiLaurent operator-(BiLaurent a, const BiLaurent &b) { return a -= b; }
    friend BiLaurent operator*(const BiLaurent &a, const BiLaurent &b);
    friend BiLaurent operator*(BiLaurent a, const BigInt &c) { return a *= c; }
    friend BiLaurent operator-(BiLaurent a);

    friend bool operator==(const BiLaurent &a, const BiLaurent &b) { return a.terms_ == b.terms_; }

    /// Multiplication by the monomial q^dq z^dz.
    BiLaurent shifted(const Rational &dq, long dz = 0) const;

private:
    TermMap terms_;
};

BiLaurent poly_add(const BiLaurent &a, const BiLaurent &b);
BiLaurent poly_mul(const BiLaurent &a, const BiLaurent &b);

/// z -> z q^c: each term (e_q, e_z) moves to (e_q + c e_z, e_z).
BiLaurent substitute_z(const BiLaurent &p, const Rational &c);

/// q -> q^{-1}: negates every q exponent.
BiLaurent invert_q(const BiLaurent &p);

/// Value at q = 1, z = 1, i.e. the sum of all coefficients.
BigInt eval_q1_z1(const BiLaurent &p);

/// Sets z = 1, merging terms by q exponent.
BiLaurent eval_z1(const BiLaurent &p);

/// Drops every term with q exponent above max_q. std::nullopt keeps everything.
BiLaurent truncate_qdeg(const BiLaurent &p, const std::optional<Rational> &max_q);

/// Keeps only terms with |z exponent| <= zwin.
BiLaurent truncate_zdeg(const BiLaurent &p, long zwin);

/// Exact quotient of two z-free polynomials with integer q exponents.
/// Throws std::domain_error if the divisor is zero or the division leaves
/// a remainder.
BiLaurent divide_exact(const BiLaurent &num, const BiLaurent &den);

/// Partition generating function sum_{k<=max_deg} p(k) q^k, the truncation
/// of 1/(q)_infinity.
BiLaurent pochhammer_inv_series(long max_deg);

/// Element of Z[x]/(x^p - 1); coeffs[r] is the coefficient of x^r.
struct CyclotomicVector
{
    int p = 1;
    std::vector<BigInt> coeffs;

    static CyclotomicVector unit(int p);

    /// Cyclic convolution. Throws std::invalid_argument on mismatched p.
    friend CyclotomicVector operator*(const CyclotomicVector &a, const CyclotomicVector &b);
    friend bool operator==(const CyclotomicVector &, const CyclotomicVector &) = default;
};

/// Reduces a z-only Laurent polynomial modulo z^p = 1. Throws
/// std::invalid_argument if any term has a nonzero q exponent.
CyclotomicVector project_cyclotomic(const BiLaurent &p, int period);

// Serialization.

/// {"terms":[{"q":"1/2","z":-1,"c":"3"}, ...]} in canonical (q, z) order.
nlohmann::ordered_json to_json(const BiLaurent &p);
/// Inverse of to_json; "q" and "c" may also be plain integers. Throws
/// std::invalid_argument (or a nlohmann::json exception) on malformed input.
BiLaurent bilaurent_from_json(const nlohmann::json &j);
BiLaurent bilaurent_from_json(const nlohmann::ordered_json &j);

/// Plain text such as "1 + q + 2*q^2 - z^-1*q^(1/2)".
std::string to_text(const BiLaurent &p);
/// LaTeX such as "1 + q + 2q^{2} - z^{-1}q^{1/2}".
std::string to_latex(const BiLaurent &p);

} // namespace qsn

#endif
