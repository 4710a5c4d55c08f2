#include "qsn/bilaurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qsn
{

BiLaurent BiLaurent::monomial(const Rational &q, long z, const BigInt &c)
{
    BiLaurent p;
    p.add_term(q, z, c);
    return p;
}

BiLaurent BiLaurent::from_q_coefficients(const std::vector<BigInt> &coeffs, long offset)
{
    BiLaurent p;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0)
            p.terms_.emplace_hint(p.terms_.end(), Monomial{Rational(offset + static_cast<long>(i)), 0}, coeffs[i]);
    return p;
}

BigInt BiLaurent::coefficient(const Rational &q, long z) const
{
    auto it = terms_.find(Monomial{q, z});
    return it == terms_.end() ? BigInt(0) : it->second;
}

void BiLaurent::add_term(const Rational &q, long z, const BigInt &c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(Monomial{q, z}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

bool BiLaurent::is_z_free() const
{
    for (const auto &[m, c] : terms_)
        if (m.z != 0)
            return false;
    return true;
}

bool BiLaurent::has_integer_q_exponents() const
{
    for (const auto &[m, c] : terms_)
        if (!m.q.is_integer())
            return false;
    return true;
}

std::optional<Rational> BiLaurent::min_q_degree() const
{
    if (terms_.empty())
        return std::nullopt;
    return terms_.begin()->first.q;
}

std::optional<Rational> BiLaurent::max_q_degree() const
{
    if (terms_.empty())
        return std::nullopt;
    return terms_.rbegin()->first.q;
}

BiLaurent &BiLaurent::operator+=(const BiLaurent &o)
{
    for (const auto &[m, c] : o.terms_)
        add_term(m.q, m.z, c);
    return *this;
}

BiLaurent &BiLaurent::operator-=(const BiLaurent &o)
{
    for (const auto &[m, c] : o.terms_)
        add_term(m.q, m.z, -c);
    return *this;
}

BiLaurent operator*(const BiLaurent &a, const BiLaurent &b)
{
    BiLaurent r;
    if (a.is_zero() || b.is_zero())
        return r;
    BigInt prod;
    for (const auto &[ma, ca] : a.terms_)
        for (const auto &[mb, cb] : b.terms_) {
            prod = ca * cb;
            r.add_term(ma.q + mb.q, ma.z + mb.z, prod);
        }
    return r;
}

BiLaurent &BiLaurent::operator*=(const BiLaurent &o)
{
    *this = *this * o;
    return *this;
}

BiLaurent &BiLaurent::operator*=(const BigInt &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, v] : terms_)
        v *= c;
    return *this;
}

BiLaurent operator-(BiLaurent a)
{
    for (auto &[m, v] : a.terms_)
        v = -v;
    return a;
}

BiLaurent BiLaurent::shifted(const Rational &dq, long dz) const
{
    // Uniform shifts preserve the canonical order, so the map can be
    // rebuilt with end hints.
    BiLaurent r;
    for (const auto &[m, c] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), Monomial{m.q + dq, m.z + dz}, c);
    return r;
}

BiLaurent poly_add(const BiLaurent &a, const BiLaurent &b) { return a + b; }
BiLaurent poly_mul(const BiLaurent &a, const BiLaurent &b) { return a * b; }

BiLaurent substitute_z(const BiLaurent &p, const Rational &c)
{
    if (c.is_zero())
        return p;
    BiLaurent r;
    for (const auto &[m, v] : p.terms())
        r.add_term(m.q + c * Rational(m.z), m.z, v);
    return r;
}

BiLaurent invert_q(const BiLaurent &p)
{
    BiLaurent r;
    for (const auto &[m, v] : p.terms())
        r.add_term(-m.q, m.z, v);
    return r;
}

BigInt eval_q1_z1(const BiLaurent &p)
{
    BigInt s = 0;
    for (const auto &[m, v] : p.terms())
        s += v;
    return s;
}

BiLaurent eval_z1(const BiLaurent &p)
{
    BiLaurent r;
    for (const auto &[m, v] : p.terms())
        r.add_term(m.q, 0, v);
    return r;
}

BiLaurent truncate_qdeg(const BiLaurent &p, const std::optional<Rational> &max_q)
{
    if (!max_q)
        return p;
    BiLaurent r;
    for (const auto &[m, v] : p.terms()) {
        if (m.q > *max_q)
            break;
        r.add_term(m.q, m.z, v);
    }
    return r;
}

BiLaurent truncate_zdeg(const BiLaurent &p, long zwin)
{
    BiLaurent r;
    for (const auto &[m, v] : p.terms())
        if (m.z >= -zwin && m.z <= zwin)
            r.add_term(m.q, m.z, v);
    return r;
}

namespace
{

struct Dense
{
    long offset = 0;
    std::vector<BigInt> c; // c[i] is the coefficient of q^(offset+i)
};

Dense to_dense(const BiLaurent &p, const char *what)
{
    if (!p.is_z_free() || !p.has_integer_q_exponents())
        throw std::domain_error(std::string("divide_exact: ") + what +
                                " must be z-free with integer q exponents");
    Dense d;
    if (p.is_zero())
        return d;
    d.offset = p.min_q_degree()->to_long();
    long top = p.max_q_degree()->to_long();
    d.c.assign(static_cast<std::size_t>(top - d.offset + 1), BigInt(0));
    for (const auto &[m, v] : p.terms())
        d.c[static_cast<std::size_t>(m.q.to_long() - d.offset)] = v;
    return d;
}

} // namespace

BiLaurent divide_exact(const BiLaurent &num, const BiLaurent &den)
{
    Dense n = to_dense(num, "dividend");
    Dense d = to_dense(den, "divisor");
    if (d.c.empty())
        throw std::domain_error("divide_exact: division by zero polynomial");
    if (n.c.empty())
        return {};
    if (n.c.size() < d.c.size())
        throw std::domain_error("divide_exact: nonzero remainder");

    // Long division from the low end; the divisor's lowest coefficient must
    // divide every leading remainder coefficient.
    const BigInt &lead = d.c.front();
    std::vector<BigInt> quot(n.c.size() - d.c.size() + 1);
    std::vector<BigInt> rem = n.c;
    BigInt t;
    for (std::size_t i = 0; i < quot.size(); ++i) {
        if (rem[i] == 0)
            continue;
        if (!mpz_divisible_p(rem[i].get_mpz_t(), lead.get_mpz_t()))
            throw std::domain_error("divide_exact: nonzero remainder");
        mpz_divexact(t.get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
        quot[i] = t;
        for (std::size_t j = 0; j < d.c.size(); ++j)
            rem[i + j] -= t * d.c[j];
    }
    for (std::size_t i = quot.size(); i < rem.size(); ++i)
        if (rem[i] != 0)
            throw std::domain_error("divide_exact: nonzero remainder");
    return BiLaurent::from_q_coefficients(quot, n.offset - d.offset);
}

BiLaurent pochhammer_inv_series(long max_deg)
{
    if (max_deg < 0)
        return {};
    // Euler's product expansion: multiply in 1/(1-q^k) for k = 1..max_deg.
    std::vector<BigInt> c(static_cast<std::size_t>(max_deg + 1), BigInt(0));
    c[0] = 1;
    for (long k = 1; k <= max_deg; ++k)
        for (long i = k; i <= max_deg; ++i)
            c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - k)];
    return BiLaurent::from_q_coefficients(c);
}

CyclotomicVector CyclotomicVector::unit(int p)
{
    if (p < 1)
        throw std::invalid_argument("CyclotomicVector: period must be positive");
    CyclotomicVector v{p, std::vector<BigInt>(static_cast<std::size_t>(p), BigInt(0))};
    v.coeffs[0] = 1;
    return v;
}

CyclotomicVector operator*(const CyclotomicVector &a, const CyclotomicVector &b)
{
    if (a.p != b.p)
        throw std::invalid_argument("CyclotomicVector: mismatched periods " + std::to_string(a.p) +
                                    " and " + std::to_string(b.p));
    CyclotomicVector r{a.p, std::vector<BigInt>(static_cast<std::size_t>(a.p), BigInt(0))};
    for (int i = 0; i < a.p; ++i)
        for (int j = 0; j < a.p; ++j)
            r.coeffs[static_cast<std::size_t>((i + j) % a.p)] += a.coeffs[i] * b.coeffs[j];
    return r;
}

CyclotomicVector project_cyclotomic(const BiLaurent &p, int period)
{
    CyclotomicVector v{period, {}};
    if (period < 1)
        throw std::invalid_argument("project_cyclotomic: period must be positive");
    v.coeffs.assign(static_cast<std::size_t>(period), BigInt(0));
    for (const auto &[m, c] : p.terms()) {
        if (!m.q.is_zero())
            throw std::invalid_argument("project_cyclotomic: term with q exponent " + m.q.to_string());
        v.coeffs[static_cast<std::size_t>(mod_floor(m.z, period))] += c;
    }
    return v;
}

nlohmann::ordered_json to_json(const BiLaurent &p)
{
    auto terms = nlohmann::ordered_json::array();
    for (const auto &[m, c] : p.terms())
        terms.push_back({{"q", m.q.to_string()}, {"z", m.z}, {"c", c.get_str()}});
    return {{"terms", std::move(terms)}};
}

namespace
{

template <typename Json>
BiLaurent from_json_impl(const Json &j)
{
    BiLaurent p;
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
        throw std::invalid_argument("BiLaurent JSON: expected {\"terms\":[...]}");
    for (const auto &t : j.at("terms")) {
        Rational q = t.at("q").is_string() ? Rational::parse(t.at("q").template get<std::string>())
                                           : Rational(t.at("q").template get<long>());
        long z = t.at("z").template get<long>();
        BigInt c = t.at("c").is_string() ? BigInt(t.at("c").template get<std::string>()) : BigInt(t.at("c").template get<long>());
        p.add_term(q, z, c);
    }
    return p;
}

} // namespace

BiLaurent bilaurent_from_json(const nlohmann::json &j) { return from_json_impl(j); }
BiLaurent bilaurent_from_json(const nlohmann::ordered_json &j) { return from_json_impl(j); }

namespace
{

template <typename MonoFmt>
std::string render(const BiLaurent &p, MonoFmt fmt, const char *mul)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : p.terms()) {
        BigInt mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        std::string mono = fmt(m);
        if (mono.empty())
            os << mag.get_str();
        else if (mag == 1)
            os << mono;
        else
            os << mag.get_str() << mul << mono;
    }
    return os.str();
}

} // namespace

std::string to_text(const BiLaurent &p)
{
    return render(
        p,
        [](const Monomial &m) {
            std::string s;
            if (m.z != 0)
                s += m.z == 1 ? "z" : "z^" + std::to_string(m.z);
            if (!m.q.is_zero()) {
                if (!s.empty())
                    s += "*";
                if (m.q == Rational(1))
                    s += "q";
                else if (m.q.is_integer())
                    s += "q^" + m.q.to_string();
                else
                    s += "q^(" + m.q.to_string() + ")";
            }
            return s;
        },
        "*");
}

std::string to_latex(const BiLaurent &p)
{
    return render(
        p,
        [](const Monomial &m) {
            std::string s;
            if (m.z != 0)
                s += m.z == 1 ? "z" : "z^{" + std::to_string(m.z) + "}";
            if (!m.q.is_zero())
                s += m.q == Rational(1) ? "q" : "q^{" + m.q.to_string() + "}";
            return s;
        },
        "");
}

} // namespace qsn
