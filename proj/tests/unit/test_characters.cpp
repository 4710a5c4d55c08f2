#include <catch_amalgamated.hpp>

#include "helpers.hpp"
#include "qsn/characters.hpp"
#include "qsn/supernomial.hpp"

using namespace qsn;
using qsn::test::P;
using qsn::test::Q;

namespace
{

// Monotone site vectors with d = p - 1, entries in [0, nmax], and L >= 0.
std::vector<SiteVector> coinv_sites(int p, long nmax)
{
    std::vector<SiteVector> out;
    std::vector<long> h(static_cast<std::size_t>(p - 1), 0);
    for (long np = 0; np <= nmax; ++np)
        for (long nm = 0; nm <= nmax; ++nm) {
            auto rec = [&](auto &&self, std::size_t i, long lo) -> void {
                if (i == h.size()) {
                    const SiteVector n = SiteVector::make(p, np, nm, h);
                    if (!n.is_monotone())
                        return;
                    const LVector l = l_vector(n);
                    if (std::all_of(l.begin(), l.end(), [](long x) { return x >= 0; }))
                        out.push_back(n);
                    return;
                }
                for (long x = lo; x <= nmax; ++x) {
                    h[i] = x;
                    self(self, i + 1, x);
                }
            };
            rec(rec, 0, 0);
        }
    return out;
}

} // namespace

TEST_CASE("character_prefactor examples", "[characters]")
{
    CHECK(character_prefactor(2, 0) == std::pair{Rational(0), Rational(0)});
    CHECK(character_prefactor(3, 1) == std::pair{Rational(0), Rational(-1, 3)});
    CHECK(character_prefactor(4, 3) == std::pair{Rational(3, 8), Rational(-3, 4)});
}

TEST_CASE("CharacterValue equality normalizes integer shifts", "[characters]")
{
    CHECK(CharacterValue{Rational(3, 2), Rational(0), BiLaurent::one()} ==
          CharacterValue{Rational(1, 2), Rational(0), Q({0, 1})});
    CHECK(CharacterValue{Rational(0), Rational(5, 3), BiLaurent::one()} ==
          CharacterValue{Rational(0), Rational(2, 3), P({{"0", 1, 1}})});
    CHECK(!(CharacterValue{Rational(1, 2), Rational(0), BiLaurent::one()} ==
            CharacterValue{Rational(0), Rational(0), BiLaurent::one()}));
}

TEST_CASE("char_rep examples", "[characters]")
{
    // p = 2, r = 0: theta = sum z^n q^{n^2}, times 1/(q)_inf
    const CharacterValue c = char_rep(2, 0, 2, 1);
    CHECK(c.q_shift == Rational(0));
    CHECK(c.z_shift == Rational(0));
    CHECK(c.poly == Q({1, 1, 2}) + P({{"1", 1, 1}, {"2", 1, 1}, {"1", -1, 1}, {"2", -1, 1}}));
    // p = 1, r = 0: exponents n(n-1)/2
    const CharacterValue c1 = char_rep(1, 0, 2, 1);
    CHECK(c1.poly == Q({1, 1, 2}) + P({{"0", 1, 1}, {"1", 1, 1}, {"2", 1, 2}, {"1", -1, 1}, {"2", -1, 1}}));
    CHECK_THROWS_AS(char_rep(2, 2, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(char_rep(0, 0, 2, 1), std::invalid_argument);
}

TEST_CASE("char_coinv_supernomial examples", "[characters]")
{
    CHECK(char_coinv_supernomial(2, 0, SiteVector::make(2, 1, 1, {1})).normalized().poly == BiLaurent::one());
    CHECK(char_coinv_supernomial(2, 0, SiteVector::make(2, 0, 0, {0})).normalized().poly == BiLaurent::one());
    CHECK_THROWS_AS(char_coinv_supernomial(3, 0, SiteVector::make(3, 2, 1, {2, 2})), NonFiniteSupport);
}

TEST_CASE("fermionic and supernomial characters agree", "[characters][property]")
{
    for (int p = 2; p <= 3; ++p)
        for (const auto &n : coinv_sites(p, 3))
            for (int r = 0; r < p; ++r) {
                INFO("p=" << p << " r=" << r << " N=" << n.to_string());
                CHECK(char_coinv_fermionic(p, r, n) == char_coinv_supernomial(p, r, n));
            }
}

TEST_CASE("reduced d gives the same character when trailing entries are saturated", "[characters]")
{
    for (int p = 2; p <= 3; ++p)
        for (long np = 0; np <= 3; ++np)
            for (long nm = 0; nm <= 3; ++nm) {
                const long s = np + nm;
                const SiteVector full = SiteVector::make(p, np, nm, std::vector<long>(static_cast<std::size_t>(p - 1), s));
                const SiteVector small = SiteVector::make(p, np, nm, {});
                for (int r = 0; r < p; ++r)
                    CHECK(char_coinv_fermionic(p, r, small) == char_coinv_fermionic(p, r, full));
            }
}

TEST_CASE("spectral flow examples", "[characters]")
{
    const FlowCheck f = spectral_flow_check(2, 0, SiteVector::make(2, 1, 1, {1}));
    CHECK(f.pass);
    CHECK(f.lhs == f.rhs);
    for (int p = 2; p <= 3; ++p)
        for (const auto &n : coinv_sites(p, 3))
            for (int r = 0; r < p; ++r)
                CHECK(spectral_flow_check(p, r, n).pass);
}

TEST_CASE("large N stabilizes to the representation character", "[characters]")
{
    const long dq = 4, zw = 1;
    for (int p = 2; p <= 3; ++p)
        for (int r = 0; r < p; ++r) {
            const long t = 2 * (dq + zw + p);
            const CharacterValue rep = char_rep(p, r, dq, zw);
            CHECK(truncate(char_coinv_fermionic(p, r, SiteVector::make(p, t, t, {})), dq, zw) == rep);
            CHECK(truncate(char_coinv_fermionic(p, r, SiteVector::make(p, t, t, std::vector<long>(p - 1, 2 * t))), dq,
                           zw) == rep);
            for (int d = 0; d <= p - 1; ++d)
                CHECK(chi_gordon_character(p, d, r, dq, zw) == rep.poly);
        }
}

TEST_CASE("char_brep over a certified box matches the Gordon series", "[characters]")
{
    const long dq = 4, zw = 1, t = 14;
    QuadraticData qd;
    qd.a = build_matrix_A(2, 0);
    qd.u = charge_vector(0);
    qd.normalize();
    const SiteVector n = SiteVector::make(2, t, t, {});
    const auto sr = support_box(n);
    REQUIRE(sr.box.has_value());
    CHECK(char_brep(qd, {t, t}, *sr.box, dq, zw) == char_brep_gordon(2, 0, 0, dq, zw));
}
