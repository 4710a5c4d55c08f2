#include <catch_amalgamated.hpp>

#include "helpers.hpp"
#include "qsn/qgauss.hpp"
#include "qsn/supernomial.hpp"

using namespace qsn;
using qsn::test::Q;

namespace
{

// Every L vector of length k with entries in [0, hi].
std::vector<LVector> all_l(std::size_t k, long hi)
{
    std::vector<LVector> out;
    LVector l(k, 0);
    auto rec = [&](auto &&self, std::size_t i) -> void {
        if (i == k) {
            out.push_back(l);
            return;
        }
        for (long x = 0; x <= hi; ++x) {
            l[i] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

TEST_CASE("t_matrix examples", "[supernomial]")
{
    CHECK(t_matrix(2).entries == IntMatrix{{2, -1}, {-1, 1}});
    CHECK(t_matrix(1).entries == IntMatrix{{1}});
    CHECK_THROWS_AS(t_matrix(0), std::invalid_argument);
    for (int m = 1; m <= 6; ++m) {
        IntMatrix id(static_cast<std::size_t>(m), std::vector<long>(static_cast<std::size_t>(m), 0));
        for (int i = 0; i < m; ++i)
            id[i][i] = 1;
        CHECK(matmul(t_matrix(m).entries, min_matrix(m)) == id);
    }
}

TEST_CASE("l_vector examples", "[supernomial]")
{
    CHECK(l_vector(SiteVector::make(2, 3, 4, {})) == LVector{7});
    CHECK(l_vector(SiteVector::make(2, 1, 1, {1})) == LVector{0, 1});
    // elementary vectors N^{i,j} (d = p-1) have L = e_i
    for (int p = 2; p <= 5; ++p)
        for (long i = 1; i <= p; ++i)
            for (long j = -3; j <= 3; ++j) {
                std::vector<long> h;
                for (int k = 0; k < p - 1; ++k)
                    h.push_back(std::min<long>(k + 1, i));
                LVector expected(static_cast<std::size_t>(p), 0);
                expected[static_cast<std::size_t>(i - 1)] = 1;
                CHECK(l_vector(SiteVector::make(p, i - j, j, h)) == expected);
            }
}

TEST_CASE("qsup examples", "[supernomial]")
{
    for (long l1 = 0; l1 <= 6; ++l1)
        for (long a = -1; a <= 7; ++a)
            CHECK(qsup({l1}, a) == qbin(l1, a));
    CHECK(qsup({1, 1}, 1) == Q({1, 1}));
    CHECK(qsup({0, 0, 0}, 0) == BiLaurent::one());
    CHECK_THROWS_AS(qsup({1, -1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(qsup({}, 0), std::invalid_argument);
    // frozen from the independent prototype
    CHECK(qsup({2, 1}, 2) == Q({1, 1, 2}));
    CHECK(qsup({1, 0, 1}, 3) == Q({1, 1}));
}

TEST_CASE("qsup_at1 examples", "[supernomial]")
{
    CHECK(qsup_at1({1, 1}, 1) == 2);
    CHECK(qsup_at1({2}, 1) == 2);
    CHECK(qsup_at1({1, 1}, 3) == 1);
    CHECK(qsup_at1({1, 1}, 4) == 0);
}

TEST_CASE("support and positivity", "[supernomial][property]")
{
    for (std::size_t k = 1; k <= 3; ++k)
        for (const auto &l : all_l(k, 3)) {
            const long deg = supernomial_degree(l);
            CHECK(qsup(l, -1).is_zero());
            CHECK(qsup(l, deg + 1).is_zero());
            for (long a = 0; a <= deg; ++a) {
                const BiLaurent s = qsup(l, a);
                CHECK(!s.is_zero());
                for (const auto &[m, c] : s.terms())
                    CHECK(c > 0);
                CHECK(eval_q1_z1(s) == qsup_at1(l, a));
            }
        }
}

TEST_CASE("generating function at q = 1", "[supernomial][property]")
{
    // sum_a qsup_at1(L, a) x^a = prod_j (1 + x + ... + x^j)^{L_j}
    for (std::size_t k = 1; k <= 4; ++k)
        for (const auto &l : all_l(k, 3)) {
            BiLaurent gf = BiLaurent::one();
            for (std::size_t j = 0; j < k; ++j) {
                BiLaurent f;
                for (long e = 0; e <= static_cast<long>(j + 1); ++e)
                    f.add_term(Rational(e), 0, 1);
                for (long c = 0; c < l[j]; ++c)
                    gf *= f;
            }
            BiLaurent sum;
            for (long a = 0; a <= supernomial_degree(l); ++a)
                sum.add_term(Rational(a), 0, qsup_at1(l, a));
            CHECK(sum == gf);
        }
}

TEST_CASE("supernomial recurrence", "[supernomial][property]")
{
    // qsup(L + e_k, a) = qsup(L + e_{k-1}, a - 1) + q^a qsup(L, a), e_0 = 0
    for (std::size_t k = 1; k <= 3; ++k)
        for (const auto &l : all_l(k, 3))
            for (long a = -4; a <= 12; ++a) {
                LVector lk = l, lk1 = l;
                ++lk[k - 1];
                if (k >= 2)
                    ++lk1[k - 2];
                INFO("a=" << a);
                CHECK(qsup(lk, a) == qsup(lk1, a - 1) + qsup(l, a).shifted(Rational(a)));
            }
}

TEST_CASE("a trailing zero column drops out", "[supernomial][property]")
{
    for (std::size_t k = 1; k <= 3; ++k)
        for (const auto &l : all_l(k, 3))
            for (long a = -2; a <= 14; ++a) {
                LVector padded = l;
                padded.push_back(0);
                CHECK(qsup(padded, a) == qsup(l, a));
            }
}

TEST_CASE("reversal symmetry a <-> deg - a at q = 1", "[supernomial][property]")
{
    for (std::size_t k = 1; k <= 3; ++k)
        for (const auto &l : all_l(k, 3)) {
            const long deg = supernomial_degree(l);
            for (long a = 0; a <= deg; ++a)
                CHECK(qsup_at1(l, a) == qsup_at1(l, deg - a));
        }
}
