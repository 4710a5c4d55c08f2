#include <catch_amalgamated.hpp>

#include <thread>

#include "helpers.hpp"
#include "qsn/qgauss.hpp"

using namespace qsn;
using qsn::test::P;
using qsn::test::Q;

TEST_CASE("qpoch examples", "[qgauss]")
{
    CHECK(qpoch(0) == BiLaurent::one());
    CHECK(qpoch(1) == Q({1, -1}));
    // (1-q)(1-q^2)(1-q^3)
    CHECK(qpoch(3) == Q({1, -1, -1, 0, 1, 1, -1}));
    CHECK_THROWS_AS(qpoch(-1), std::invalid_argument);
}

TEST_CASE("qbin examples", "[qgauss]")
{
    CHECK(qbin(4, 2) == Q({1, 1, 2, 1, 1}));
    CHECK(qbin(2, 3).is_zero());
    for (long n = 0; n <= 10; ++n)
        CHECK(qbin(n, 0) == BiLaurent::one());
    CHECK(qbin(-3, -5).is_zero());
    CHECK(qbin(5, -1).is_zero());
}

TEST_CASE("qbin_plus examples", "[qgauss]")
{
    for (long m = -8; m <= 8; ++m)
        CHECK(qbin_plus(m, m) == BiLaurent::one());
    for (long n = -8; n < 0; ++n)
        CHECK(qbin_plus(n, 0).is_zero());
    CHECK(qbin_plus(-1, -2) == P({{"-1", 0, -1}}));
    // frozen from the independent prototype
    CHECK(qbin_plus(-3, -5) == Q({1, 1, 2, 1, 1}, -7));
    CHECK(qbin_plus(-2, 1).is_zero());
}

TEST_CASE("qbin_plus restricts to qbin for n >= 0", "[qgauss]")
{
    for (long n = 0; n <= 10; ++n)
        for (long m = -5; m <= 15; ++m)
            CHECK(qbin_plus(n, m) == qbin(n, m));
}

TEST_CASE("q-Pascal identities hold on a window", "[qgauss]")
{
    for (long n = -8; n <= 8; ++n)
        for (long m = -8; m <= 8; ++m) {
            INFO("n=" << n << " m=" << m);
            CHECK(qbin_plus(n, m) == qbin_plus(n - 1, m).shifted(Rational(m)) + qbin_plus(n - 1, m - 1));
            CHECK(qbin_plus(n, m) == qbin_plus(n - 1, m) + qbin_plus(n - 1, m - 1).shifted(Rational(n - m)));
        }
}

TEST_CASE("zero pattern of qbin_plus matches qbin_plus_nonzero", "[qgauss]")
{
    for (long n = -9; n <= 9; ++n)
        for (long m = -9; m <= 9; ++m)
            CHECK(!qbin_plus(n, m).is_zero() == qbin_plus_nonzero(n, m));
}

TEST_CASE("q = 1 semantics: coefficients of (1 + 1/z)^n", "[qgauss]")
{
    // At q = 1, qbin_plus(n, m) is the coefficient of z^{-m} in (1 + z^{-1})^n
    // expanded around z = 0. For n < 0 write (1 + 1/z)^n = z^{-n} (1 + z)^n and
    // expand (1 + z)^n as a binomial series.
    auto series_coeff = [](long n, long k) -> BigInt {
        // coefficient of z^k in (1+z)^n, k >= 0, generalized binomial
        if (k < 0)
            return 0;
        BigInt num = 1, den = 1;
        for (long i = 0; i < k; ++i) {
            num *= (n - i);
            den *= (i + 1);
        }
        return num / den;
    };
    for (long n = -6; n <= 6; ++n)
        for (long m = -10; m <= 10; ++m) {
            // z^{-n} (1+z)^n: coefficient of z^{-m} is coefficient of z^{n-m} in (1+z)^n
            const BigInt expected = n >= 0 ? binomial(n, m) : series_coeff(n, n - m);
            INFO("n=" << n << " m=" << m);
            CHECK(eval_q1_z1(qbin_plus(n, m)) == expected);
        }
}

TEST_CASE("regeneration from the q-Pascal system reproduces qbin_plus", "[qgauss]")
{
    const auto table = regenerate_qbin_plus(-8, 8, -8, 8);
    CHECK(table.size() == 17u * 17u);
    for (const auto &[k, v] : table) {
        INFO("n=" << k.n << " m=" << k.m);
        CHECK(v == qbin_plus(k.n, k.m));
    }
}

TEST_CASE("qbin coefficients are symmetric and sum to binomials", "[qgauss][property]")
{
    for (long n = 0; n <= 14; ++n)
        for (long m = 0; m <= n; ++m) {
            const BiLaurent b = qbin(n, m);
            CHECK(eval_q1_z1(b) == binomial(n, m));
            CHECK(*b.max_q_degree() == Rational(m * (n - m)));
            CHECK(invert_q(b).shifted(Rational(m * (n - m))) == b);
        }
}

TEST_CASE("caches are consistent across threads", "[qgauss]")
{
    std::vector<BiLaurent> results(4);
    std::vector<std::thread> ts;
    for (int t = 0; t < 4; ++t)
        ts.emplace_back([t, &results] { results[t] = qbin_plus(-7 + t, -9); });
    for (auto &t : ts)
        t.join();
    for (int t = 0; t < 4; ++t)
        CHECK(results[t] == qbin_plus(-7 + t, -9));
}
