#include <catch_amalgamated.hpp>

#include "helpers.hpp"
#include "qsn/bilaurent.hpp"
#include "qsn/detail/dense_q.hpp"

using namespace qsn;
using qsn::test::P;
using qsn::test::Q;

TEST_CASE("rational parsing and formatting", "[exactpoly]")
{
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-4") == Rational(-4));
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational(-3, 6).to_string() == "-1/2");
    CHECK(Rational(-3, 2).floor() == -2);
    CHECK(Rational(-3, 2).ceil() == -1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS(Rational::parse("1/x"));
    CHECK(floor_div(-7, 2) == -4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(mod_floor(-1, 3) == 2);
}

TEST_CASE("poly_add examples", "[exactpoly]")
{
    CHECK(poly_add(Q({1, 1}), Q({-1, 1})) == P({{"1", 0, 2}}));
    const BiLaurent p = P({{"1/2", 1, 3}, {"-2", -1, -1}});
    CHECK(poly_add(p, BiLaurent{}) == p);
    CHECK(poly_add(P({{"1/2", 0, 1}}), P({{"1/2", 0, 1}})) == P({{"1/2", 0, 2}}));
}

TEST_CASE("poly_mul examples", "[exactpoly]")
{
    CHECK(poly_mul(Q({1, 1}), Q({1, -1})) == Q({1, 0, -1}));
    CHECK(poly_mul(P({{"1/2", 1, 1}}), P({{"1/2", -1, 1}})) == P({{"1", 0, 1}}));
    const BiLaurent p = P({{"1/2", 1, 3}, {"-2", -1, -1}});
    CHECK(poly_mul(p, BiLaurent::one()) == p);
}

TEST_CASE("zero coefficients are never stored", "[exactpoly]")
{
    BiLaurent p = Q({1, 2});
    p -= Q({1, 2});
    CHECK(p.is_zero());
    CHECK(p.size() == 0);
    CHECK(to_json(p).dump() == R"({"terms":[]})");
}

TEST_CASE("substitute_z examples", "[exactpoly]")
{
    CHECK(substitute_z(P({{"1", 2, 1}}), Rational(1)) == P({{"3", 2, 1}}));
    CHECK(substitute_z(P({{"0", -1, 1}}), Rational(3)) == P({{"-3", -1, 1}}));
    const BiLaurent p = P({{"1/2", 1, 3}, {"-2", -1, -1}});
    CHECK(substitute_z(p, Rational(0)) == p);
}

TEST_CASE("eval_q1_z1 examples", "[exactpoly]")
{
    CHECK(eval_q1_z1(Q({1, 1, 2})) == 4);
    CHECK(eval_q1_z1(P({{"0", 1, 1}, {"0", -1, -1}})) == 0);
    CHECK(eval_q1_z1(BiLaurent{}) == 0);
}

TEST_CASE("project_cyclotomic examples", "[exactpoly]")
{
    using V = std::vector<BigInt>;
    CHECK(project_cyclotomic(P({{"0", -1, 1}, {"0", 0, 1}, {"0", 1, 1}}), 2).coeffs == V{1, 2});
    CHECK(project_cyclotomic(BiLaurent::one(), 3).coeffs == V{1, 0, 0});
    CHECK(project_cyclotomic(P({{"0", 3, 1}}), 3).coeffs == V{1, 0, 0});
    CHECK_THROWS_AS(project_cyclotomic(Q({0, 1}), 3), std::invalid_argument);
}

TEST_CASE("pochhammer_inv_series examples", "[exactpoly]")
{
    CHECK(pochhammer_inv_series(0) == BiLaurent::one());
    CHECK(pochhammer_inv_series(3) == Q({1, 1, 2, 3}));
    CHECK(pochhammer_inv_series(5) == Q({1, 1, 2, 3, 5, 7}));
}

TEST_CASE("pochhammer_inv_series inverts the finite product to its order", "[exactpoly][property]")
{
    for (long d = 0; d <= 25; ++d) {
        BiLaurent prod = BiLaurent::one();
        for (long k = 1; k <= d; ++k)
            prod *= Q({1}) - P({{std::to_string(k).c_str(), 0, 1}});
        CHECK(truncate_qdeg(prod * pochhammer_inv_series(d), Rational(d)) == BiLaurent::one());
    }
}

TEST_CASE("truncate_qdeg examples", "[exactpoly]")
{
    CHECK(truncate_qdeg(Q({1, 1, 0, 0, 1}), Rational(2)) == Q({1, 1}));
    const BiLaurent p = P({{"7/2", 1, 3}});
    CHECK(truncate_qdeg(p, std::nullopt) == p);
    CHECK(truncate_qdeg(P({{"3/2", 0, 1}}), Rational(1)).is_zero());
    CHECK(truncate_zdeg(P({{"0", 3, 1}, {"0", -2, 1}}), 2) == P({{"0", -2, 1}}));
}

TEST_CASE("divide_exact", "[exactpoly]")
{
    CHECK(divide_exact(Q({1, 0, -1}), Q({1, 1})) == Q({1, -1}));
    CHECK(divide_exact(Q({0, 0, 1, 1}), Q({1, 1})) == Q({0, 0, 1}));
    CHECK_THROWS_AS(divide_exact(Q({1, 1}), Q({1, 0, 1})), std::domain_error);
    CHECK_THROWS_AS(divide_exact(Q({1}), BiLaurent{}), std::domain_error);
}

TEST_CASE("ring laws on random polynomials", "[exactpoly][property]")
{
    std::mt19937_64 rng(20261016);
    for (int it = 0; it < 300; ++it) {
        const BiLaurent a = test::random_poly(rng), b = test::random_poly(rng), c = test::random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(eval_q1_z1(a * b) == eval_q1_z1(a) * eval_q1_z1(b));
    }
}

TEST_CASE("substitute_z composes and is a ring map", "[exactpoly][property]")
{
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        const BiLaurent a = test::random_poly(rng), b = test::random_poly(rng);
        const Rational c1(static_cast<long>(rng() % 7) - 3, 2), c2(static_cast<long>(rng() % 5) - 2);
        CHECK(substitute_z(substitute_z(a, c1), c2) == substitute_z(a, c1 + c2));
        CHECK(substitute_z(a * b, c1) == substitute_z(a, c1) * substitute_z(b, c1));
        CHECK(substitute_z(a + b, c2) == substitute_z(a, c2) + substitute_z(b, c2));
    }
}

TEST_CASE("project_cyclotomic is a ring homomorphism", "[exactpoly][property]")
{
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        const int p = 1 + static_cast<int>(rng() % 5);
        BiLaurent x, y;
        for (int k = 0; k < 4; ++k) {
            x.add_term(Rational(0), static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 7) - 3);
            y.add_term(Rational(0), static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 7) - 3);
        }
        CHECK(project_cyclotomic(x * y, p) == project_cyclotomic(x, p) * project_cyclotomic(y, p));
    }
    CHECK_THROWS_AS(CyclotomicVector::unit(2) * CyclotomicVector::unit(3), std::invalid_argument);
}

TEST_CASE("JSON round trip and canonical layout", "[exactpoly]")
{
    const BiLaurent p = P({{"1/2", -1, 3}, {"0", 0, 1}, {"2", 1, -7}});
    const auto j = to_json(p);
    CHECK(j.dump() == R"({"terms":[{"q":"0","z":0,"c":"1"},{"q":"1/2","z":-1,"c":"3"},{"q":"2","z":1,"c":"-7"}]})");
    CHECK(bilaurent_from_json(j) == p);
    CHECK(bilaurent_from_json(nlohmann::json::parse(R"({"terms":[{"q":1,"z":0,"c":2}]})")) == Q({0, 2}));
    CHECK_THROWS(bilaurent_from_json(nlohmann::json::parse(R"({"nope":1})")));

    std::mt19937_64 rng(3);
    for (int it = 0; it < 100; ++it) {
        const BiLaurent r = test::random_poly(rng);
        CHECK(bilaurent_from_json(nlohmann::ordered_json::parse(to_json(r).dump())) == r);
    }
}

TEST_CASE("text and latex rendering", "[exactpoly]")
{
    CHECK(to_text(Q({1, 1, 2})) == "1 + q + 2*q^2");
    CHECK(to_text(BiLaurent{}) == "0");
    CHECK(to_text(P({{"1/2", 0, 1}})) == "q^(1/2)");
    CHECK(to_text(P({{"1", -1, 1}})) == "z^-1*q");
    CHECK(to_latex(Q({0, 0, 2})) == "2q^{2}");
    CHECK(to_latex(P({{"1/2", -1, 1}})) == "z^{-1}q^{1/2}");
}

TEST_CASE("dense q-polynomials agree with sparse arithmetic", "[exactpoly]")
{
    const BiLaurent a = Q({1, -2, 0, 3}, -1), b = Q({2, 5}, 3);
    const detail::DenseQ da = detail::DenseQ::from(a), db = detail::DenseQ::from(b);
    BiLaurent out;
    (da * db).accumulate_into(out, Rational(0), 0);
    CHECK(out == a * b);
    detail::DenseQ acc;
    detail::add_to(acc, da, 2);
    detail::add_to(acc, db, 0);
    BiLaurent sum;
    acc.accumulate_into(sum, Rational(1, 2), 1);
    CHECK(sum == (a.shifted(Rational(2)) + b).shifted(Rational(1, 2), 1));
}
