#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "charclass.hpp"

using namespace chowops;

TEST_CASE("series basics")
{
    // inv(1+h) is the alternating geometric series
    const TruncSeries geo = series_inv(TruncSeries(3, {1, 1}));
    CHECK(geo == TruncSeries(3, {1, -1, 1, -1}));

    CHECK(series_pow(TruncSeries(2, {1, 1}), 2) == TruncSeries(2, {1, 2, 1}));

    // (1+2h) / (1+h)^3 = 1 - h + O(h^2); used by the conic computation
    const TruncSeries conic =
        series_mul(TruncSeries(1, {1, 2}), series_pow(TruncSeries(1, {1, 1}), -3));
    CHECK(conic == TruncSeries(1, {1, -1}));

    CHECK_THROWS_AS(series_inv(TruncSeries(2, {2, 1})), std::invalid_argument);
}

TEST_CASE("series ring identities")
{
    std::mt19937 gen(7);
    std::uniform_int_distribution<long long> dist(-4, 4);
    for (int rep = 0; rep < 50; ++rep) {
        TruncSeries a(8), b(8);
        for (int i = 0; i <= 8; ++i) {
            a.set_coeff(i, dist(gen));
            b.set_coeff(i, dist(gen));
        }
        a.set_coeff(0, 1);
        CHECK(series_mul(a, b) == series_mul(b, a));
        CHECK(series_mul(a, series_inv(a)) == TruncSeries::one(8));
    }
}

TEST_CASE("w_class examples")
{
    // p=2: w is the total Chern class of the spec
    const VirtualBundleSpec conic = VirtualBundleSpec::minus_tangent_quadric(1);
    CHECK(w_class(conic, Prime(2), 1) == chern_series(conic, 1));
    CHECK(w_class(conic, Prime(2), 1) == TruncSeries(1, {1, -1}));

    // line bundle O(a) at p=3: w = 1 + a^2 h^2
    const VirtualBundleSpec line{{{5, 1}}};
    const TruncSeries w = w_class(line, Prime(3), 4);
    CHECK(w.coeff(0) == 1);
    CHECK(w.coeff(2) == 25);
    CHECK(w.coeff(1) == 0);
    CHECK(w.coeff(3) == 0);
    CHECK(w.coeff(4) == 0);
}

TEST_CASE("w_class Whitney multiplicativity on random specs")
{
    std::mt19937 gen(11);
    std::uniform_int_distribution<long long> adist(-3, 3);
    std::uniform_int_distribution<long long> edist(-4, 4);
    for (int p : {2, 3, 5}) {
        for (int rep = 0; rep < 30; ++rep) {
            VirtualBundleSpec s1, s2;
            for (int i = 0; i < 3; ++i) {
                s1.factors.push_back({adist(gen), edist(gen)});
                s2.factors.push_back({adist(gen), edist(gen)});
            }
            VirtualBundleSpec both = s1;
            both.factors.insert(both.factors.end(), s2.factors.begin(), s2.factors.end());
            const Prime prime(p);
            CHECK(w_class(both, prime, 10) ==
                  series_mul(w_class(s1, prime, 10), w_class(s2, prime, 10)));
        }
    }
}

TEST_CASE("w_class sparsity: w_i = 0 unless (p-1) | i")
{
    std::mt19937 gen(13);
    std::uniform_int_distribution<long long> adist(-3, 3);
    std::uniform_int_distribution<long long> edist(-4, 4);
    for (int p : {3, 5}) {
        for (int rep = 0; rep < 20; ++rep) {
            VirtualBundleSpec s;
            for (int i = 0; i < 3; ++i)
                s.factors.push_back({adist(gen), edist(gen)});
            const TruncSeries w = w_class(s, Prime(p), 12);
            for (int i = 0; i <= 12; ++i)
                if (i % (p - 1) != 0)
                    CHECK(w.coeff(i) == 0);
        }
    }
}

TEST_CASE("rost_number pinned values")
{
    const RostNumber conic = rost_number(1, Prime(2));
    CHECK(conic.deg == -2);
    CHECK(conic.quotient.v == 1);

    const RostNumber surf2 = rost_number(2, Prime(2));
    CHECK(surf2.deg == 4);
    CHECK(surf2.quotient.v == 0);

    const RostNumber surf3 = rost_number(2, Prime(3));
    CHECK(surf3.deg == 0);
    CHECK(surf3.quotient.v == 0);
}

TEST_CASE("rost divisibility sweep")
{
    for (int p : {2, 3, 5})
        for (int n = 1; n <= 30; ++n)
            CHECK(rost_number(n, Prime(p)).deg % p == 0);
}

TEST_CASE("degree_formula_check")
{
    CHECK(degree_formula_check(6, 6, 1, 17, Prime(2)));      // identity map shape
    CHECK(degree_formula_check(-2, -2, 1, 2, Prime(2)));     // conic self-map
    CHECK(degree_formula_check(4, -2, 0, 2, Prime(2)));      // 2 = 0 mod 2
    CHECK_FALSE(degree_formula_check(4, -2, 1, 4, Prime(2)));
    CHECK_THROWS_AS(degree_formula_check(3, 2, 1, 2, Prime(2)), std::invalid_argument);
}
