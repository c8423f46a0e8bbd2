#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nearring/polyz.hpp>

#include <random>

using namespace nearring;

TEST_CASE("basic arithmetic and normalization") {
    PolyZ f{1, 2, 3};          // 3x^2 + 2x + 1
    PolyZ g{-1, 0, 0, 1};      // x^3 - 1
    CHECK(f.degree() == 2);
    CHECK((f + (-f)).is_zero());
    CHECK(PolyZ{0, 0, 0}.is_zero());
    CHECK(f * g == g * f);
    CHECK((f + g) * (f - g) == f * f - g * g);
    CHECK(f.eval(2) == 17);
    CHECK(g.eval(-1) == -2);
    CHECK(PolyZ::x_pow(4) == PolyZ{0, 0, 0, 0, 1});
    CHECK_THROWS_AS(PolyZ{}.leading(), ZeroPolynomial);
}

TEST_CASE("monic division") {
    PolyZ d{-1, 1};            // x - 1
    PolyZ f = d * PolyZ{2, 0, 5};
    CHECK(f.divide_exact_monic(d) == PolyZ{2, 0, 5});
    CHECK(f.mod_monic(d).is_zero());
    CHECK((f + PolyZ{3}).mod_monic(d) == PolyZ{3});
    CHECK_THROWS(PolyZ({1, 1}).divide_exact_monic(PolyZ{-1, 2})); // not monic
    CHECK_THROWS(PolyZ({1, 1, 1}).divide_exact_monic(d));         // remainder
}

TEST_CASE("resultant against direct evaluation") {
    // Res(x - a, g) = g(a)
    PolyZ g{1, 1, 1};
    for (long a = -5; a <= 5; ++a) CHECK(resultant(PolyZ{-a, 1}, g) == g.eval(a));
    // Res(f, c) = c^deg f for constants
    CHECK(resultant(PolyZ{1, 0, 0, 1}, PolyZ{5}) == 125);
    CHECK_THROWS_AS(resultant(PolyZ{}, g), ZeroPolynomial);
}

TEST_CASE("resultant multiplicativity on random inputs") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> coef(-6, 6);
    auto rand_poly = [&](int deg) {
        std::vector<mpz_class> c(deg + 1);
        for (auto& v : c) v = coef(rng);
        c[deg] = 1; // monic, so both factorizations stay exact
        return PolyZ(std::move(c));
    };
    for (int it = 0; it < 50; ++it) {
        PolyZ f = rand_poly(3), g = rand_poly(2), h = rand_poly(2);
        CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
    }
}
