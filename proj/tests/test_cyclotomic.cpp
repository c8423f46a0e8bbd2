#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nearring/cyclotomic.hpp>

#include <random>

using namespace nearring;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == PolyZ{-1, 1});
    CHECK(cyclotomic_poly(2) == PolyZ{1, 1});
    CHECK(cyclotomic_poly(6) == PolyZ{1, -1, 1});
    CHECK(cyclotomic_poly(12) == PolyZ{1, 0, -1, 0, 1});
    CHECK(cyclotomic_poly(105).degree() == 48); // first with a coefficient of -2
    // product over divisors reconstructs x^k - 1
    for (unsigned k : {6u, 12u, 30u}) {
        PolyZ prod{1};
        for (unsigned d = 1; d <= k; ++d)
            if (k % d == 0) prod = prod * cyclotomic_poly(d);
        PolyZ xk = PolyZ::x_pow(k) - PolyZ{1};
        CHECK(prod == xk);
    }
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(30) == 8);
}

TEST_CASE("rationals") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(5, 1).to_string() == "5");
    CHECK(Rational(-1, 2).to_string() == "-1/2");
}

TEST_CASE("field structure of Q(phi_k)") {
    const unsigned k = 7;
    CycNum one = CycNum::one(k);
    CycNum phi = CycNum::phi_power(k, 1);
    // phi^k = 1, and the k-th power wraps through the reduction
    CycNum p = one;
    for (unsigned e = 0; e < k; ++e) p = p * phi;
    CHECK(p == one);
    CycNum a = phi - one;
    CHECK(a * a.inverse() == one);
    CHECK_THROWS_AS(CycNum::zero(k).inverse(), ZeroElement);
    // conjugation is a ring morphism and conj_d . conj_e = conj_{de}
    CycNum b = phi * phi + one;
    CHECK(conjugate(a * b, 3) == conjugate(a, 3) * conjugate(b, 3));
    CHECK(conjugate(conjugate(a, 2), 3) == conjugate(a, 6));
    CHECK_THROWS_AS(conjugate(a, 7), NotCoprime);
}

TEST_CASE("known norms") {
    // N(phi - 1) over Q(phi_k) is p for k = p prime
    for (unsigned k : {3u, 5u, 7u, 11u}) {
        CycNum a = CycNum::phi_power(k, 1) - CycNum::one(k);
        CHECK(norm(a) == Rational(k, 1));
    }
    CHECK(norm(CycNum::one(12)) == Rational(1, 1));
    CHECK(norm(CycNum::zero(12)) == Rational(0, 1));
}

TEST_CASE("norm agrees with the resultant oracle") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (unsigned k : {5u, 7u, 12u}) {
        const unsigned deg = 2 * euler_phi(k) + 1;
        for (int it = 0; it < 200; ++it) {
            std::vector<mpz_class> c(deg + 1);
            for (auto& v : c) v = coef(rng);
            PolyZ f(std::move(c));
            Rational n = norm(reduce(f, k));
            REQUIRE(n.is_integer());
            CHECK(n.num == resultant(cyclotomic_poly(k), f));
        }
    }
}
