#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nearring/fields.hpp>

using namespace nearring;

TEST_CASE("prime field arithmetic") {
    Field F(13, 1);
    CHECK(F.order() == 13);
    FieldElem a = F.from_int(7), b = F.from_int(9);
    CHECK(F.add(a, b) == F.from_int(3));
    CHECK(F.sub(a, b) == F.from_int(11));
    CHECK(F.mul(a, b) == F.from_int(11)); // 63 mod 13
    CHECK(F.mul(a, F.inv(a)) == F.one());
    CHECK(F.pow(F.from_int(2), 12) == F.one());
    CHECK(F.neg(a) == F.from_int(6));
    CHECK_THROWS_AS(F.inv(F.zero()), ZeroElement);
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(Field(12, 1), NotPrime);
    // x^2 + 1 is reducible over GF(13): 5^2 = -1
    CHECK_THROWS_AS(Field(13, 2, Coeffs{1, 0, 1}), ReducibleModulus);
    CHECK(is_irreducible(13, Coeffs{1, 3, 1}));
    CHECK_FALSE(is_irreducible(13, Coeffs{1, 0, 1}));
}

TEST_CASE("lexicographically least irreducibles") {
    CHECK(find_irreducible(13, 2) == Coeffs{1, 3, 1});
    CHECK(find_irreducible(11, 2) == Coeffs{1, 0, 1});
}

TEST_CASE("enumeration order round-trip") {
    Field F(5, 2);
    for (std::uint64_t n = 0; n < F.order(); ++n) CHECK(F.index_of(F.element_at(n)) == n);
    // constant term is the most significant digit
    CHECK(F.element_at(1) == FieldElem{{0, 1}});
    CHECK(F.element_at(5) == FieldElem{{1, 0}});
}

TEST_CASE("multiplicative orders") {
    Field F(13, 2, Coeffs{1, 3, 1});
    FieldElem x = F.element_at(1);
    CHECK(F.mul_order(x) == 7);
    // orders divide q-1 and the order-d counts sum to q-1
    std::uint64_t total = 0;
    for (std::uint64_t d = 1; d <= F.order() - 1; ++d)
        if ((F.order() - 1) % d == 0) total += elements_of_order(F, d).size();
    CHECK(total == F.order() - 1);
}

TEST_CASE("elements of given order") {
    Field F(13, 1);
    auto e4 = elements_of_order(F, 4);
    CHECK(e4.size() == 2);
    CHECK(element_of_order(F, 4) == e4.front());
    for (const auto& e : e4) CHECK(F.mul_order(e) == 4);
    CHECK_THROWS_AS(element_of_order(F, 5), NoSuchOrder);
}

TEST_CASE("minimal polynomials") {
    Field F(11, 2, Coeffs{1, 5, 1});
    FieldElem x = F.element_at(1);
    CHECK(minimal_polynomial(F, x) == Coeffs{1, 5, 1});
    CHECK(minimal_polynomial(F, F.from_int(3)) == Coeffs{8, 1});
    // g^5 for g of order 12 with minpoly x^2+5x+1 has minpoly x^2+6x+1
    auto gens = elements_of_order(F, 12);
    bool seen = false;
    for (const auto& g : gens)
        if (minimal_polynomial(F, g) == Coeffs{1, 6, 1}) seen = true;
    CHECK(seen);
}
