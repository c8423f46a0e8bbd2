#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nearring/overlaps.hpp>

#include <algorithm>

using namespace nearring;

TEST_CASE("overlap polynomial") {
    Quad q{1, 2, 2, 5, 12};
    // f = x^w (x^j - 1)(x^s - 1) - (x^i - 1)(x^t - 1)
    PolyZ f = overlap_poly(q, 1);
    PolyZ lhs = PolyZ::x_pow(1) * (PolyZ::x_pow(2) - PolyZ{1}) * (PolyZ::x_pow(2) - PolyZ{1});
    PolyZ rhs = (PolyZ::x_pow(1) - PolyZ{1}) * (PolyZ::x_pow(5) - PolyZ{1});
    CHECK(f == lhs - rhs);
    CHECK(reduce(f, 12).is_zero()); // the k=12 overlap witness
    CHECK_FALSE(reduce(overlap_poly(q, 0), 12).is_zero());
}

TEST_CASE("trivial patterns") {
    CHECK(triviality(Quad{2, 2, 3, 3, 10}, true, false).kind == TrivKind::JEqualsI);
    CHECK(triviality(Quad{2, 2, 3, 3, 10}, true, false).condition == TrivCondition::Always);
    auto v = triviality(Quad{2, 2, 3, 7, 10}, true, false); // (i,i | s, k-s)
    CHECK(v.trivial());
    CHECK(v.condition == TrivCondition::EvenKOrChar2);
    CHECK(triviality(Quad{1, 2, 11, 2, 12}, true, false).kind == TrivKind::SEqualsKMinusI);
    CHECK(triviality(Quad{1, 2, 11, 10, 12}, true, false).condition == TrivCondition::INotHalfK);
    CHECK(triviality(Quad{3, 4, 3, 5, 12}, true, false).kind == TrivKind::IEqualsS);
    CHECK_FALSE(triviality(Quad{1, 2, 2, 5, 12}, true, false).trivial());
    // side order must not matter for orbit-level rejection
    CHECK(orbit_trivial(Quad{11, 2, 1, 2, 12}, true, false));
}

TEST_CASE("orbit-wide triviality catches pattern leaks") {
    // (1,17 | 3,15) at k = 18 matches no pattern itself but its orbit
    // contains (1,1 | 3,3)
    Quad q{1, 17, 3, 15, 18};
    CHECK_FALSE(triviality(q, true, false).trivial());
    CHECK(orbit_trivial(q, true, false));
    CHECK_THROWS_AS(canonicalize(q), TrivialInput);
    // char-2 triviality is implied by plain triviality
    for (unsigned i = 1; i < 10; ++i)
        for (unsigned j = 1; j < 10; ++j) {
            Quad r{i, j, 3, 7, 10};
            if (orbit_trivial(r, true, false)) CHECK(orbit_trivial(r, true, true));
        }
}

TEST_CASE("orbit and canonical form") {
    Quad q{2, 5, 1, 2, 12};
    auto orb = orbit(q);
    CHECK(std::count(orb.begin(), orb.end(), q) == 1);
    Quad c = canonicalize(q);
    CHECK(c == Quad{1, 2, 2, 5, 12});
    for (const Quad& m : orb) {
        CHECK(canonicalize(m) == c);
        CHECK(std::count(orb.begin(), orb.end(), m) == 1);
    }
    CHECK(normalize(q).value() == Quad{1, 2, 2, 5, 12});
    CHECK(reduce_form(Quad{10, 7, 11, 2, 12}).i < reduce_form(Quad{10, 7, 11, 2, 12}).j);
    CHECK(omega_of(Quad{1, 2, 2, 5, 12}) == Rational(1, 1));
    CHECK(omega_of(Quad{1, 2, 2, 4, 12}) == Rational(1, 2));
    CHECK_THROWS_AS(normalize(Quad{1, 2, 2, 4, 9}), OddK);
}

TEST_CASE("bucket enumeration equals the direct scan") {
    for (unsigned k : {6u, 10u, 12u, 14u}) {
        auto fast = enumerate_overlaps(ComplexContext{k});
        auto slow = enumerate_overlaps_direct(ComplexContext{k});
        REQUIRE(fast.size() == slow.size());
        for (std::size_t i = 0; i < fast.size(); ++i) {
            CHECK(fast[i].canonical == slow[i].canonical);
            CHECK(fast[i].witnesses == slow[i].witnesses);
        }
    }
}

TEST_CASE("complex overlaps at k = 12") {
    auto cl = enumerate_overlaps(ComplexContext{12});
    REQUIRE(cl.size() == 2);
    CHECK(cl[0].canonical == Quad{1, 2, 2, 5, 12});
    CHECK(cl[0].witnesses == std::vector<unsigned>{1});
    CHECK(cl[1].canonical == Quad{2, 3, 3, 6, 12});
    CHECK(cl[1].witnesses == std::vector<unsigned>{1});
}

TEST_CASE("field context validation") {
    Field F(13, 1);
    FieldElem g = element_of_order(F, 4);
    CHECK_THROWS_AS(enumerate_overlaps(FieldContext{&F, g, 5}), KNotDividingQMinus1);
    CHECK_THROWS_AS(enumerate_overlaps(FieldContext{&F, g, 12}), NoSuchOrder);
    // (13, 6) is not circular: 13 divides a norm for k = 6
    FieldElem h = element_of_order(F, 6);
    CHECK_THROWS_AS(enumerate_overlaps(FieldContext{&F, h, 6}), NotCircular);
}
