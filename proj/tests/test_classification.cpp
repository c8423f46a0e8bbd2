#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nearring/classification.hpp>

using namespace nearring;

TEST_CASE("predicted sets for small k") {
    auto p12 = predicted_set(12);
    REQUIRE(p12.classes.size() == 2);
    CHECK(p12.classes[0].canonical == Quad{1, 2, 2, 5, 12});
    CHECK(p12.classes[1].canonical == Quad{2, 3, 3, 6, 12});
    for (const auto& c : p12.classes) CHECK(c.families == std::set<Family>{Family::O1});
    CHECK(predicted_set(8).classes.empty());  // no family divides 8
    CHECK(predicted_set(30).classes.size() == 15);
    CHECK_THROWS_AS(predicted_set(9), OddK);
}

TEST_CASE("enumeration matches the predicted classification") {
    for (unsigned k : {4u, 6u, 8u, 10u, 12u, 18u, 24u}) {
        auto rep = verify_classification(k);
        CHECK(rep.pass);
        CHECK(rep.missing.empty());
        CHECK(rep.extra.empty());
    }
}

TEST_CASE("odd k has no overlaps") {
    for (unsigned k = 3; k <= 15; k += 2) {
        CHECK(enumerate_overlaps(ComplexContext{k}).empty());
        CHECK(verify_classification(k).pass);
    }
}

TEST_CASE("family labels") {
    auto cl = enumerate_overlaps(ComplexContext{12});
    label_families(cl, 12);
    for (const auto& c : cl) CHECK(c.family == Family::O1);
    CHECK(family_name(Family::O1) == "O1");
    CHECK(family_name(Family::Exceptional) == "exceptional");
}

TEST_CASE("triples at k = 30 are T1..T5") {
    auto cl = enumerate_overlaps(ComplexContext{30});
    auto triples = find_triples(cl, 30);
    REQUIRE(triples.size() == 5);
    std::set<unsigned> labels;
    for (const auto& t : triples) {
        REQUIRE(t.label.has_value());
        labels.insert(*t.label);
    }
    CHECK(labels == std::set<unsigned>{1, 2, 3, 4, 5});
    CHECK(find_quadruple_overlaps(cl, 30).empty());
}

TEST_CASE("no triples at k = 12") {
    auto cl = enumerate_overlaps(ComplexContext{12});
    CHECK(find_triples(cl, 12).empty());
    CHECK(find_quadruple_overlaps(cl, 12).empty());
}
