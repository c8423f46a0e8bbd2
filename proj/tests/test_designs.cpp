#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nearring/designs.hpp>

using namespace nearring;

TEST_CASE("subgroup construction") {
    Field F(13, 1);
    SubgroupK sub = subgroup_k(F, 4);
    REQUIRE(sub.elems.size() == 4);
    CHECK(sub.elems[0] == F.one());
    CHECK(F.mul_order(sub.gen) == 4);
    CHECK_THROWS_AS(subgroup_k(F, 4, F.from_int(2)), NoSuchOrder); // 2 has order 12
}

TEST_CASE("circularity") {
    Field F13(13, 1);
    CHECK(circularity_check(F13, 4));
    CHECK_FALSE(circularity_check(F13, 6)); // 13 is a circularity prime for k = 6
    CHECK_THROWS_AS(circularity_check(F13, 5), KNotDividingQMinus1);
    Field F31(31, 1);
    CHECK(circularity_check(F31, 5));
}

TEST_CASE("circles") {
    Field F(13, 1);
    SubgroupK sub = subgroup_k(F, 4);
    Circle c = circle(F, sub, F.one(), F.zero());
    REQUIRE(c.points.size() == 4);
    for (const auto& pt : c.points) CHECK(F.pow(pt, 4) == F.one());
    CHECK_THROWS_AS(circle(F, sub, F.zero(), F.one()), ZeroRadius);
}

TEST_CASE("edge sequences and decomposition") {
    Field F(13, 1);
    SubgroupK sub = subgroup_k(F, 4);
    EdgeSequence e = edge_sequence(F, sub, F.one(), F.one());
    CHECK(e.eps == std::vector<unsigned>{2, 1, 2});
    auto graphs = decompose(e);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == BasicGraph{1, Parity::Even});
    CHECK(graphs[1] == BasicGraph{2, Parity::Odd});
    CHECK_THROWS_AS(edge_sequence(F, sub, F.one(), F.zero()), ZeroInput);
    EdgeSequence bad{4, {1, 0, 2}};
    CHECK_THROWS_AS(decompose(bad), NonPalindromic);
}

TEST_CASE("edge sequence needs a circular pair") {
    Field F(13, 1);
    SubgroupK sub = subgroup_k(F, 6);
    CHECK_THROWS_AS(edge_sequence(F, sub, F.one(), F.one()), NotCircular);
}

TEST_CASE("graph counts on GF(13), k = 4") {
    Field F(13, 1);
    SubgroupK sub = subgroup_k(F, 4);
    for (std::uint64_t n = 1; n < 13; ++n) {
        GammaPi gp = gamma_pi(F, sub, F.element_at(n));
        CHECK(gp.gamma == std::vector<unsigned>{1, 1});
        CHECK(gp.pi == std::vector<unsigned>{1, 1});
    }
}

TEST_CASE("graph counts on GF(31), k = 5") {
    Field F(31, 1);
    SubgroupK sub = subgroup_k(F, 5);
    GammaPi gp = gamma_pi(F, sub, F.one());
    CHECK(gp.gamma == std::vector<unsigned>{4, 4});
    CHECK(gp.pi == std::vector<unsigned>{0, 0});
}

TEST_CASE("dot rendering") {
    EdgeSequence e{4, {2, 1, 2}};
    std::string dot = dot_graph(e);
    CHECK(dot.find("graph edges_k4") != std::string::npos);
    CHECK(dot.find("v0 -- v1") != std::string::npos);
    CHECK(dot.find("v0 -- v2") != std::string::npos);
    CHECK(dot.find("v2 -- v0") == std::string::npos); // half-turn chord only once
}
