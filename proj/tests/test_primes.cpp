#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nearring/primes.hpp>

using namespace nearring;

namespace {
std::vector<mpz_class> zv(std::initializer_list<long> xs) {
    return std::vector<mpz_class>(xs.begin(), xs.end());
}
} // namespace

TEST_CASE("factorize") {
    CHECK(factorize(1).empty());
    CHECK(factorize(360) == zv({2, 2, 2, 3, 3, 5}));
    CHECK(factorize(1009) == zv({1009}));
    // beyond the trial-division bound: product of two 9-digit primes
    mpz_class a("998244353"), b("1000000007");
    auto f = factorize(a * b);
    CHECK(f == std::vector<mpz_class>{a, b});
    CHECK_THROWS(factorize(0));
}

TEST_CASE("norms of overlap polynomials") {
    // (1,2|2,4) at k = 5 has |N| = 5^3 at omega = 0
    CHECK(quad_norm(Quad{1, 2, 2, 4, 5}, 0) == 125);
    // overlap witness gives a vanishing norm
    CHECK(quad_norm(Quad{1, 2, 2, 5, 12}, 1) == 0);
}

TEST_CASE("exceptional primes match the known small sets") {
    CHECK(exceptional_primes(4).primes == zv({2, 3, 5}));
    CHECK(exceptional_primes(5).primes == zv({5, 11}));
    CHECK(exceptional_primes(6).primes == zv({2, 3, 5, 7, 13, 19, 31, 37}));
    CHECK(exceptional_primes(7).primes == zv({2, 7, 13, 29, 43, 71}));
    CHECK(exceptional_primes(8).primes == zv({2, 3, 5, 7, 13, 17, 41, 73, 89, 97, 113}));
}

TEST_CASE("circularity primes match the known small sets") {
    CHECK(circularity_primes(4).primes == zv({2, 5}));
    CHECK(circularity_primes(5).primes == zv({5, 11}));
    CHECK(circularity_primes(6).primes == zv({2, 3, 7, 13, 19}));
    CHECK(circularity_primes(7).primes == zv({2, 7, 29, 43}));
    CHECK(circularity_primes(8).primes == zv({2, 3, 5, 17, 41}));
}

TEST_CASE("provenance witnesses recompute") {
    auto rep = exceptional_primes(7);
    CHECK(rep.from_k == std::set<mpz_class>{7});
    for (const auto& [p, wits] : rep.provenance) {
        CHECK(!wits.empty());
        CHECK(wits.size() <= 3);
        for (const auto& w : wits) {
            CHECK(w.norm_value == quad_norm(w.quad, w.omega));
            CHECK(w.norm_value % p == 0);
        }
    }
}

TEST_CASE("orbit deduplication does not change the result") {
    for (unsigned k : {7u, 9u, 10u, 12u}) {
        auto full = exceptional_primes(k);
        PrimeSearchOptions opt;
        opt.dedupe = true;
        auto fast = exceptional_primes(k, opt);
        CHECK(full.primes == fast.primes);
    }
}

TEST_CASE("work guard") {
    PrimeSearchOptions opt;
    opt.max_work = 10;
    CHECK_THROWS_AS(exceptional_primes(12, opt), WorkLimitExceeded);
    CHECK_THROWS_AS(circularity_primes(12, opt), WorkLimitExceeded);
}
