#ifndef NEARRING_PRIMES_HPP
#define NEARRING_PRIMES_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "nearring/overlaps.hpp"

namespace nearring {

// One recorded reason a prime belongs to a prime set.
struct NormWitness {
    Quad quad;
    unsigned omega;
    mpz_class norm_value;
    bool operator==(const NormWitness&) const = default;
};

struct PrimeSetReport {
    unsigned k = 0;
    std::vector<mpz_class> primes;                      // sorted, deduplicated
    std::set<mpz_class> from_k;                         // primes included as divisors of k
    std::map<mpz_class, std::vector<NormWitness>> provenance; // up to 3 witnesses per prime
    mpz_class max_abs_norm{0};                          // largest |norm| encountered
};

struct PrimeSearchOptions {
    unsigned threads = 0;        // 0: hardware concurrency
    std::uint64_t max_work = 0;  // 0: NEARRING_MAX_WORK env var, else built-in default
    bool dedupe = false;         // process only one quadruple per orbit
};

// Primes p for which some (GF(q), k) with p | q fails circularity: the prime
// divisors of k together with the prime divisors of the nonzero norms
// N(f_{i,j,s,t,0}(phi)) over the index set I = {(i,j) != (s,t), (i,s) != (j,t)}.
PrimeSetReport circularity_primes(unsigned k, const PrimeSearchOptions& opt = {});

// Primes p for which the overlap set over GF(q), p | q, can differ from the
// complex one: prime divisors of k together with the prime divisors of
// nonzero norms N(f_{i,j,s,t,omega}(phi)) over quadruples that are
// orbit-nontrivial for that characteristic (char2 flag set per divisor prime).
PrimeSetReport exceptional_primes(unsigned k, const PrimeSearchOptions& opt = {});

// Complete factorization; prime factors with multiplicity, sorted.
// Trial division to 10^6, then Pollard rho (Brent variant).
std::vector<mpz_class> factorize(const mpz_class& n);

// Norm of f_{i,j,s,t,omega}(phi) over Q(phi_k), computed by the fast
// conjugate-product path (exponent remapping on a power table).
mpz_class quad_norm(const Quad& q, unsigned omega);

} // namespace nearring

#endif
