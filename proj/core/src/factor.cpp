#include "nearring/primes.hpp"

#include <algorithm>

namespace nearring {

namespace {

bool is_probable_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Brent's cycle-finding variant of Pollard rho with deterministic
// parameters; n odd composite, not a perfect power of a small prime.
mpz_class rho_factor(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        mpz_class x(2), y(2), d(1);
        mpz_class saved_y;
        unsigned long power = 1, lam = 0;
        auto step = [&](mpz_class& v) { v = (v * v + c) % n; };
        while (d == 1) {
            if (lam == power) {
                x = y;
                power *= 2;
                lam = 0;
            }
            // batch gcd over 128 steps
            mpz_class prod(1);
            saved_y = y;
            unsigned long batch = std::min<unsigned long>(128, power - lam);
            for (unsigned long i = 0; i < batch; ++i) {
                step(y);
                mpz_class diff = x - y;
                if (diff < 0) diff = -diff;
                if (diff != 0) prod = prod * diff % n;
            }
            lam += batch;
            d = gcd(prod, n);
            if (d == n) {
                // backtrack one step at a time
                y = saved_y;
                d = 1;
                for (unsigned long i = 0; i < batch && d == 1; ++i) {
                    step(y);
                    mpz_class diff = x - y;
                    if (diff < 0) diff = -diff;
                    d = diff == 0 ? n : gcd(diff, n);
                }
                if (d == n) break; // cycle degenerate for this c; retry
            }
        }
        if (d != n && d != 1) return d;
    }
}

void factor_rec(const mpz_class& n, std::vector<mpz_class>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.push_back(n);
        return;
    }
    mpz_class d = rho_factor(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::vector<mpz_class> factorize(const mpz_class& n_in) {
    if (n_in < 1) throw Error("factorize requires n >= 1");
    std::vector<mpz_class> out;
    mpz_class n = n_in;
    for (unsigned long p = 2; p <= 1000000UL && mpz_class(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            out.emplace_back(p);
            n /= p;
        }
    }
    factor_rec(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace nearring
