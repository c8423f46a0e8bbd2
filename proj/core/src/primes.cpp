#include "nearring/primes.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace nearring {

namespace {

constexpr std::uint64_t kDefaultMaxWork = 1'000'000'000ULL;

std::uint64_t effective_max_work(std::uint64_t requested) {
    if (requested) return requested;
    if (const char* env = std::getenv("NEARRING_MAX_WORK")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultMaxWork;
}

// Power table: row n holds the coefficients of x^n mod Phi_k.  Cyclotomic
// coefficients stay tiny for the k in scope, so plain 64-bit entries suffice.
struct PowTable {
    unsigned k, deg;
    std::vector<long> phi;               // deg+1 coefficients, monic
    std::vector<std::vector<long>> row;  // k rows of deg entries

    explicit PowTable(unsigned k_) : k(k_) {
        const PolyZ& p = cyclotomic_poly(k);
        deg = static_cast<unsigned>(p.degree());
        phi.resize(deg + 1);
        for (unsigned i = 0; i <= deg; ++i) phi[i] = p.coeff(i).get_si();
        row.assign(k, std::vector<long>(deg, 0));
        std::vector<long> cur(deg, 0);
        cur[0] = 1;
        for (unsigned n = 0; n < k; ++n) {
            row[n] = cur;
            // multiply by x, reduce by the monic modulus
            long top = deg > 0 ? cur[deg - 1] : 0;
            for (unsigned i = deg; i-- > 1;) cur[i] = cur[i - 1] - top * phi[i];
            cur[0] = -top * phi[0];
        }
    }

    // residue of f_{i,j,s,t,w}(x^d) mod Phi_k via exponent remapping
    void conj_residue(const Quad& q, unsigned w, unsigned d, std::vector<long>& out) const {
        std::fill(out.begin(), out.end(), 0L);
        const std::pair<unsigned, int> terms[8] = {
            {w + q.j + q.s, 1}, {w + q.s, -1}, {w + q.j, -1}, {w, 1},
            {q.i + q.t, -1},    {q.t, 1},      {q.i, 1},      {0, -1},
        };
        for (auto [e, sgn] : terms) {
            const std::vector<long>& r = row[(static_cast<std::uint64_t>(d) * e) % k];
            if (sgn > 0)
                for (unsigned i = 0; i < deg; ++i) out[i] += r[i];
            else
                for (unsigned i = 0; i < deg; ++i) out[i] -= r[i];
        }
    }

    mpz_class norm(const Quad& q, unsigned w, const std::vector<unsigned>& units) const {
        std::vector<long> res(deg);
        std::vector<mpz_class> acc(deg), tmp(2 * deg - 1);
        conj_residue(q, w, units[0], res);
        for (unsigned i = 0; i < deg; ++i) acc[i] = res[i];
        for (std::size_t u = 1; u < units.size(); ++u) {
            conj_residue(q, w, units[u], res);
            for (auto& t : tmp) t = 0;
            for (unsigned i = 0; i < deg; ++i) {
                if (acc[i] == 0) continue;
                for (unsigned j = 0; j < deg; ++j)
                    if (res[j] != 0) tmp[i + j] += acc[i] * res[j];
            }
            for (unsigned n = 2 * deg - 1; n-- > deg;) {
                if (tmp[n] == 0) continue;
                mpz_class qq = tmp[n];
                tmp[n] = 0;
                for (unsigned i = 0; i < deg; ++i)
                    if (phi[i]) tmp[n - deg + i] -= qq * phi[i];
            }
            for (unsigned i = 0; i < deg; ++i) acc[i] = tmp[i];
        }
        for (unsigned i = 1; i < deg; ++i)
            if (acc[i] != 0) throw NonRationalProduct("norm product not rational");
        return acc[0];
    }
};

std::vector<unsigned> units_mod(unsigned k) {
    std::vector<unsigned> u;
    for (unsigned d = 1; d < std::max(k, 2u); ++d)
        if (std::gcd(d, k) == 1) u.push_back(d);
    return u;
}

void add_prime(PrimeSetReport& rep, const mpz_class& p, const Quad& q, unsigned w,
               const mpz_class& n) {
    auto& wit = rep.provenance[p];
    if (!wit.empty() && wit.back() == NormWitness{q, w, n}) return;
    if (wit.size() < 3) wit.push_back({q, w, n});
}

void merge_into(PrimeSetReport& dst, const PrimeSetReport& src) {
    for (const auto& [p, wit] : src.provenance) {
        auto& d = dst.provenance[p];
        for (const auto& w : wit)
            if (d.size() < 3) d.push_back(w);
    }
    if (src.max_abs_norm > dst.max_abs_norm) dst.max_abs_norm = src.max_abs_norm;
}

void finalize(PrimeSetReport& rep, unsigned k) {
    unsigned n = k;
    for (unsigned p = 2; p <= n; ++p) {
        if (n % p == 0) {
            rep.from_k.insert(mpz_class(p));
            while (n % p == 0) n /= p;
        }
    }
    std::set<mpz_class> all(rep.from_k);
    for (const auto& [p, wit] : rep.provenance) all.insert(p);
    rep.primes.assign(all.begin(), all.end());
}

bool is_raw_orbit_min(const Quad& q) {
    const unsigned k = q.k;
    const bool even_k = (k % 2 == 0);
    unsigned base[4] = {q.i, q.j, q.s, q.t};
    static constexpr unsigned perms[8][4] = {
        {0, 1, 2, 3}, {3, 1, 2, 0}, {0, 2, 1, 3}, {3, 2, 1, 0},
        {2, 3, 0, 1}, {1, 0, 3, 2}, {1, 3, 0, 2}, {2, 0, 3, 1},
    };
    for (unsigned mask = 0; mask < 16; ++mask) {
        if (!even_k && __builtin_popcount(mask) % 2 != 0) continue;
        unsigned f[4];
        for (unsigned idx = 0; idx < 4; ++idx)
            f[idx] = (mask >> idx) & 1 ? k - base[idx] : base[idx];
        for (const auto& p : perms) {
            Quad m{f[p[0]], f[p[1]], f[p[2]], f[p[3]], k};
            if (m < q) return false;
        }
    }
    return true;
}

template <class ProcessQuad>
void parallel_quads(unsigned k, unsigned threads, ProcessQuad process,
                    std::vector<PrimeSetReport>& partials) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, k - 1);
    partials.assign(threads, PrimeSetReport{});
    std::vector<std::thread> pool;
    for (unsigned tix = 0; tix < threads; ++tix) {
        pool.emplace_back([&, tix] {
            for (unsigned i = 1 + tix; i < k; i += threads)
                for (unsigned j = 1; j < k; ++j)
                    for (unsigned s = 1; s < k; ++s)
                        for (unsigned t = 1; t < k; ++t)
                            process(Quad{i, j, s, t, k}, partials[tix]);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace

mpz_class quad_norm(const Quad& q, unsigned omega) {
    PowTable tab(q.k);
    return tab.norm(q, omega, units_mod(q.k));
}

PrimeSetReport circularity_primes(unsigned k, const PrimeSearchOptions& opt) {
    if (k < 3) throw Error("k must be >= 3");
    const std::uint64_t limit = effective_max_work(opt.max_work);
    const unsigned phi = euler_phi(k);
    const std::uint64_t est = static_cast<std::uint64_t>(k - 1) * (k - 1) * (k - 1) * (k - 1) *
                              phi * phi;
    if (est > limit)
        throw WorkLimitExceeded("estimated work " + std::to_string(est) + " exceeds limit " +
                                std::to_string(limit));

    PowTable tab(k);
    auto units = units_mod(k);
    std::vector<PrimeSetReport> partials;
    parallel_quads(k, opt.threads, [&](const Quad& q, PrimeSetReport& rep) {
        // index set I: (i,j) != (s,t) and (i,s) != (j,t)
        if (q.i == q.s && q.j == q.t) return;
        if (q.i == q.j && q.s == q.t) return;
        mpz_class n = tab.norm(q, 0, units);
        if (n == 0) return;
        mpz_class a = abs(n);
        if (a > rep.max_abs_norm) rep.max_abs_norm = a;
        for (const mpz_class& p : factorize(a))
            add_prime(rep, p, q, 0, n);
    }, partials);

    PrimeSetReport rep;
    rep.k = k;
    for (const auto& part : partials) merge_into(rep, part);
    finalize(rep, k);
    return rep;
}

PrimeSetReport exceptional_primes(unsigned k, const PrimeSearchOptions& opt) {
    if (k < 3) throw Error("k must be >= 3");
    const std::uint64_t limit = effective_max_work(opt.max_work);
    const unsigned phi = euler_phi(k);
    const std::uint64_t est = static_cast<std::uint64_t>(k - 1) * (k - 1) * (k - 1) * (k - 1) *
                              k * phi * phi / (opt.dedupe ? 64 : 1);
    if (est > limit)
        throw WorkLimitExceeded("estimated work " + std::to_string(est) + " exceeds limit " +
                                std::to_string(limit));

    const bool even_k = (k % 2 == 0);
    PowTable tab(k);
    auto units = units_mod(k);
    std::vector<PrimeSetReport> partials;
    parallel_quads(k, opt.threads, [&](const Quad& q, PrimeSetReport& rep) {
        // trivial under char2=false implies trivial under char2=true as well
        const bool triv_char2 = orbit_trivial(q, even_k, true);
        const bool triv_plain = even_k ? triv_char2 : orbit_trivial(q, even_k, false);
        if (triv_plain && triv_char2) return;
        if (opt.dedupe && !triv_char2 && !is_raw_orbit_min(q)) return;
        for (unsigned w = 0; w < k; ++w) {
            mpz_class n = tab.norm(q, w, units);
            if (n == 0) continue;
            mpz_class a = abs(n);
            if (a > rep.max_abs_norm) rep.max_abs_norm = a;
            for (const mpz_class& p : factorize(a)) {
                const bool trivial_here = (p == 2) ? triv_char2 : triv_plain;
                if (!trivial_here) add_prime(rep, p, q, w, n);
            }
        }
    }, partials);

    PrimeSetReport rep;
    rep.k = k;
    for (const auto& part : partials) merge_into(rep, part);
    finalize(rep, k);
    return rep;
}

} // namespace nearring
