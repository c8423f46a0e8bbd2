#include "nearring/overlaps.hpp"

#include "nearring/designs.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nearring {

std::string Quad::to_string() const {
    std::ostringstream os;
    os << "(" << i << "," << j << "|" << s << "," << t << ")";
    return os.str();
}

PolyZ overlap_poly(const Quad& q, unsigned omega) {
    unsigned n = std::max(omega + q.j + q.s, q.t + q.i) + 1;
    std::vector<mpz_class> c(n, mpz_class(0));
    // x^w (x^j - 1)(x^s - 1)
    c[omega + q.j + q.s] += 1;
    c[omega + q.s] -= 1;
    c[omega + q.j] -= 1;
    c[omega] += 1;
    // - (x^i - 1)(x^t - 1)
    c[q.i + q.t] -= 1;
    c[q.t] += 1;
    c[q.i] += 1;
    c[0] -= 1;
    return PolyZ(std::move(c));
}

TrivialityVerdict triviality(const Quad& q, bool even_k, bool char2) {
    const unsigned k = q.k;
    const bool c2 = even_k || char2;
    if (q.i == q.s) return {TrivKind::IEqualsS, TrivCondition::Always};
    struct Side {
        unsigned a, b, c, d;
    };
    for (Side v : {Side{q.i, q.j, q.s, q.t}, Side{q.s, q.t, q.i, q.j}}) {
        if (v.b == v.a && v.d == v.c)
            return {TrivKind::JEqualsI, TrivCondition::Always};
        if (v.b == v.a && v.d == k - v.c && c2)
            return {TrivKind::JEqualsI, TrivCondition::EvenKOrChar2};
        if (v.c == k - v.a && v.d == v.b && c2 && 2 * v.b != k)
            return {TrivKind::SEqualsKMinusI, TrivCondition::EvenKOrChar2AndJNotHalfK};
        if (v.c == k - v.a && v.d == k - v.b && 2 * v.a != k)
            return {TrivKind::SEqualsKMinusI, TrivCondition::INotHalfK};
    }
    return {TrivKind::Nontrivial, TrivCondition::Always};
}

namespace {

// Index tuples of the eight dihedral symmetries acting on (i,j,s,t).
constexpr unsigned kPerms[8][4] = {
    {0, 1, 2, 3}, {3, 1, 2, 0}, {0, 2, 1, 3}, {3, 2, 1, 0},
    {2, 3, 0, 1}, {1, 0, 3, 2}, {1, 3, 0, 2}, {2, 0, 3, 1},
};

std::vector<Quad> raw_orbit(const Quad& q) {
    const unsigned k = q.k;
    const bool even_k = (k % 2 == 0);
    std::vector<Quad> out;
    out.reserve(128);
    unsigned base[4] = {q.i, q.j, q.s, q.t};
    for (unsigned mask = 0; mask < 16; ++mask) {
        if (!even_k && __builtin_popcount(mask) % 2 != 0) continue;
        unsigned f[4];
        for (unsigned idx = 0; idx < 4; ++idx)
            f[idx] = (mask >> idx) & 1 ? k - base[idx] : base[idx];
        for (const auto& p : kPerms) {
            Quad m{f[p[0]], f[p[1]], f[p[2]], f[p[3]], k};
            if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
        }
    }
    return out;
}

} // namespace

// Visit every orbit member (with repetition) until fn returns true.
template <class Fn>
static bool any_orbit_member(const Quad& q, Fn fn) {
    const unsigned k = q.k;
    const bool even_k = (k % 2 == 0);
    unsigned base[4] = {q.i, q.j, q.s, q.t};
    for (unsigned mask = 0; mask < 16; ++mask) {
        if (!even_k && __builtin_popcount(mask) % 2 != 0) continue;
        unsigned f[4];
        for (unsigned idx = 0; idx < 4; ++idx)
            f[idx] = (mask >> idx) & 1 ? k - base[idx] : base[idx];
        for (const auto& p : kPerms)
            if (fn(Quad{f[p[0]], f[p[1]], f[p[2]], f[p[3]], k})) return true;
    }
    return false;
}

bool orbit_trivial(const Quad& q, bool even_k, bool char2) {
    return any_orbit_member(q, [&](const Quad& m) {
        return m.i == m.s || m.s == m.t || triviality(m, even_k, char2).trivial();
    });
}

std::vector<Quad> orbit(const Quad& q) {
    if (orbit_trivial(q, q.k % 2 == 0, false)) throw TrivialInput(q.to_string());
    return raw_orbit(q);
}

Quad canonicalize(const Quad& q) {
    if (orbit_trivial(q, q.k % 2 == 0, false)) throw TrivialInput(q.to_string());
    Quad best = q;
    any_orbit_member(q, [&](const Quad& m) {
        if (m < best) best = m;
        return false;
    });
    return best;
}

Quad reduce_form(const Quad& q) {
    const unsigned k = q.k;
    auto orb = orbit(q);
    std::sort(orb.begin(), orb.end());
    for (const Quad& m : orb) {
        if (!(m.i < m.j && m.j <= m.s && 2 * m.j <= k)) continue;
        unsigned big = 0;
        for (unsigned u : {m.i, m.j, m.s, m.t})
            if (2 * u > k) ++big;
        if (k % 2 == 0 ? big == 0 : big <= 1) return m;
    }
    throw Error("no reduced orbit member for " + q.to_string());
}

std::optional<Quad> normalize(const Quad& q) {
    const unsigned k = q.k;
    if (k % 2 != 0) throw OddK("normalization requires even k");
    auto orb = orbit(q);
    std::sort(orb.begin(), orb.end());
    for (const Quad& m : orb)
        if (m.i < m.j && m.j <= m.s && m.s < m.t && 2 * m.t <= k) return m;
    return std::nullopt;
}

Rational omega_of(const Quad& q) {
    long num = static_cast<long>(q.t) + q.i - static_cast<long>(q.s) - q.j;
    return Rational(mpz_class(num), mpz_class(2));
}

std::string family_name(Family f) {
    switch (f) {
        case Family::O1: return "O1";
        case Family::O30: return "O30";
        case Family::O42: return "O42";
        case Family::O60: return "O60";
        case Family::Exceptional: return "exceptional";
        default: return "unclassified";
    }
}

std::string coset_key(const ComplexContext& ctx, unsigned i, unsigned j) {
    const unsigned k = ctx.k;
    CycNum num = CycNum::phi_power(k, j % k) - CycNum::one(k);
    CycNum den = CycNum::phi_power(k, i % k) - CycNum::one(k);
    CycNum c = num * den.inverse();
    CycNum best = c;
    CycNum cur = c;
    CycNum phi = CycNum::phi_power(k, 1);
    for (unsigned w = 1; w < k; ++w) {
        cur = cur * phi;
        if (cur < best) best = cur;
    }
    return best.to_string();
}

std::string coset_key(const FieldContext& ctx, unsigned i, unsigned j) {
    const Field& F = *ctx.field;
    FieldElem num = F.sub(F.pow(ctx.phi, j), F.one());
    FieldElem den = F.sub(F.pow(ctx.phi, i), F.one());
    FieldElem c = F.mul(num, F.inv(den));
    FieldElem best = c;
    FieldElem cur = c;
    for (unsigned w = 1; w < ctx.k; ++w) {
        cur = F.mul(cur, ctx.phi);
        if (cur < best) best = cur;
    }
    return to_string(best);
}

namespace {

template <class WitnessFn, class KeyFn>
std::vector<OverlapClass> enumerate_by_buckets(unsigned k, bool even_k, bool char2,
                                               KeyFn key_of, WitnessFn witnesses_of) {
    std::map<std::string, std::vector<std::pair<unsigned, unsigned>>> buckets;
    for (unsigned i = 1; i < k; ++i)
        for (unsigned j = 1; j < k; ++j) buckets[key_of(i, j)].push_back({i, j});

    std::map<Quad, std::vector<unsigned>> classes;
    for (const auto& [key, pairs] : buckets) {
        for (std::size_t a = 0; a < pairs.size(); ++a) {
            for (std::size_t b = a + 1; b < pairs.size(); ++b) {
                Quad q{pairs[a].first, pairs[a].second, pairs[b].first, pairs[b].second, k};
                if (orbit_trivial(q, even_k, char2)) continue;
                Quad cq = canonicalize(q);
                if (classes.count(cq)) continue;
                classes.emplace(cq, witnesses_of(cq));
            }
        }
    }
    std::vector<OverlapClass> out;
    out.reserve(classes.size());
    for (auto& [cq, wit] : classes) out.push_back({cq, std::move(wit), Family::Unclassified});
    return out;
}

std::vector<unsigned> complex_witnesses(const Quad& q) {
    std::vector<unsigned> wit;
    for (unsigned w = 0; w < q.k; ++w)
        if (reduce(overlap_poly(q, w), q.k).is_zero()) wit.push_back(w);
    return wit;
}

} // namespace

std::vector<OverlapClass> enumerate_overlaps(const ComplexContext& ctx) {
    const unsigned k = ctx.k;
    return enumerate_by_buckets(
        k, k % 2 == 0, false,
        [&](unsigned i, unsigned j) { return coset_key(ctx, i, j); },
        complex_witnesses);
}

std::vector<OverlapClass> enumerate_overlaps(const FieldContext& ctx) {
    const Field& F = *ctx.field;
    const unsigned k = ctx.k;
    if (k == 0 || (F.order() - 1) % k != 0)
        throw KNotDividingQMinus1("k does not divide q-1");
    if (F.mul_order(ctx.phi) != k) throw NoSuchOrder("generator does not have order k");
    if (!circularity_check(F, k))
        throw NotCircular("(" + std::to_string(F.order()) + "," + std::to_string(k) +
                          ") is not circular");
    auto field_witnesses = [&](const Quad& q) {
        std::vector<unsigned> wit;
        for (unsigned w = 0; w < k; ++w) {
            // evaluate f_{i,j,s,t,w} at phi; exponents taken mod k
            FieldElem v = F.zero();
            const std::pair<unsigned, int> terms[] = {
                {w + q.j + q.s, 1}, {w + q.s, -1}, {w + q.j, -1}, {w, 1},
                {q.i + q.t, -1},    {q.t, 1},      {q.i, 1},      {0, -1},
            };
            for (auto [e, sgn] : terms) {
                FieldElem pe = F.pow(ctx.phi, e % k);
                v = sgn > 0 ? F.add(v, pe) : F.sub(v, pe);
            }
            if (F.is_zero(v)) wit.push_back(w);
        }
        return wit;
    };
    return enumerate_by_buckets(
        k, k % 2 == 0, F.p() == 2,
        [&](unsigned i, unsigned j) { return coset_key(ctx, i, j); },
        field_witnesses);
}

std::vector<OverlapClass> enumerate_overlaps_direct(const ComplexContext& ctx) {
    const unsigned k = ctx.k;
    const bool even_k = (k % 2 == 0);
    std::map<Quad, std::vector<unsigned>> classes;
    for (unsigned i = 1; i < k; ++i)
        for (unsigned j = 1; j < k; ++j)
            for (unsigned s = 1; s < k; ++s)
                for (unsigned t = 1; t < k; ++t) {
                    Quad q{i, j, s, t, k};
                    if (orbit_trivial(q, even_k, false)) continue;
                    bool hit = false;
                    for (unsigned w = 0; w < k && !hit; ++w)
                        hit = reduce(overlap_poly(q, w), k).is_zero();
                    if (!hit) continue;
                    Quad cq = canonicalize(q);
                    if (!classes.count(cq)) classes.emplace(cq, complex_witnesses(cq));
                }
    std::vector<OverlapClass> out;
    for (auto& [cq, wit] : classes) out.push_back({cq, std::move(wit), Family::Unclassified});
    return out;
}

} // namespace nearring
