#include "nearring/classification.hpp"

#include <algorithm>
#include <map>

namespace nearring {

namespace {

struct Generator {
    unsigned i, j, s, t;
    unsigned omega; // in units of the scale factor
};

// Generator lists for the sporadic families, in normalized form, scaled by k/N.
constexpr Generator kList30[] = {
    {1, 3, 3, 11, 3}, {3, 5, 5, 9, 1},   {7, 9, 9, 13, 1},
    {1, 2, 4, 9, 2},  {2, 3, 5, 8, 1},   {8, 9, 11, 14, 1},
    {2, 3, 7, 14, 3}, {3, 4, 8, 13, 2},  {4, 5, 9, 14, 2},
};
constexpr Generator kList42[] = {
    {2, 3, 9, 16, 3}, {3, 4, 10, 15, 2}, {8, 9, 15, 20, 2},
};
constexpr Generator kList60[] = {
    {3, 4, 16, 27, 5}, {5, 6, 18, 25, 3}, {8, 9, 21, 28, 3},
};

void add_class(std::map<Quad, PredictedClass>& acc, const Quad& q, Family fam, unsigned omega) {
    Quad cq = canonicalize(q);
    auto [it, inserted] = acc.try_emplace(cq, PredictedClass{cq, {}, omega});
    it->second.families.insert(fam);
}

} // namespace

PredictedSet predicted_set(unsigned k) {
    if (k % 2 != 0) throw OddK("predicted_set requires even k");
    std::map<Quad, PredictedClass> acc;
    if (k % 6 == 0) {
        unsigned l = k / 6;
        for (unsigned u = 1; u <= k / 4; ++u) {
            if (u == l) continue;
            add_class(acc, Quad{u, l, 2 * u, 3 * l - u, k}, Family::O1, l > u ? l - u : 0);
        }
    }
    auto add_list = [&](const Generator* list, std::size_t n, unsigned scale, Family fam) {
        for (std::size_t r = 0; r < n; ++r) {
            const Generator& g = list[r];
            add_class(acc,
                      Quad{g.i * scale, g.j * scale, g.s * scale, g.t * scale, k},
                      fam, g.omega * scale);
        }
    };
    if (k % 30 == 0) add_list(kList30, std::size(kList30), k / 30, Family::O30);
    if (k % 42 == 0) add_list(kList42, std::size(kList42), k / 42, Family::O42);
    if (k % 60 == 0) add_list(kList60, std::size(kList60), k / 60, Family::O60);

    PredictedSet out{k, {}};
    out.classes.reserve(acc.size());
    for (auto& [q, pc] : acc) out.classes.push_back(pc);
    return out;
}

VerificationReport verify_classification(unsigned k) {
    VerificationReport rep;
    rep.k = k;
    rep.predicted = k % 2 == 0 ? predicted_set(k) : PredictedSet{k, {}};
    rep.found = enumerate_overlaps(ComplexContext{k});
    label_families(rep.found, k);

    std::set<Quad> pred, found;
    for (const auto& pc : rep.predicted.classes) pred.insert(pc.canonical);
    for (const auto& oc : rep.found) found.insert(oc.canonical);
    std::set_difference(pred.begin(), pred.end(), found.begin(), found.end(),
                        std::back_inserter(rep.missing));
    std::set_difference(found.begin(), found.end(), pred.begin(), pred.end(),
                        std::back_inserter(rep.extra));
    rep.pass = rep.missing.empty() && rep.extra.empty();
    return rep;
}

void label_families(std::vector<OverlapClass>& classes, unsigned k) {
    std::map<Quad, std::set<Family>> pred;
    if (k % 2 == 0)
        for (const auto& pc : predicted_set(k).classes) pred[pc.canonical] = pc.families;
    for (auto& oc : classes) {
        auto it = pred.find(oc.canonical);
        oc.family = it == pred.end() ? Family::Exceptional : *it->second.begin();
    }
}

namespace {

constexpr Generator kTriples[5][3] = {
    {{3, 5, 5, 9, 0}, {5, 9, 6, 12, 0}, {3, 5, 6, 12, 0}},
    {{1, 2, 4, 9, 0}, {4, 9, 5, 14, 0}, {1, 2, 5, 14, 0}},
    {{2, 3, 5, 8, 0}, {5, 8, 7, 14, 0}, {2, 3, 7, 14, 0}},
    {{2, 5, 3, 8, 0}, {3, 8, 4, 13, 0}, {2, 5, 4, 13, 0}},
    {{4, 5, 8, 11, 0}, {8, 11, 9, 14, 0}, {4, 5, 9, 14, 0}},
};

std::optional<unsigned> triple_label(const TripleOverlap& t, unsigned k) {
    if (k % 30 != 0) return std::nullopt;
    unsigned l = k / 30;
    for (unsigned r = 0; r < 5; ++r) {
        const Generator& g = kTriples[r][0];
        const Generator& h = kTriples[r][1];
        if (t.a == PairST{g.i * l, g.j * l} && t.b == PairST{g.s * l, g.t * l} &&
            t.c == PairST{h.s * l, h.t * l})
            return r + 1;
    }
    return std::nullopt;
}

} // namespace

std::vector<TripleOverlap> find_triples(const std::vector<OverlapClass>& classes, unsigned k) {
    std::set<Quad> canon_set;
    for (const auto& oc : classes) canon_set.insert(oc.canonical);
    std::vector<TripleOverlap> out;
    if (canon_set.empty()) return out;
    const bool even_k = (k % 2 == 0);
    const unsigned half = k / 2;

    // vertices: pairs (s,t), s != t, entries in 1..k/2
    std::vector<PairST> verts;
    for (unsigned s = 1; s <= half; ++s)
        for (unsigned t = 1; t <= half; ++t)
            if (s != t) verts.push_back({s, t});

    auto overlapping = [&](const PairST& a, const PairST& b) {
        Quad q{a.s, a.t, b.s, b.t, k};
        if (orbit_trivial(q, even_k, false)) return false;
        return canon_set.count(canonicalize(q)) != 0;
    };

    const std::size_t n = verts.size();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (overlapping(verts[a], verts[b])) adj[a][b] = adj[b][a] = true;

    // Exhaustive triangle scan over the adjacency relation; nothing is
    // pruned, so no triple can be missed.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!adj[a][b]) continue;
            for (std::size_t c = b + 1; c < n; ++c) {
                if (!adj[a][c] || !adj[b][c]) continue;
                PairST v[3] = {verts[a], verts[b], verts[c]};
                std::sort(v, v + 3);
                // normalized: s1 < s2 < s3 and s1 < t1
                if (v[0].s >= v[1].s || v[1].s >= v[2].s) continue;
                if (v[0].s >= v[0].t) continue;
                TripleOverlap t{v[0], v[1], v[2], std::nullopt};
                t.label = triple_label(t, k);
                if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::array<PairST, 4>> find_quadruple_overlaps(
    const std::vector<OverlapClass>& classes, unsigned k) {
    std::set<Quad> canon_set;
    for (const auto& oc : classes) canon_set.insert(oc.canonical);
    std::vector<std::array<PairST, 4>> out;
    if (canon_set.empty()) return out;
    const bool even_k = (k % 2 == 0);
    const unsigned half = k / 2;

    std::vector<PairST> verts;
    for (unsigned s = 1; s <= half; ++s)
        for (unsigned t = 1; t <= half; ++t)
            if (s != t) verts.push_back({s, t});

    const std::size_t n = verts.size();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            Quad q{verts[a].s, verts[a].t, verts[b].s, verts[b].t, k};
            if (!orbit_trivial(q, even_k, false) && canon_set.count(canonicalize(q)))
                adj[a][b] = adj[b][a] = true;
        }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!adj[a][b]) continue;
            for (std::size_t c = b + 1; c < n; ++c) {
                if (!adj[a][c] || !adj[b][c]) continue;
                for (std::size_t d = c + 1; d < n; ++d)
                    if (adj[a][d] && adj[b][d] && adj[c][d])
                        out.push_back({verts[a], verts[b], verts[c], verts[d]});
            }
        }
    return out;
}

} // namespace nearring
