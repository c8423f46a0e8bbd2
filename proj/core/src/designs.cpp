#include "nearring/designs.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace nearring {

SubgroupK subgroup_k(const Field& field, unsigned k) {
    return subgroup_k(field, k, element_of_order(field, k));
}

SubgroupK subgroup_k(const Field& field, unsigned k, const FieldElem& gen) {
    if (field.mul_order(gen) != k) throw NoSuchOrder("generator does not have order k");
    SubgroupK sub;
    sub.k = k;
    sub.gen = gen;
    sub.elems.reserve(k);
    FieldElem cur = field.one();
    for (unsigned e = 0; e < k; ++e) {
        sub.elems.push_back(cur);
        cur = field.mul(cur, gen);
    }
    return sub;
}

bool circularity_check(const Field& field, unsigned k) {
    if (k == 0 || (field.order() - 1) % k != 0)
        throw KNotDividingQMinus1("k does not divide q-1");
    // cache: circularity depends only on (q, k)
    static std::map<std::pair<std::uint64_t, unsigned>, bool> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find({field.order(), k});
        if (it != cache.end()) return it->second;
    }
    FieldElem phi = element_of_order(field, k);
    std::vector<FieldElem> pw(k);
    for (unsigned e = 0; e < k; ++e) pw[e] = field.pow(phi, e);
    bool ok = true;
    for (unsigned i = 1; i < k && ok; ++i)
        for (unsigned j = 1; j < k && ok; ++j)
            for (unsigned s = 1; s < k && ok; ++s)
                for (unsigned t = 1; t < k && ok; ++t) {
                    if (i == s && j == t) continue;
                    if (i == j && s == t) continue;
                    // (phi^i - 1)(phi^t - 1) - (phi^j - 1)(phi^s - 1)
                    FieldElem a = field.mul(field.sub(pw[i], field.one()),
                                            field.sub(pw[t], field.one()));
                    FieldElem b = field.mul(field.sub(pw[j], field.one()),
                                            field.sub(pw[s], field.one()));
                    if (a == b) ok = false;
                }
    std::lock_guard<std::mutex> lock(mtx);
    cache[{field.order(), k}] = ok;
    return ok;
}

Circle circle(const Field& field, const SubgroupK& phi, const FieldElem& r,
              const FieldElem& c) {
    if (field.is_zero(r)) throw ZeroRadius("circle radius must be nonzero");
    Circle out;
    out.r = r;
    out.c = c;
    out.points.reserve(phi.k);
    for (const FieldElem& lam : phi.elems) out.points.push_back(field.add(field.mul(lam, r), c));
    std::sort(out.points.begin(), out.points.end());
    return out;
}

EdgeSequence edge_sequence(const Field& field, const SubgroupK& phi, const FieldElem& r,
                           const FieldElem& c) {
    if (field.is_zero(r) || field.is_zero(c)) throw ZeroInput("r and c must be nonzero");
    if (!circularity_check(field, phi.k)) throw NotCircular("pair is not circular");
    const unsigned k = phi.k;
    Circle base = circle(field, phi, r, c);
    EdgeSequence e;
    e.k = k;
    e.eps.resize(k - 1);
    for (unsigned j = 1; j < k; ++j) {
        Circle shifted = circle(field, phi, r, field.mul(phi.elems[j], c));
        std::vector<FieldElem> inter;
        std::set_intersection(base.points.begin(), base.points.end(), shifted.points.begin(),
                              shifted.points.end(), std::back_inserter(inter));
        e.eps[j - 1] = static_cast<unsigned>(inter.size());
    }
    return e;
}

std::vector<BasicGraph> decompose(const EdgeSequence& e) {
    const unsigned k = e.k;
    for (unsigned j = 1; j < k; ++j)
        if (e.eps[j - 1] != e.eps[k - j - 1])
            throw NonPalindromic("edge sequence is not palindromic");
    std::vector<BasicGraph> out;
    for (unsigned j = 1; 2 * j <= k; ++j) {
        if (e.eps[j - 1] == 1) out.push_back({j, Parity::Odd});
        else if (e.eps[j - 1] == 2) out.push_back({j, Parity::Even});
    }
    return out;
}

FieldElem c_ij(const Field& field, const FieldElem& phi, unsigned i, unsigned j) {
    FieldElem num = field.sub(field.pow(phi, j), field.one());
    FieldElem den = field.sub(field.pow(phi, i), field.one());
    return field.mul(field.inv(den), num);
}

GammaPi gamma_pi(const Field& field, const SubgroupK& phi, const FieldElem& r) {
    if (field.is_zero(r)) throw ZeroRadius("r must be nonzero");
    if (!circularity_check(field, phi.k)) throw NotCircular("pair is not circular");
    const unsigned k = phi.k;
    // M_r: one representative per coset Phi*c, c = c_{i,j}; key by the
    // minimal coset element under the field-element order
    std::map<FieldElem, FieldElem> reps;
    for (unsigned i = 1; i < k; ++i)
        for (unsigned j = 1; j < k; ++j) {
            FieldElem c = c_ij(field, phi.gen, i, j);
            FieldElem key = c;
            for (const FieldElem& lam : phi.elems) {
                FieldElem v = field.mul(lam, c);
                if (v < key) key = v;
            }
            reps.emplace(key, c);
        }
    GammaPi out;
    out.gamma.assign(k / 2, 0);
    out.pi.assign(k / 2, 0);
    for (const auto& [key, c] : reps) {
        for (const BasicGraph& g : decompose(edge_sequence(field, phi, r, c))) {
            if (g.parity == Parity::Odd) ++out.gamma[g.index - 1];
            else ++out.pi[g.index - 1];
        }
    }
    return out;
}

std::string dot_graph(const EdgeSequence& e) {
    const unsigned k = e.k;
    std::ostringstream os;
    os << "graph edges_k" << k << " {\n  layout=circo;\n";
    for (unsigned v = 0; v < k; ++v) os << "  v" << v << ";\n";
    for (unsigned j = 1; 2 * j <= k; ++j) {
        if (e.eps[j - 1] == 0) continue;
        for (unsigned v = 0; v < k; ++v) {
            unsigned w = (v + j) % k;
            if (2 * j == k && w < v) continue; // half-turn chords once
            os << "  v" << v << " -- v" << w << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace nearring
