#ifndef NEARRING_DESIGNS_HPP
#define NEARRING_DESIGNS_HPP

#include <string>
#include <vector>

#include "nearring/fields.hpp"

namespace nearring {

// The multiplicative subgroup of order k, listed as powers of a generator.
struct SubgroupK {
    unsigned k = 0;
    FieldElem gen;
    std::vector<FieldElem> elems; // gen^0, gen^1, ..., gen^{k-1}
};

// Builds the order-k subgroup from the first order-k element in
// enumeration order.  Throws NoSuchOrder when k does not divide q-1.
SubgroupK subgroup_k(const Field& field, unsigned k);
SubgroupK subgroup_k(const Field& field, unsigned k, const FieldElem& gen);

// True iff f_{i,j,s,t,0}(phi) != 0 for every (i,j,s,t) with
// (i,j) != (s,t) and (i,s) != (j,t); independent of generator choice.
// Throws KNotDividingQMinus1.
bool circularity_check(const Field& field, unsigned k);

// The k-point block Phi*r + c.
struct Circle {
    FieldElem r, c;
    std::vector<FieldElem> points; // sorted
};

Circle circle(const Field& field, const SubgroupK& phi, const FieldElem& r,
              const FieldElem& c); // throws ZeroRadius

// eps[j-1] = |(Phi r + c) intersect (Phi r + phi^j c)| for j = 1..k-1.
// Palindromic with values in {0,1,2} over circular pairs.
struct EdgeSequence {
    unsigned k = 0;
    std::vector<unsigned> eps;
};

EdgeSequence edge_sequence(const Field& field, const SubgroupK& phi, const FieldElem& r,
                           const FieldElem& c); // throws ZeroInput, NotCircular

// Basic circulant graphs on k vertices: index j in 1..floor(k/2); an odd
// basic graph (one edge orbit, eps = 1) or an even one (two, eps = 2).
enum class Parity { Odd, Even };

struct BasicGraph {
    unsigned index;
    Parity parity;
    bool operator==(const BasicGraph&) const = default;
};

std::vector<BasicGraph> decompose(const EdgeSequence& e); // throws NonPalindromic

// c_{i,j} = (phi^i - 1)^{-1} (phi^j - 1)
FieldElem c_ij(const Field& field, const FieldElem& phi, unsigned i, unsigned j);

// Per-index counts of odd/even basic graphs spanning the graphs of the
// deduplicated block orbits M_r = {E^r_c : c = c_{i,j}}.
struct GammaPi {
    std::vector<unsigned> gamma, pi; // indexed 1..floor(k/2), stored from 0
};

GammaPi gamma_pi(const Field& field, const SubgroupK& phi, const FieldElem& r);

// DOT rendering of the union of basic graphs implied by an edge sequence.
std::string dot_graph(const EdgeSequence& e);

} // namespace nearring

#endif
