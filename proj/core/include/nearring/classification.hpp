#ifndef NEARRING_CLASSIFICATION_HPP
#define NEARRING_CLASSIFICATION_HPP

#include <array>
#include <optional>
#include <set>

#include "nearring/overlaps.hpp"

namespace nearring {

// One predicted class: canonical representative plus every family whose
// generator list produces it (families can collide after canonicalization).
struct PredictedClass {
    Quad canonical;
    std::set<Family> families;
    unsigned omega; // witness from the generating identity
    bool operator==(const PredictedClass&) const = default;
};

struct PredictedSet {
    unsigned k;
    std::vector<PredictedClass> classes; // sorted by canonical quad
};

// The classified overlap sets over the complex numbers:
//   O1  (6|k):  (u, l | 2u, 3l-u), 1 <= u <= floor(k/4), u != l = k/6
//   O30 (30|k), O42 (42|k), O60 (60|k): fixed generator lists scaled by k/N.
// Throws OddK for odd k.
PredictedSet predicted_set(unsigned k);

struct VerificationReport {
    unsigned k;
    PredictedSet predicted;
    std::vector<OverlapClass> found;
    std::vector<Quad> missing; // predicted but not found
    std::vector<Quad> extra;   // found but not predicted
    bool pass = false;
};

// Brute-force enumeration over the complex numbers compared against the
// predicted classification (odd k compared against the empty set).
VerificationReport verify_classification(unsigned k);

// Tags each enumerated class with its predicted family, or Exceptional
// when the class is not predicted for this k.
void label_families(std::vector<OverlapClass>& classes, unsigned k);

// A triple overlap (s1,t1 | s2,t2 | s3,t3): all three constituent
// quadruples (s1,t1|s2,t2), (s2,t2|s3,t3), (s1,t1|s3,t3) lie in the
// overlap set.
struct PairST {
    unsigned s, t;
    bool operator==(const PairST&) const = default;
    auto operator<=>(const PairST&) const = default;
};

struct TripleOverlap {
    PairST a, b, c;
    std::optional<unsigned> label; // 1..5 for the T1..T5 patterns
    bool operator==(const TripleOverlap&) const = default;
    auto operator<=>(const TripleOverlap&) const = default;
};

// All normalized triple overlaps (s1<s2<s3, s1<t1, entries <= k/2) for the
// overlap relation given by `classes`.  Membership of a constituent is
// tested on the raw quadruple: orbit-nontrivial and canonical form listed.
std::vector<TripleOverlap> find_triples(const std::vector<OverlapClass>& classes, unsigned k);

// All 4-cliques in the pairwise-overlap relation (expected empty).
std::vector<std::array<PairST, 4>> find_quadruple_overlaps(
    const std::vector<OverlapClass>& classes, unsigned k);

} // namespace nearring

#endif
