#ifndef NEARRING_OVERLAPS_HPP
#define NEARRING_OVERLAPS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nearring/cyclotomic.hpp"
#include "nearring/fields.hpp"
#include "nearring/polyz.hpp"

namespace nearring {

// The quadruple (i, j | s, t) with entries in 1..k-1.
struct Quad {
    unsigned i, j, s, t;
    unsigned k;
    bool operator==(const Quad&) const = default;
    auto operator<=>(const Quad&) const = default; // lex on (i,j,s,t), then k
    std::string to_string() const;
};

enum class TrivKind { JEqualsI, JEqualsT, SEqualsKMinusI, IEqualsS, Nontrivial };
enum class TrivCondition { Always, EvenKOrChar2, EvenKOrChar2AndJNotHalfK, INotHalfK };

struct TrivialityVerdict {
    TrivKind kind = TrivKind::Nontrivial;
    TrivCondition condition = TrivCondition::Always;
    bool trivial() const { return kind != TrivKind::Nontrivial; }
};

// f_{i,j,s,t,omega} = x^omega (x^j - 1)(x^s - 1) - (x^i - 1)(x^t - 1),
// expanded over Z.
PolyZ overlap_poly(const Quad& q, unsigned omega);

// Matches q, in both side orderings, against the trivial patterns:
//   (i,i|s,s)                          always
//   (i,i|s,k-s)      if 2|k or p=2
//   (i,j|k-i,j)      if (2|k or p=2) and j != k/2
//   (i,j|k-i,k-j)    if i != k/2
// i = s is reported as IEqualsS.
TrivialityVerdict triviality(const Quad& q, bool even_k, bool char2);

// A quadruple is discarded as trivial when any member of its orbit matches
// a trivial pattern (the pattern set is not closed under the group action,
// so the check must run orbit-wide).
bool orbit_trivial(const Quad& q, bool even_k, bool char2);

// Orbit under the sign-flip/permutation group: all 16 sign-flip masks for
// even k (even-weight masks only for odd k) composed with the eight
// permutations of the dihedral symmetry; at most 128 elements.
std::vector<Quad> orbit(const Quad& q); // throws TrivialInput

// Lexicographically least orbit element.
Quad canonicalize(const Quad& q); // throws TrivialInput

// Orbit element with i < j <= s and j <= k/2 and at most one entry > k/2
// (all entries <= k/2 when k is even); lex-least among qualifying members.
Quad reduce_form(const Quad& q); // throws TrivialInput

// Orbit element with 0 < i < j <= s < t <= k/2, when one exists.
// Requires even k (throws OddK).
std::optional<Quad> normalize(const Quad& q);

// ((t + i) - (s + j)) / 2, exact (may be half-integral).
Rational omega_of(const Quad& q);

enum class Family { O1, O30, O42, O60, Exceptional, Unclassified };

std::string family_name(Family f);

struct OverlapClass {
    Quad canonical;
    std::vector<unsigned> witnesses; // omega values, sorted
    Family family = Family::Unclassified;
    bool operator==(const OverlapClass&) const = default;
};

struct ComplexContext {
    unsigned k;
};

struct FieldContext {
    const Field* field;
    FieldElem phi; // element of multiplicative order k
    unsigned k;
};

// Canonical representative of the coset {phi^w c_{i,j} : w}; two pairs
// share a key iff their c-values lie in the same coset.
std::string coset_key(const ComplexContext& ctx, unsigned i, unsigned j);
std::string coset_key(const FieldContext& ctx, unsigned i, unsigned j);

// Complete set of nontrivial overlap classes, ordered by canonical quad.
// Enumeration buckets (i,j) pairs by coset key; triviality is filtered
// orbit-wide; witnesses are the omega with f_{i,j,s,t,omega}(phi) = 0.
std::vector<OverlapClass> enumerate_overlaps(const ComplexContext& ctx);
std::vector<OverlapClass> enumerate_overlaps(const FieldContext& ctx);

// Direct quadruple-by-omega scan; independent oracle for the bucket path.
std::vector<OverlapClass> enumerate_overlaps_direct(const ComplexContext& ctx);

} // namespace nearring

#endif
