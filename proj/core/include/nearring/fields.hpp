#ifndef NEARRING_FIELDS_HPP
#define NEARRING_FIELDS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nearring/errors.hpp"

namespace nearring {

// Polynomial / coefficient vectors are stored constant term first,
// e.g. x^2 + 3x + 1 <-> {1, 3, 1}.
using Coeffs = std::vector<std::uint32_t>;

// An element of GF(p^m) in the power basis of the field modulus.
// Always holds exactly m coefficients in 0..p-1.  Comparison is
// lexicographic with the constant term most significant; this is the
// enumeration order used throughout.
struct FieldElem {
    Coeffs c;
    bool operator==(const FieldElem&) const = default;
    auto operator<=>(const FieldElem&) const = default;
};

bool is_prime_u64(std::uint64_t n);

// Deterministic: the lexicographically least (constant term first) monic
// irreducible polynomial of degree m over GF(p).
Coeffs find_irreducible(std::uint64_t p, unsigned m);

bool is_irreducible(std::uint64_t p, const Coeffs& poly);

class Field {
  public:
    // Builds GF(p^m).  If no modulus is given, find_irreducible(p, m) is
    // used; a given modulus must be monic of degree m and irreducible.
    Field(std::uint64_t p, unsigned m, std::optional<Coeffs> modulus = std::nullopt);

    std::uint64_t p() const { return p_; }
    unsigned m() const { return m_; }
    std::uint64_t order() const { return q_; }
    const Coeffs& modulus() const { return modulus_; }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(std::uint64_t v) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem pow(FieldElem a, std::uint64_t e) const;
    FieldElem inv(const FieldElem& a) const; // throws ZeroElement

    bool is_zero(const FieldElem& a) const;

    // Element with enumeration index n (0 <= n < q), lexicographic with the
    // constant term most significant.
    FieldElem element_at(std::uint64_t n) const;
    std::uint64_t index_of(const FieldElem& a) const;

    // Multiplicative order of a nonzero element.
    std::uint64_t mul_order(const FieldElem& a) const;

  private:
    std::uint64_t p_;
    unsigned m_;
    std::uint64_t q_;
    Coeffs modulus_;
};

// First element (in enumeration order) of multiplicative order exactly k.
// Throws NoSuchOrder when k does not divide q-1.
FieldElem element_of_order(const Field& field, std::uint64_t k);

// All phi(k) elements of order exactly k, in enumeration order.
std::vector<FieldElem> elements_of_order(const Field& field, std::uint64_t k);

// Monic irreducible polynomial over GF(p) annihilating e; degree divides m.
Coeffs minimal_polynomial(const Field& field, const FieldElem& e);

std::string to_string(const FieldElem& e);

} // namespace nearring

#endif
