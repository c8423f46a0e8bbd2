#ifndef NEARRING_POLYZ_HPP
#define NEARRING_POLYZ_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "nearring/errors.hpp"

namespace nearring {

// Dense polynomial over Z with arbitrary-precision coefficients,
// constant term first.  The zero polynomial has an empty coefficient
// vector and degree -1.
class PolyZ {
  public:
    PolyZ() = default;
    explicit PolyZ(std::vector<mpz_class> coeffs);
    PolyZ(std::initializer_list<long> coeffs);

    static PolyZ x_pow(unsigned e);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& coeff(std::size_t i) const;
    const mpz_class& leading() const;

    PolyZ operator+(const PolyZ& o) const;
    PolyZ operator-(const PolyZ& o) const;
    PolyZ operator*(const PolyZ& o) const;
    PolyZ operator-() const;
    bool operator==(const PolyZ& o) const = default;

    mpz_class eval(const mpz_class& x) const;

    // Quotient of an exact division; throws if the division has a remainder
    // or the divisor is not monic.
    PolyZ divide_exact_monic(const PolyZ& divisor) const;

    // Remainder modulo a monic divisor.
    PolyZ mod_monic(const PolyZ& divisor) const;

    std::string to_string() const;

  private:
    std::vector<mpz_class> c_;
    void normalize();
};

// Resultant Res(f, g) via the fraction-free subresultant scheme.
// For monic f this is the product of g over the roots of f.
mpz_class resultant(const PolyZ& f, const PolyZ& g);

} // namespace nearring

#endif
