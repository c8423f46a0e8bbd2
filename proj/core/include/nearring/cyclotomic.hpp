#ifndef NEARRING_CYCLOTOMIC_HPP
#define NEARRING_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "nearring/polyz.hpp"

namespace nearring {

// Phi_k, monic of degree phi(k).  Cached; computed by exact division of
// x^k - 1 by the product of the cyclotomic polynomials of the proper
// divisors of k.
const PolyZ& cyclotomic_poly(unsigned k);

unsigned euler_phi(unsigned k);

// Exact rational in lowest terms with positive denominator.
struct Rational {
    mpz_class num{0};
    mpz_class den{1};
    Rational() = default;
    Rational(mpz_class n, mpz_class d);
    bool is_integer() const { return den == 1; }
    bool operator==(const Rational&) const = default;
    std::string to_string() const;
};

// An element of Q(phi_k): integer residue coefficients modulo Phi_k in
// the basis 1, phi, ..., phi^{phi(k)-1}, over a single positive
// denominator.  Kept in lowest terms (gcd(den, content(num)) = 1).
class CycNum {
  public:
    CycNum() = default;
    CycNum(unsigned k, std::vector<mpz_class> num, mpz_class den = 1);

    static CycNum zero(unsigned k);
    static CycNum one(unsigned k);
    static CycNum phi_power(unsigned k, unsigned e); // phi^e reduced

    unsigned k() const { return k_; }
    const std::vector<mpz_class>& num() const { return num_; }
    const mpz_class& den() const { return den_; }
    bool is_zero() const;

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    bool operator==(const CycNum& o) const;
    bool operator<(const CycNum& o) const; // fixed total order for keying

    CycNum inverse() const; // throws ZeroElement

    std::string to_string() const;

  private:
    unsigned k_ = 0;
    std::vector<mpz_class> num_;
    mpz_class den_{1};
    void canonicalize();
};

// Residue of f modulo Phi_k as an algebraic integer (den = 1).
CycNum reduce(const PolyZ& f, unsigned k);

// Image of a under the Galois automorphism phi -> phi^d; requires
// gcd(d, k) = 1.  Throws NotCoprime.
CycNum conjugate(const CycNum& a, unsigned d);

// Galois norm: product of all phi(k) conjugates.  The product must have
// every non-constant basis coefficient zero; NonRationalProduct otherwise.
Rational norm(const CycNum& a);

} // namespace nearring

#endif
