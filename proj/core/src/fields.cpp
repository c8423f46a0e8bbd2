#include "nearring/fields.hpp"

#include <algorithm>
#include <sstream>

namespace nearring {

namespace {

// Dense polynomial arithmetic over GF(p), constant term first.
using Poly = std::vector<std::uint32_t>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
    // b monic (leading coefficient 1)
    a = trim(std::move(a));
    while (a.size() >= b.size() && !a.empty()) {
        std::uint64_t q = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t sub = (q * b[i]) % p;
            std::uint64_t cur = a[shift + i];
            a[shift + i] = static_cast<std::uint32_t>((cur + p - sub) % p);
        }
        a = trim(std::move(a));
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(std::uint64_t p, const Coeffs& poly) {
    Poly f = trim(poly);
    if (f.size() < 2) return false; // constants are not irreducible
    unsigned deg = static_cast<unsigned>(f.size() - 1);
    if (deg == 1) return true;
    // Exhaustive trial division by every monic polynomial of degree 1..deg/2.
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        Poly g(d + 1, 0);
        g[d] = 1;
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t n = idx;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(n % p);
                n /= p;
            }
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

Coeffs find_irreducible(std::uint64_t p, unsigned m) {
    if (!is_prime_u64(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (m == 0) throw Error("degree must be >= 1");
    // Scan coefficient vectors (a0, ..., a_{m-1}) in lexicographic order,
    // constant term most significant.
    Coeffs f(m + 1, 0);
    f[m] = 1;
    std::vector<std::uint32_t> a(m, 0);
    for (;;) {
        for (unsigned i = 0; i < m; ++i) f[i] = a[i];
        if (is_irreducible(p, f)) return f;
        // advance odometer; a[m-1] is least significant
        int pos = static_cast<int>(m) - 1;
        while (pos >= 0) {
            if (++a[pos] < p) break;
            a[pos] = 0;
            --pos;
        }
        if (pos < 0) throw Error("no irreducible polynomial found"); // unreachable
    }
}

Field::Field(std::uint64_t p, unsigned m, std::optional<Coeffs> modulus) : p_(p), m_(m) {
    if (!is_prime_u64(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (m == 0) throw Error("degree must be >= 1");
    q_ = 1;
    for (unsigned i = 0; i < m; ++i) q_ *= p;
    if (modulus) {
        Coeffs f = trim(*modulus);
        if (f.size() != m + 1 || f.back() != 1)
            throw ReducibleModulus("modulus must be monic of degree m");
        for (auto c : f)
            if (c >= p) throw ReducibleModulus("modulus coefficient out of range");
        if (m >= 2 && !is_irreducible(p, f))
            throw ReducibleModulus("modulus is reducible over GF(p)");
        modulus_ = f;
    } else {
        modulus_ = find_irreducible(p, m);
    }
}

FieldElem Field::zero() const { return FieldElem{Coeffs(m_, 0)}; }

FieldElem Field::one() const {
    Coeffs c(m_, 0);
    c[0] = 1 % static_cast<std::uint32_t>(p_);
    return FieldElem{c};
}

FieldElem Field::from_int(std::uint64_t v) const {
    Coeffs c(m_, 0);
    c[0] = static_cast<std::uint32_t>(v % p_);
    return FieldElem{c};
}

bool Field::is_zero(const FieldElem& a) const {
    return std::all_of(a.c.begin(), a.c.end(), [](std::uint32_t x) { return x == 0; });
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
    Coeffs c(m_);
    for (unsigned i = 0; i < m_; ++i)
        c[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.c[i]) + b.c[i]) % p_);
    return FieldElem{c};
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const {
    Coeffs c(m_);
    for (unsigned i = 0; i < m_; ++i)
        c[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.c[i]) + p_ - b.c[i]) % p_);
    return FieldElem{c};
}

FieldElem Field::neg(const FieldElem& a) const { return sub(zero(), a); }

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
    std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (a.c[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j)
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a.c[i]) * b.c[j]) % p_;
    }
    // reduce by the monic modulus
    for (std::size_t n = prod.size(); n-- > m_;) {
        std::uint64_t q = prod[n];
        if (q == 0) continue;
        prod[n] = 0;
        for (unsigned i = 0; i < m_; ++i) {
            std::uint64_t sub = (q * modulus_[i]) % p_;
            prod[n - m_ + i] = (prod[n - m_ + i] + p_ - sub) % p_;
        }
    }
    Coeffs c(m_);
    for (unsigned i = 0; i < m_; ++i) c[i] = static_cast<std::uint32_t>(prod[i]);
    return FieldElem{c};
}

FieldElem Field::pow(FieldElem a, std::uint64_t e) const {
    FieldElem r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FieldElem Field::inv(const FieldElem& a) const {
    if (is_zero(a)) throw ZeroElement("inverse of zero");
    return pow(a, q_ - 2);
}

FieldElem Field::element_at(std::uint64_t n) const {
    Coeffs c(m_);
    for (unsigned i = m_; i-- > 0;) {
        c[i] = static_cast<std::uint32_t>(n % p_);
        n /= p_;
    }
    return FieldElem{c};
}

std::uint64_t Field::index_of(const FieldElem& a) const {
    std::uint64_t n = 0;
    for (unsigned i = 0; i < m_; ++i) n = n * p_ + a.c[i];
    return n;
}

std::uint64_t Field::mul_order(const FieldElem& a) const {
    if (is_zero(a)) throw ZeroElement("order of zero");
    std::uint64_t ord = q_ - 1;
    for (std::uint64_t f : prime_factors(q_ - 1)) {
        while (ord % f == 0 && pow(a, ord / f) == one()) ord /= f;
    }
    return ord;
}

std::vector<FieldElem> elements_of_order(const Field& field, std::uint64_t k) {
    if (k == 0 || (field.order() - 1) % k != 0)
        throw NoSuchOrder("k = " + std::to_string(k) + " does not divide q-1");
    std::vector<FieldElem> out;
    auto pf = prime_factors(k);
    for (std::uint64_t n = 1; n < field.order(); ++n) {
        FieldElem e = field.element_at(n);
        if (field.pow(e, k) != field.one()) continue;
        bool exact = true;
        for (std::uint64_t f : pf)
            if (field.pow(e, k / f) == field.one()) { exact = false; break; }
        if (exact) out.push_back(e);
    }
    return out;
}

FieldElem element_of_order(const Field& field, std::uint64_t k) {
    if (k == 0 || (field.order() - 1) % k != 0)
        throw NoSuchOrder("k = " + std::to_string(k) + " does not divide q-1");
    auto pf = prime_factors(k);
    for (std::uint64_t n = 1; n < field.order(); ++n) {
        FieldElem e = field.element_at(n);
        if (field.pow(e, k) != field.one()) continue;
        bool exact = true;
        for (std::uint64_t f : pf)
            if (field.pow(e, k / f) == field.one()) { exact = false; break; }
        if (exact) return e;
    }
    throw NoSuchOrder("no element of order " + std::to_string(k)); // unreachable
}

Coeffs minimal_polynomial(const Field& field, const FieldElem& e) {
    if (field.is_zero(e)) throw ZeroElement("minimal polynomial of zero");
    // Frobenius conjugates e, e^p, e^{p^2}, ...
    std::vector<FieldElem> conj{e};
    FieldElem cur = field.pow(e, field.p());
    while (cur != e) {
        conj.push_back(cur);
        cur = field.pow(cur, field.p());
    }
    // product of (x - c) over the conjugates, computed in the extension
    std::vector<FieldElem> poly{field.one()};
    for (const FieldElem& c : conj) {
        std::vector<FieldElem> next(poly.size() + 1, field.zero());
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = field.add(next[i + 1], poly[i]);
            next[i] = field.sub(next[i], field.mul(c, poly[i]));
        }
        poly = std::move(next);
    }
    Coeffs out(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        for (unsigned j = 1; j < field.m(); ++j)
            if (poly[i].c[j] != 0) throw Error("minimal polynomial not over prime subfield");
        out[i] = poly[i].c[0];
    }
    return out;
}

std::string to_string(const FieldElem& e) {
    std::ostringstream os;
    for (std::size_t i = 0; i < e.c.size(); ++i) {
        if (i) os << ',';
        os << e.c[i];
    }
    return os.str();
}

} // namespace nearring
