#include "nearring/polyz.hpp"

#include <sstream>

namespace nearring {

PolyZ::PolyZ(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

PolyZ::PolyZ(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

void PolyZ::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyZ PolyZ::x_pow(unsigned e) {
    std::vector<mpz_class> c(e + 1, mpz_class(0));
    c[e] = 1;
    return PolyZ(std::move(c));
}

const mpz_class& PolyZ::coeff(std::size_t i) const {
    static const mpz_class zero(0);
    return i < c_.size() ? c_[i] : zero;
}

const mpz_class& PolyZ::leading() const {
    if (c_.empty()) throw ZeroPolynomial("leading coefficient of zero polynomial");
    return c_.back();
}

PolyZ PolyZ::operator+(const PolyZ& o) const {
    std::vector<mpz_class> c(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return PolyZ(std::move(c));
}

PolyZ PolyZ::operator-(const PolyZ& o) const {
    std::vector<mpz_class> c(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return PolyZ(std::move(c));
}

PolyZ PolyZ::operator-() const {
    std::vector<mpz_class> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return PolyZ(std::move(c));
}

PolyZ PolyZ::operator*(const PolyZ& o) const {
    if (c_.empty() || o.c_.empty()) return PolyZ();
    std::vector<mpz_class> c(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return PolyZ(std::move(c));
}

mpz_class PolyZ::eval(const mpz_class& x) const {
    mpz_class r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

PolyZ PolyZ::divide_exact_monic(const PolyZ& divisor) const {
    if (divisor.is_zero() || divisor.leading() != 1)
        throw Error("divisor must be monic");
    std::vector<mpz_class> rem = c_;
    std::size_t dn = divisor.c_.size();
    if (c_.size() < dn) {
        if (is_zero()) return PolyZ();
        throw Error("division is not exact");
    }
    std::vector<mpz_class> quot(c_.size() - dn + 1, mpz_class(0));
    for (std::size_t n = rem.size(); n-- >= dn;) {
        mpz_class q = rem[n];
        if (q != 0) {
            quot[n - dn + 1] = q;
            for (std::size_t i = 0; i < dn; ++i) rem[n - dn + 1 + i] -= q * divisor.c_[i];
        }
        if (n == 0) break;
    }
    for (std::size_t i = 0; i + 1 < dn; ++i)
        if (rem[i] != 0) throw Error("division is not exact");
    return PolyZ(std::move(quot));
}

PolyZ PolyZ::mod_monic(const PolyZ& divisor) const {
    if (divisor.is_zero() || divisor.leading() != 1)
        throw Error("divisor must be monic");
    std::vector<mpz_class> rem = c_;
    std::size_t dn = divisor.c_.size();
    for (std::size_t n = rem.size(); n-- >= dn;) {
        mpz_class q = rem[n];
        if (q != 0) {
            rem[n] = 0;
            for (std::size_t i = 0; i + 1 < dn; ++i) rem[n - dn + 1 + i] -= q * divisor.c_[i];
        }
        if (n == 0) break;
    }
    rem.resize(std::min(rem.size(), dn - 1));
    return PolyZ(std::move(rem));
}

std::string PolyZ::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        mpz_class a = c_[i];
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        first = false;
        mpz_class mag = abs(a);
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

mpz_class resultant(const PolyZ& f, const PolyZ& g) {
    if (f.is_zero() || g.is_zero())
        throw ZeroPolynomial("resultant of zero polynomial");
    if (f.degree() == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), f.leading().get_mpz_t(), g.degree());
        return r;
    }
    if (g.degree() == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), g.leading().get_mpz_t(), f.degree());
        return r;
    }

    // Subresultant polynomial remainder sequence (Collins).
    std::vector<mpz_class> A = f.coeffs();
    std::vector<mpz_class> B = g.coeffs();
    mpz_class sign(1);
    mpz_class gcoef(1), h(1);

    auto deg = [](const std::vector<mpz_class>& v) { return static_cast<int>(v.size()) - 1; };
    auto trim = [](std::vector<mpz_class>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };

    if (deg(A) < deg(B)) {
        std::swap(A, B);
        if ((static_cast<long>(deg(A)) * deg(B)) % 2 == 1) sign = -sign;
    }

    while (deg(B) > 0) {
        int d = deg(A) - deg(B);
        if ((static_cast<long>(deg(A)) * deg(B)) % 2 == 1) sign = -sign;

        // pseudo-remainder prem(A, B)
        std::vector<mpz_class> R = A;
        const mpz_class& lb = B.back();
        mpz_class lbp;
        mpz_pow_ui(lbp.get_mpz_t(), lb.get_mpz_t(), d + 1);
        for (auto& c : R) c *= lbp;
        while (static_cast<int>(R.size()) >= static_cast<int>(B.size()) && !R.empty()) {
            mpz_class q = R.back() / lb; // exact by construction
            std::size_t shift = R.size() - B.size();
            for (std::size_t i = 0; i < B.size(); ++i) R[shift + i] -= q * B[i];
            trim(R);
        }

        // divide by g * h^d
        mpz_class hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), d);
        mpz_class denom = gcoef * hd;
        for (auto& c : R) c /= denom;

        A = std::move(B);
        B = std::move(R);
        gcoef = A.back();
        // h = g^d / h^{d-1}
        mpz_class gd;
        mpz_pow_ui(gd.get_mpz_t(), gcoef.get_mpz_t(), d);
        if (d == 0) {
            // h unchanged... h = h * (g^0) -- but d==0 cannot happen: deg drops
            // are >= 0 and prem has degree < deg(B); keep for safety.
        } else {
            mpz_class hprev;
            mpz_pow_ui(hprev.get_mpz_t(), h.get_mpz_t(), d - 1);
            h = gd / hprev;
        }
        if (B.empty()) return mpz_class(0);
    }

    // B is a nonzero constant; res = sign * B^{deg A} / h^{deg A - 1}
    int da = deg(A);
    mpz_class bn;
    mpz_pow_ui(bn.get_mpz_t(), B[0].get_mpz_t(), da);
    mpz_class hn;
    mpz_pow_ui(hn.get_mpz_t(), h.get_mpz_t(), da - 1);
    return sign * (bn / hn);
}

} // namespace nearring
