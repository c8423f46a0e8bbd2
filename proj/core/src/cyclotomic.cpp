#include "nearring/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace nearring {

unsigned euler_phi(unsigned k) {
    unsigned result = k;
    unsigned n = k;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

const PolyZ& cyclotomic_rec(unsigned k, std::map<unsigned, PolyZ>& cache) {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    PolyZ denom({1});
    for (unsigned d = 1; d < k; ++d)
        if (k % d == 0) denom = denom * cyclotomic_rec(d, cache);
    std::vector<mpz_class> xn(k + 1, mpz_class(0));
    xn[0] = -1;
    xn[k] = 1;
    PolyZ phi = PolyZ(std::move(xn)).divide_exact_monic(denom);
    return cache.emplace(k, std::move(phi)).first->second;
}

} // namespace

const PolyZ& cyclotomic_poly(unsigned k) {
    if (k < 1) throw Error("k must be >= 1");
    static std::map<unsigned, PolyZ> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    return cyclotomic_rec(k, cache);
}

Rational::Rational(mpz_class n, mpz_class d) : num(std::move(n)), den(std::move(d)) {
    if (den == 0) throw Error("zero denominator");
    if (den < 0) { num = -num; den = -den; }
    mpz_class g = gcd(num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
}

std::string Rational::to_string() const {
    if (den == 1) return num.get_str();
    return num.get_str() + "/" + den.get_str();
}

CycNum::CycNum(unsigned k, std::vector<mpz_class> num, mpz_class den)
    : k_(k), num_(std::move(num)), den_(std::move(den)) {
    unsigned deg = euler_phi(k);
    if (num_.size() > deg) {
        PolyZ r = PolyZ(std::move(num_)).mod_monic(cyclotomic_poly(k));
        num_ = r.coeffs();
    }
    num_.resize(deg, mpz_class(0));
    canonicalize();
}

void CycNum::canonicalize() {
    if (den_ == 0) throw Error("zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    mpz_class g = den_;
    for (const auto& c : num_) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    if (g > 1) {
        den_ /= g;
        for (auto& c : num_) c /= g;
    }
    bool zero = true;
    for (const auto& c : num_)
        if (c != 0) { zero = false; break; }
    if (zero) den_ = 1;
}

CycNum CycNum::zero(unsigned k) { return CycNum(k, {}); }

CycNum CycNum::one(unsigned k) { return CycNum(k, {mpz_class(1)}); }

CycNum CycNum::phi_power(unsigned k, unsigned e) {
    std::vector<mpz_class> c(e % k + 1, mpz_class(0));
    c[e % k] = 1;
    return CycNum(k, std::move(c));
}

bool CycNum::is_zero() const {
    for (const auto& c : num_)
        if (c != 0) return false;
    return true;
}

CycNum CycNum::operator+(const CycNum& o) const {
    std::vector<mpz_class> c(num_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = num_[i] * o.den_ + o.num_[i] * den_;
    return CycNum(k_, std::move(c), den_ * o.den_);
}

CycNum CycNum::operator-(const CycNum& o) const {
    std::vector<mpz_class> c(num_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = num_[i] * o.den_ - o.num_[i] * den_;
    return CycNum(k_, std::move(c), den_ * o.den_);
}

CycNum CycNum::operator*(const CycNum& o) const {
    if (num_.empty()) return *this;
    std::vector<mpz_class> c(2 * num_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        for (std::size_t j = 0; j < o.num_.size(); ++j) c[i + j] += num_[i] * o.num_[j];
    }
    return CycNum(k_, std::move(c), den_ * o.den_);
}

bool CycNum::operator==(const CycNum& o) const {
    return k_ == o.k_ && den_ == o.den_ && num_ == o.num_;
}

bool CycNum::operator<(const CycNum& o) const {
    if (k_ != o.k_) return k_ < o.k_;
    if (den_ != o.den_) return den_ < o.den_;
    for (std::size_t i = 0; i < num_.size() && i < o.num_.size(); ++i)
        if (num_[i] != o.num_[i]) return num_[i] < o.num_[i];
    return num_.size() < o.num_.size();
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw ZeroElement("inverse of zero");
    // a^{-1} = (product of the conjugates with d != 1) / N(a)
    CycNum prod = CycNum::one(k_);
    for (unsigned d = 2; d < std::max(k_, 2u); ++d)
        if (std::gcd(d, k_) == 1) prod = prod * conjugate(*this, d);
    Rational n = norm(*this);
    // prod / n  =  prod * den(n) / num(n)
    std::vector<mpz_class> c = prod.num();
    for (auto& x : c) x *= n.den;
    return CycNum(k_, std::move(c), prod.den() * n.num);
}

std::string CycNum::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (i) os << ",";
        os << num_[i].get_str();
    }
    os << "]";
    if (den_ != 1) os << "/" << den_.get_str();
    return os.str();
}

CycNum reduce(const PolyZ& f, unsigned k) {
    PolyZ r = f.mod_monic(cyclotomic_poly(k));
    return CycNum(k, r.coeffs());
}

CycNum conjugate(const CycNum& a, unsigned d) {
    unsigned k = a.k();
    d %= k;
    if (std::gcd(d, k) != 1) throw NotCoprime("d not coprime to k");
    // phi^e -> phi^{d e mod k}
    std::vector<mpz_class> c(k, mpz_class(0));
    for (std::size_t e = 0; e < a.num().size(); ++e) {
        if (a.num()[e] == 0) continue;
        c[(static_cast<std::uint64_t>(d) * e) % k] += a.num()[e];
    }
    return CycNum(k, std::move(c), a.den());
}

Rational norm(const CycNum& a) {
    unsigned k = a.k();
    CycNum prod = CycNum::one(k);
    for (unsigned d = 1; d < std::max(k, 2u); ++d)
        if (std::gcd(d, k) == 1) prod = prod * conjugate(a, d);
    for (std::size_t i = 1; i < prod.num().size(); ++i)
        if (prod.num()[i] != 0)
            throw NonRationalProduct("conjugate product is not rational");
    return Rational(prod.num().empty() ? mpz_class(0) : prod.num()[0], prod.den());
}

} // namespace nearring
