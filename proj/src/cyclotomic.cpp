#include "chambercoh/cyclotomic.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace chambercoh {

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    unsigned n = m;
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

// Dense integer polynomials, lowest degree first, no trailing zeros.
using ZPoly = std::vector<Int>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials with monic divisor.
ZPoly zdiv_exact(ZPoly num, const ZPoly& den) {
    assert(!den.empty() && den.back() == 1);
    ZPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
    while (num.size() >= den.size()) {
        Int lead = num.back();
        size_t shift = num.size() - den.size();
        quot[shift] = lead;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= lead * den[i];
        ztrim(num);
        if (num.empty()) break;
    }
    if (!num.empty()) throw std::logic_error("zdiv_exact: nonzero remainder");
    return quot;
}

ZPoly cyclotomic_impl(unsigned m, std::map<unsigned, ZPoly>& cache) {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    ZPoly p(m + 1, Int(0));  // x^m - 1
    p[0] = -1;
    p[m] = 1;
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0) p = zdiv_exact(std::move(p), cyclotomic_impl(d, cache));
    cache[m] = p;
    return p;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw std::domain_error("cyclotomic_polynomial: m must be positive");
    static std::map<unsigned, ZPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    return cyclotomic_impl(m, cache);
}

namespace {

// Reduce a rational coefficient vector modulo Phi_m (phi = deg Phi_m) in place,
// then resize to phi.
void reduce_mod_phi(std::vector<Rational>& c, const std::vector<Int>& phi_poly) {
    size_t phi = phi_poly.size() - 1;
    for (size_t i = c.size(); i-- > phi;) {
        if (c[i].is_zero()) continue;
        Rational lead = c[i];
        // x^i = -x^(i-phi) * (Phi - x^phi)
        for (size_t j = 0; j < phi; ++j) c[i - phi + j] -= lead * Rational(phi_poly[j]);
        c[i] = Rational(0);
    }
    c.resize(phi < 1 ? 1 : phi);
}

}  // namespace

Cyclotomic::Cyclotomic(unsigned order) : order_(order) {
    if (order == 0) throw std::domain_error("Cyclotomic: order must be positive");
    unsigned phi = euler_phi(order);
    c_.assign(phi < 1 ? 1 : phi, Rational(0));
}

Cyclotomic Cyclotomic::from_rational(unsigned order, const Rational& r) {
    Cyclotomic z(order);
    z.c_[0] = r;
    return z;
}

Cyclotomic Cyclotomic::zeta(unsigned order) { return zeta_pow(order, 1); }

Cyclotomic Cyclotomic::zeta_pow(unsigned order, long k) {
    Cyclotomic z(order);
    long e = k % static_cast<long>(order);
    if (e < 0) e += order;
    std::vector<Rational> raw(static_cast<size_t>(e) + 1, Rational(0));
    raw.back() = Rational(1);
    auto phi_poly = cyclotomic_polynomial(order);
    if (raw.size() > phi_poly.size() - 1) reduce_mod_phi(raw, phi_poly);
    for (size_t i = 0; i < raw.size() && i < z.c_.size(); ++i) z.c_[i] = raw[i];
    return z;
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_one() const {
    if (c_[0] != Rational(1)) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::rational_part() const { return c_[0]; }

void Cyclotomic::require_same_field(const Cyclotomic& o) const {
    if (order_ != o.order_) throw std::invalid_argument("Cyclotomic: mixed field orders");
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    require_same_field(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    require_same_field(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    require_same_field(o);
    std::vector<Rational> prod(2 * c_.size(), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    reduce_mod_phi(prod, cyclotomic_polynomial(order_));
    c_ = std::move(prod);
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
    for (auto& x : c_) x *= r;
    return *this;
}

namespace {

// Rational polynomials, lowest degree first, for the extended Euclid below.
using QPoly = std::vector<Rational>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly qsub_scaled(QPoly a, const QPoly& b, const Rational& s, size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= s * b[i];
    qtrim(a);
    return a;
}

// Division with remainder: returns (quotient, remainder).
std::pair<QPoly, QPoly> qdivmod(QPoly num, const QPoly& den) {
    QPoly quot;
    if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, Rational(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rational s = num.back() / den.back();
        size_t shift = num.size() - den.size();
        quot[shift] += s;
        num = qsub_scaled(std::move(num), den, s, shift);
    }
    return {quot, num};
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly p(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
    return p;
}

QPoly qsub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qtrim(a);
    return a;
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
    QPoly a(c_);
    qtrim(a);
    QPoly phi;
    for (const auto& z : cyclotomic_polynomial(order_)) phi.emplace_back(z);

    // Extended Euclid: r0 = phi, r1 = a; track s with a*s ≡ r (mod phi).
    QPoly r0 = phi, r1 = a;
    QPoly s0, s1 = {Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = qdivmod(r0, r1);
        QPoly s2 = qsub(s0, qmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant (Phi_m irreducible, deg a < deg phi).
    if (r0.size() != 1) throw std::logic_error("Cyclotomic: gcd with Phi_m not constant");
    Rational scale = Rational(1) / r0[0];
    Cyclotomic result(order_);
    for (size_t i = 0; i < s0.size() && i < result.c_.size(); ++i) result.c_[i] = s0[i] * scale;
    return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) return false;
    return a.c_ == b.c_;
}

std::string Cyclotomic::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Rational v = c_[i];
        if (first) {
            if (v.sign() < 0) out << "-";
        } else {
            out << (v.sign() < 0 ? " - " : " + ");
        }
        Rational av = v.abs();
        if (i == 0) {
            out << av.str();
        } else {
            if (av != Rational(1)) out << av.str() << "*";
            out << "z";
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

}  // namespace chambercoh
