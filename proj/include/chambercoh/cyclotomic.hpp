#pragma once

#include "chambercoh/rational.hpp"

#include <string>
#include <vector>

namespace chambercoh {

unsigned euler_phi(unsigned m);

// Coefficients of the m-th cyclotomic polynomial Phi_m, lowest degree first.
// Monic of degree phi(m); obtained by dividing x^m - 1 by Phi_d over the
// proper divisors d of m.
std::vector<Int> cyclotomic_polynomial(unsigned m);

// Element of the field Q(zeta_m), stored as a polynomial in zeta_m of degree
// < phi(m), i.e. reduced modulo Phi_m. All arithmetic is exact.
class Cyclotomic {
public:
    explicit Cyclotomic(unsigned order);  // zero of Q(zeta_order)
    static Cyclotomic from_rational(unsigned order, const Rational& r);
    static Cyclotomic zeta(unsigned order);
    static Cyclotomic zeta_pow(unsigned order, long k);  // zeta^k, any sign of k

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;  // lies in the prime field
    Rational rational_part() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

    Cyclotomic& operator*=(const Rational& r);
    friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }

    // Multiplicative inverse via the extended Euclidean algorithm against
    // Phi_m; throws std::domain_error on zero.
    Cyclotomic inverse() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::string str() const;  // e.g. "1 - 1/2*z^3" with z = zeta_m

private:
    unsigned order_;
    std::vector<Rational> c_;  // length phi(order_)

    void require_same_field(const Cyclotomic& o) const;
};

}  // namespace chambercoh
