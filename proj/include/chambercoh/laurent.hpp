#pragma once

#include "chambercoh/cyclotomic.hpp"
#include "chambercoh/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace chambercoh {

// Exponent vector of a Laurent monomial in the half-twist variables
// t_1 ... t_n, one per line of the ambient arrangement.
struct LaurentMonomial {
    std::vector<int> e;

    LaurentMonomial() = default;
    explicit LaurentMonomial(std::vector<int> exps) : e(std::move(exps)) {}
    static LaurentMonomial unit(size_t nvars) { return LaurentMonomial(std::vector<int>(nvars, 0)); }

    size_t nvars() const { return e.size(); }
    bool is_unit() const;
    LaurentMonomial inverse() const;
    LaurentMonomial operator*(const LaurentMonomial& o) const;

    bool operator==(const LaurentMonomial& o) const { return e == o.e; }
    bool operator<(const LaurentMonomial& o) const { return e < o.e; }
};

// Integer-coefficient-in-principle Laurent polynomial over the t_i; the
// coefficient ring is Q because fraction-free elimination still divides.
// Terms are kept in a canonical (lexicographic) order and never store zero
// coefficients.
class LaurentPoly {
public:
    LaurentPoly() : nvars_(0) {}
    explicit LaurentPoly(size_t nvars) : nvars_(nvars) {}
    static LaurentPoly constant(size_t nvars, const Rational& c);
    static LaurentPoly monomial(const LaurentMonomial& m, const Rational& c = Rational(1));

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<LaurentMonomial, Rational>& terms() const { return terms_; }
    Rational coeff(const LaurentMonomial& m) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    LaurentPoly& operator*=(const Rational& r);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& r) { return a *= r; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Exact division; throws std::domain_error when den is zero or does not
    // divide num in the Laurent ring.
    static LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

    // Substitute t_i -> values[i] (all in a common Q(zeta_m)); negative
    // exponents go through the field inverse. Throws std::domain_error when a
    // needed value is zero.
    Cyclotomic eval(const std::vector<Cyclotomic>& values) const;

    // Stable text form: signed bracketed exponent vectors in canonical term
    // order, e.g. "+[1,1,0,0] -[-1,-1,0,0]"; non-unit coefficients are printed
    // as "+3/2*[...]". The zero polynomial prints as "0".
    std::string str() const;

private:
    size_t nvars_;
    std::map<LaurentMonomial, Rational> terms_;

    void add_term(const LaurentMonomial& m, const Rational& c);
};

// p == q or p == -q.
bool equal_up_to_sign(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace chambercoh
