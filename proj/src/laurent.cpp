#include "chambercoh/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chambercoh {

bool LaurentMonomial::is_unit() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

LaurentMonomial LaurentMonomial::inverse() const {
    LaurentMonomial r(*this);
    for (auto& x : r.e) x = -x;
    return r;
}

LaurentMonomial LaurentMonomial::operator*(const LaurentMonomial& o) const {
    if (e.size() != o.e.size()) throw std::invalid_argument("LaurentMonomial: nvars mismatch");
    LaurentMonomial r(*this);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

LaurentPoly LaurentPoly::constant(size_t nvars, const Rational& c) {
    return monomial(LaurentMonomial::unit(nvars), c);
}

LaurentPoly LaurentPoly::monomial(const LaurentMonomial& m, const Rational& c) {
    LaurentPoly p(m.nvars());
    p.add_term(m, c);
    return p;
}

Rational LaurentPoly::coeff(const LaurentMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const LaurentMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    if (m.nvars() != nvars_) throw std::invalid_argument("LaurentPoly: nvars mismatch");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("LaurentPoly: nvars mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("LaurentPoly: nvars mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("LaurentPoly: nvars mismatch");
    LaurentPoly prod(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) prod.add_term(ma * mb, ca * cb);
    terms_ = std::move(prod.terms_);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& r) {
    if (r.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= r;
    return *this;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
    LaurentPoly quot(num.nvars_);
    if (num.is_zero()) return quot;
    if (num.nvars_ != den.nvars_) throw std::invalid_argument("LaurentPoly: nvars mismatch");

    // Shift both operands to honest polynomials (componentwise minimum
    // exponent zero); the quotient then carries the difference of the shifts.
    auto min_exponents = [](const LaurentPoly& p) {
        std::vector<int> mins = p.terms_.begin()->first.e;
        for (const auto& [m, c] : p.terms_)
            for (size_t i = 0; i < mins.size(); ++i) mins[i] = std::min(mins[i], m.e[i]);
        return mins;
    };
    std::vector<int> sn = min_exponents(num), sd = min_exponents(den);
    std::vector<int> shift(num.nvars_);
    for (size_t i = 0; i < shift.size(); ++i) shift[i] = sn[i] - sd[i];

    auto shifted = [](const LaurentPoly& p, const std::vector<int>& s) {
        LaurentPoly q(p.nvars_);
        for (const auto& [m, c] : p.terms_) {
            LaurentMonomial mm = m;
            for (size_t i = 0; i < s.size(); ++i) mm.e[i] -= s[i];
            q.terms_.emplace(std::move(mm), c);
        }
        return q;
    };
    LaurentPoly rem = shifted(num, sn);
    LaurentPoly div = shifted(den, sd);

    // Long division against the single divisor; leading terms taken in the
    // lexicographic term order. Exactness of the division guarantees the
    // leading monomial is always divisible and the loop terminates.
    while (!rem.is_zero()) {
        const auto& [lm_r, lc_r] = *rem.terms_.rbegin();
        const auto& [lm_d, lc_d] = *div.terms_.rbegin();
        LaurentMonomial u(lm_r);
        for (size_t i = 0; i < u.e.size(); ++i) {
            u.e[i] -= lm_d.e[i];
            if (u.e[i] < 0) throw std::domain_error("LaurentPoly: not divisible");
        }
        Rational c = lc_r / lc_d;
        LaurentPoly piece = monomial(u, c);
        quot += piece;
        rem -= piece * div;
    }

    LaurentPoly result(num.nvars_);
    for (const auto& [m, c] : quot.terms_) {
        LaurentMonomial mm = m;
        for (size_t i = 0; i < shift.size(); ++i) mm.e[i] += shift[i];
        result.terms_.emplace(std::move(mm), c);
    }
    return result;
}

Cyclotomic LaurentPoly::eval(const std::vector<Cyclotomic>& values) const {
    if (values.size() != nvars_) throw std::invalid_argument("LaurentPoly: wrong value count");
    unsigned order = values.empty() ? 1 : values[0].order();
    for (const auto& v : values) {
        if (v.order() != order) throw std::invalid_argument("LaurentPoly: mixed field orders");
        if (v.is_zero()) throw std::domain_error("LaurentPoly: substitution of zero");
    }

    std::vector<Cyclotomic> inverses;
    auto inverse_of = [&](size_t i) -> const Cyclotomic& {
        if (inverses.empty()) inverses.assign(nvars_, Cyclotomic(order));
        if (inverses[i].is_zero()) inverses[i] = values[i].inverse();
        return inverses[i];
    };

    Cyclotomic acc(order);
    for (const auto& [m, c] : terms_) {
        Cyclotomic term = Cyclotomic::from_rational(order, c);
        for (size_t i = 0; i < nvars_; ++i) {
            int e = m.e[i];
            if (e == 0) continue;
            const Cyclotomic& base = e > 0 ? values[i] : inverse_of(i);
            for (int k = 0; k < std::abs(e); ++k) term *= base;
        }
        acc += term;
    }
    return acc;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) out << " ";
        out << (c.sign() < 0 ? "-" : "+");
        Rational a = c.abs();
        if (a != Rational(1)) out << a.str() << "*";
        out << "[";
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (i) out << ",";
            out << m.e[i];
        }
        out << "]";
        first = false;
    }
    return out.str();
}

bool equal_up_to_sign(const LaurentPoly& a, const LaurentPoly& b) { return a == b || a == -b; }

}  // namespace chambercoh
