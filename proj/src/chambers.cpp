#include "chambercoh/chambers.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace chambercoh {

bool operator<(const SignVector& a, const SignVector& b) {
    // '+' sorts before '-'.
    if (a.s.size() != b.s.size()) return a.s.size() < b.s.size();
    for (size_t i = 0; i < a.s.size(); ++i)
        if (a.s[i] != b.s[i]) return a.s[i] > b.s[i];
    return false;
}

std::string SignVector::str() const {
    std::string out;
    for (int8_t v : s) out += (v > 0 ? '+' : '-');
    return out;
}

int ChamberSet::index_of(const SignVector& s) const {
    auto it = lookup_.find(s);
    return it == lookup_.end() ? -1 : it->second;
}

long ChamberSet::bounded_count() const {
    long n = 0;
    for (const auto& c : chambers_)
        if (c.bounded()) ++n;
    return n;
}

namespace {

// One strict constraint cx*x + cy*y + c0 > 0.
struct Constraint {
    Rational cx, cy, c0;
};

std::vector<Constraint> signed_system(const Arrangement& a, const SignVector& s) {
    std::vector<Constraint> sys;
    sys.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        const Line& l = a.lines()[i];
        Rational sg(s.s[i]);
        sys.push_back({sg * Rational(l.a), sg * Rational(l.b), sg * Rational(l.c)});
    }
    return sys;
}

struct Interval {
    std::optional<Rational> lo, hi;  // open bounds
    bool infeasible = false;

    void add_lower(const Rational& v) {
        if (!lo || v > *lo) lo = v;
        check();
    }
    void add_upper(const Rational& v) {
        if (!hi || v < *hi) hi = v;
        check();
    }
    void check() {
        if (lo && hi && !(*lo < *hi)) infeasible = true;
    }
};

// Deterministic point of an open interval: midpoint when both ends exist,
// otherwise one unit past the finite end, at least |bound| + 1 out.
Rational pick_in_interval(const Interval& iv, const Rational& bound) {
    Rational far = bound + Rational(1);
    if (iv.lo && iv.hi) return (*iv.lo + *iv.hi) / Rational(2);
    if (iv.lo) return std::max(*iv.lo + Rational(1), far);
    if (iv.hi) return std::min(*iv.hi - Rational(1), -far);
    return far;
}

// Eliminate x from the strict system; returns the y-interval and keeps the
// x-bound generators for back-substitution.
struct Eliminated {
    bool infeasible = false;
    Interval y;
    std::vector<Constraint> x_lower, x_upper;  // x > f(y) resp. x < f(y)
};

Eliminated eliminate_x(const std::vector<Constraint>& sys) {
    Eliminated out;
    std::vector<Constraint> pure;
    for (const auto& c : sys) {
        if (c.cx.is_zero())
            pure.push_back(c);
        else if (c.cx.sign() > 0)
            out.x_lower.push_back(c);
        else
            out.x_upper.push_back(c);
    }
    auto add_linear = [&](const Rational& cy, const Rational& c0) {
        // cy*y + c0 > 0
        if (cy.is_zero()) {
            if (c0.sign() <= 0) out.infeasible = true;
        } else if (cy.sign() > 0) {
            out.y.add_lower(-c0 / cy);
        } else {
            out.y.add_upper(-c0 / cy);
        }
    };
    for (const auto& c : pure) add_linear(c.cy, c.c0);
    // Pair x > L(y) with x < U(y): L(y) < U(y).
    for (const auto& l : out.x_lower) {
        for (const auto& u : out.x_upper) {
            // l: x > -(l.cy y + l.c0)/l.cx (l.cx > 0)
            // u: x < -(u.cy y + u.c0)/u.cx (u.cx < 0)
            // L < U  <=>  -u.cx*(l.cy y + l.c0) ... cross-multiplied with care:
            // L = -(l.cy y + l.c0)/l.cx, U = -(u.cy y + u.c0)/u.cx.
            // L < U with l.cx > 0, u.cx < 0:
            //   -(l.cy y + l.c0) * u.cx > -(u.cy y + u.c0) * l.cx
            Rational cy = -l.cy * u.cx + u.cy * l.cx;
            Rational c0 = -l.c0 * u.cx + u.c0 * l.cx;
            add_linear(cy, c0);
        }
    }
    if (out.y.infeasible) out.infeasible = true;
    return out;
}

std::optional<std::pair<Rational, Rational>> solve_witness(const Arrangement& a,
                                                           const SignVector& s) {
    Eliminated el = eliminate_x(signed_system(a, s));
    if (el.infeasible) return std::nullopt;
    Rational bound = a.coordinate_bound();
    Rational y = pick_in_interval(el.y, bound);
    Interval xiv;
    for (const auto& c : el.x_lower) xiv.add_lower(-(c.cy * y + c.c0) / c.cx);
    for (const auto& c : el.x_upper) xiv.add_upper(-(c.cy * y + c.c0) / c.cx);
    if (xiv.infeasible) return std::nullopt;  // cannot happen after elimination
    Rational x = pick_in_interval(xiv, bound);
    return std::make_pair(x, y);
}

std::pair<Int, Int> primitive(Int u, Int v) {
    Int g = int_gcd(::abs(u), ::abs(v));
    if (g != 0) {
        u /= g;
        v /= g;
    }
    return {u, v};
}

Int cross(const std::pair<Int, Int>& a, const std::pair<Int, Int>& b) {
    return a.first * b.second - a.second * b.first;
}

Int dot(const std::pair<Int, Int>& a, const std::pair<Int, Int>& b) {
    return a.first * b.first + a.second * b.second;
}

}  // namespace

bool sign_vector_feasible(const Arrangement& a, const SignVector& s) {
    return !eliminate_x(signed_system(a, s)).infeasible;
}

std::optional<std::pair<Rational, Rational>> sign_vector_witness(const Arrangement& a,
                                                                 const SignVector& s) {
    return solve_witness(a, s);
}

RecessionCone recession_cone(const Arrangement& a, const SignVector& s) {
    // Normals of the homogeneous half-planes {m_i . u >= 0}.
    std::vector<std::pair<Int, Int>> normals;
    for (size_t i = 0; i < a.size(); ++i) {
        const Line& l = a.lines()[i];
        Int sg(int(s.s[i]));
        normals.emplace_back(sg * l.a, sg * l.b);
    }
    auto feasible_dir = [&](const std::pair<Int, Int>& d) {
        for (const auto& m : normals)
            if (dot(m, d) < 0) return false;
        return true;
    };
    // Candidate extremal rays lie on some constraint boundary.
    std::vector<std::pair<Int, Int>> cand;
    for (const auto& m : normals) {
        std::pair<Int, Int> boundary[2] = {{Int(-m.second), m.first}, {m.second, Int(-m.first)}};
        for (auto d : boundary) {
            d = primitive(d.first, d.second);
            if (!feasible_dir(d)) continue;
            if (std::find(cand.begin(), cand.end(), d) == cand.end()) cand.push_back(d);
        }
    }
    RecessionCone cone;
    if (cand.empty()) {
        cone.kind = RecessionCone::Kind::Bounded;
        return cone;
    }
    for (const auto& d : cand)
        if (feasible_dir({-d.first, -d.second}))
            throw Error("recession cone contains a line; arrangement not essential");
    if (cand.size() == 1) {
        cone.kind = RecessionCone::Kind::Ray;
        cone.d1 = cand[0];
        return cone;
    }
    // Pointed 2D sector: the clockwise-most and counterclockwise-most feasible
    // boundary directions are its extremal rays.
    auto cw_of_all = [&](const std::pair<Int, Int>& d) {
        for (const auto& o : cand)
            if (cross(d, o) < 0) return false;
        return true;
    };
    auto ccw_of_all = [&](const std::pair<Int, Int>& d) {
        for (const auto& o : cand)
            if (cross(o, d) < 0) return false;
        return true;
    };
    std::optional<std::pair<Int, Int>> first, second;
    for (const auto& d : cand) {
        if (cw_of_all(d)) first = d;
        if (ccw_of_all(d)) second = d;
    }
    if (!first || !second || cross(*first, *second) <= 0)
        throw Error("recession cone is not a pointed sector");
    cone.kind = RecessionCone::Kind::Cone;
    cone.d1 = *first;
    cone.d2 = *second;
    return cone;
}

EdgeAtInfinity x_of(const Arrangement& a, const Chamber& c) {
    if (c.bounded()) throw Error("x_of: chamber is bounded");
    if (c.wide()) return EdgeAtInfinity::h_infinity();
    DirectionKey key = DirectionKey::of_direction(c.recession.d1.first, c.recession.d1.second);
    auto it = a.parallel_classes().find(key);
    if (it == a.parallel_classes().end() || it->second.size() < 2)
        throw Error("narrow chamber ray is not pinched by a parallel class");
    return EdgeAtInfinity::at(InfinityPoint{key, it->second});
}

int opposite(const Arrangement& a, const ChamberSet& cs, int index) {
    const Chamber& c = cs.at(index);
    if (c.bounded()) throw Error("opposite: chamber is bounded");
    std::vector<bool> keep(a.size(), false);
    if (c.narrow()) {
        const EdgeAtInfinity& x = *c.x_infinity;
        for (int i : x.point.members) keep[size_t(i)] = true;
    }
    SignVector flipped = c.sign;
    for (size_t i = 0; i < a.size(); ++i)
        if (!keep[i]) flipped.s[i] = int8_t(-flipped.s[i]);
    int idx = cs.index_of(flipped);
    if (idx < 0) throw std::logic_error("opposite chamber is infeasible");
    return idx;
}

std::vector<int> sep(const SignVector& a, const SignVector& b) {
    if (a.size() != b.size()) throw Error("sep: sign vector length mismatch");
    std::vector<int> out;
    for (size_t i = 0; i < a.size(); ++i)
        if (a.s[i] != b.s[i]) out.push_back(int(i));
    return out;
}

SignVector sign_vector_at(const Arrangement& a, const Rational& x, const Rational& y) {
    SignVector s;
    s.s.resize(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        int sg = a.lines()[i].eval(x, y).sign();
        if (sg == 0) throw Error("point lies on line " + std::to_string(i + 1));
        s.s[i] = int8_t(sg);
    }
    return s;
}

ChamberSet enumerate_chambers(const Arrangement& a, int cap) {
    size_t n = a.size();
    if (int(n) > cap)
        throw CapExceededError("arrangement has " + std::to_string(n) +
                               " lines, enumeration cap is " + std::to_string(cap));
    ChamberSet cs;
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        SignVector s;
        s.s.resize(n);
        for (size_t i = 0; i < n; ++i)
            s.s[i] = (mask >> (n - 1 - i)) & 1 ? int8_t(-1) : int8_t(1);
        auto witness = solve_witness(a, s);
        if (!witness) continue;
        Chamber c;
        c.sign = s;
        c.wx = witness->first;
        c.wy = witness->second;
        c.recession = recession_cone(a, s);
        if (!c.bounded()) c.x_infinity = x_of(a, c);
        assert(sign_vector_at(a, c.wx, c.wy) == s);
        cs.lookup_[c.sign] = int(cs.chambers_.size());
        cs.chambers_.push_back(std::move(c));
    }
    return cs;
}

}  // namespace chambercoh
