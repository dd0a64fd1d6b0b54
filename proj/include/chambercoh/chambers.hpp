#pragma once

#include "chambercoh/arrangement.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace chambercoh {

// Sign of each defining form on a chamber, entries in {+1, -1}. The canonical
// order on sign vectors is lexicographic with '+' before '-'.
struct SignVector {
    std::vector<int8_t> s;

    SignVector() = default;
    explicit SignVector(std::vector<int8_t> v) : s(std::move(v)) {}
    size_t size() const { return s.size(); }

    friend bool operator==(const SignVector& a, const SignVector& b) { return a.s == b.s; }
    friend bool operator<(const SignVector& a, const SignVector& b);
    std::string str() const;  // e.g. "++-+"
};

struct RecessionCone {
    enum class Kind { Bounded, Ray, Cone };
    Kind kind = Kind::Bounded;
    // Primitive integer directions. Ray uses d1 only; Cone holds the extremal
    // rays with d1 -> d2 counterclockwise (cross(d1, d2) > 0).
    std::pair<Int, Int> d1{0, 0}, d2{0, 0};
};

struct Chamber {
    SignVector sign;
    Rational wx, wy;  // interior witness point
    RecessionCone recession;
    std::optional<EdgeAtInfinity> x_infinity;  // absent iff bounded

    bool bounded() const { return recession.kind == RecessionCone::Kind::Bounded; }
    bool narrow() const { return recession.kind == RecessionCone::Kind::Ray; }
    bool wide() const { return recession.kind == RecessionCone::Kind::Cone; }
};

class ChamberSet {
public:
    const std::vector<Chamber>& all() const { return chambers_; }
    const Chamber& at(int i) const { return chambers_[size_t(i)]; }
    size_t size() const { return chambers_.size(); }
    // -1 when the sign vector is not a chamber.
    int index_of(const SignVector& s) const;
    long bounded_count() const;

    friend ChamberSet enumerate_chambers(const Arrangement& a, int cap);

private:
    std::vector<Chamber> chambers_;  // lexicographic by sign vector
    std::map<SignVector, int> lookup_;
};

// Brute force over the 2^n candidate sign vectors with exact Fourier-Motzkin
// feasibility; throws CapExceededError for n > cap.
ChamberSet enumerate_chambers(const Arrangement& a, int cap = 18);

// Feasibility of the open system {sign_i * (a_i x + b_i y + c_i) > 0}; the
// witness is the Fourier-Motzkin back-substitution midpoint with unbounded
// sides clamped just past the arrangement's coordinate bound.
bool sign_vector_feasible(const Arrangement& a, const SignVector& s);
std::optional<std::pair<Rational, Rational>> sign_vector_witness(const Arrangement& a,
                                                                 const SignVector& s);

// Intersection of the homogeneous closed half-planes {sign_i (a_i u + b_i v) >= 0}
// as an exact angular sector; throws when the cone contains a line (the
// arrangement would be non-essential).
RecessionCone recession_cone(const Arrangement& a, const SignVector& s);

// Smallest edge at infinity containing the closure of an unbounded chamber.
EdgeAtInfinity x_of(const Arrangement& a, const Chamber& c);

// The opposite unbounded chamber: flips exactly the signs of the lines not
// passing through x_of(c). Throws on bounded input; an infeasible result is an
// internal invariant violation.
int opposite(const Arrangement& a, const ChamberSet& cs, int index);

// Indices where the two sign vectors differ.
std::vector<int> sep(const SignVector& a, const SignVector& b);

SignVector sign_vector_at(const Arrangement& a, const Rational& x, const Rational& y);

}  // namespace chambercoh
