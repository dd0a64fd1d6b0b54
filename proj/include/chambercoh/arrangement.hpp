#pragma once

#include "chambercoh/errors.hpp"
#include "chambercoh/laurent.hpp"
#include "chambercoh/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace chambercoh {

// Affine line a*x + b*y + c = 0 with primitive integer coefficients and the
// first nonzero of (a, b, c) positive, so equal lines compare equal.
struct Line {
    Int a, b, c;

    static Line normalized(const Rational& a, const Rational& b, const Rational& c);
    Rational eval(const Rational& x, const Rational& y) const;

    friend bool operator==(const Line& l, const Line& r) {
        return l.a == r.a && l.b == r.b && l.c == r.c;
    }
    friend bool operator<(const Line& l, const Line& r);
    std::string str() const;
};

// Primitive integer pair up to sign with canonical representative (first
// nonzero entry positive); hashes a parallel class exactly.
struct DirectionKey {
    Int a, b;

    static DirectionKey of_normal(Int a, Int b);
    // Key of the lines whose direction vector is (u, v), i.e. normal (-v, u).
    static DirectionKey of_direction(const Int& u, const Int& v);

    friend bool operator==(const DirectionKey& l, const DirectionKey& r) {
        return l.a == r.a && l.b == r.b;
    }
    friend bool operator<(const DirectionKey& l, const DirectionKey& r) {
        return l.a != r.a ? l.a < r.a : l.b < r.b;
    }
    std::string str() const;
};

// Rank-two element of the intersection poset: a point on >= 2 lines.
struct AffinePoint {
    Rational x, y;
    std::vector<int> incident;  // 0-based line indices, sorted

    size_t multiplicity() const { return incident.size(); }
};

// Point of the line at infinity hit by a parallel class.
struct InfinityPoint {
    DirectionKey normal;
    std::vector<int> members;  // 0-based line indices, sorted
};

struct EdgeAtInfinity {
    enum class Kind { HInfinity, Point };
    Kind kind = Kind::HInfinity;
    InfinityPoint point;  // meaningful when kind == Point

    static EdgeAtInfinity h_infinity() { return {}; }
    static EdgeAtInfinity at(InfinityPoint p) {
        EdgeAtInfinity e;
        e.kind = Kind::Point;
        e.point = std::move(p);
        return e;
    }
    bool is_h_infinity() const { return kind == Kind::HInfinity; }
};

struct DenseEdgeSet {
    std::vector<AffinePoint> affine_dense;     // multiplicity >= 3
    std::vector<InfinityPoint> infinity_dense; // parallel classes of size >= 2
    bool h_infinity_dense = true;
    bool hyperplane_edges_included = true;     // consumed by the dt-condition checker only
};

class Arrangement {
public:
    // .arr format: one "a b c" row per line, entries integer or p/q, '#'
    // starts a comment. Rejects duplicates and non-essential inputs.
    static Arrangement parse(const std::string& text, const std::string& name = "");
    static Arrangement from_lines(std::vector<Line> lines, const std::string& name = "");

    const std::vector<Line>& lines() const { return lines_; }
    size_t size() const { return lines_.size(); }
    const std::string& name() const { return name_; }

    const std::vector<AffinePoint>& intersection_points() const { return points_; }
    const std::map<DirectionKey, std::vector<int>>& parallel_classes() const { return classes_; }
    DenseEdgeSet dense_edges() const;
    std::array<long, 3> betti_numbers() const;

    // Monomial q_X^{1/2} in the half-twist variables: prod t_i^{-1} for
    // X = H_infinity, and (prod_{members} t_i) * prod_j t_j^{-1} for an
    // infinity point.
    LaurentPoly q_half_monomial(const EdgeAtInfinity& x) const;

    // Max |coordinate| over all intersection points (0 when none).
    Rational coordinate_bound() const;

private:
    std::vector<Line> lines_;
    std::string name_;
    std::vector<AffinePoint> points_;
    std::map<DirectionKey, std::vector<int>> classes_;

    void validate_and_index();
};

}  // namespace chambercoh
