#include "chambercoh/arrangement.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace chambercoh {

Line Line::normalized(const Rational& a, const Rational& b, const Rational& c) {
    if (a.is_zero() && b.is_zero())
        throw Error("line has zero normal vector (a, b) = (0, 0)");
    // Clear denominators, then divide by the content and fix the sign.
    Int l = 1;
    for (const Rational* r : {&a, &b, &c}) {
        Int d = r->den();
        l = l / int_gcd(l, d) * d;
    }
    Int ia = a.num() * (l / a.den());
    Int ib = b.num() * (l / b.den());
    Int ic = c.num() * (l / c.den());
    Int g = int_gcd(int_gcd(::abs(ia), ::abs(ib)), ::abs(ic));
    ia /= g;
    ib /= g;
    ic /= g;
    Int lead = ia != 0 ? ia : (ib != 0 ? ib : ic);
    if (lead < 0) {
        ia = -ia;
        ib = -ib;
        ic = -ic;
    }
    return Line{ia, ib, ic};
}

Rational Line::eval(const Rational& x, const Rational& y) const {
    return Rational(a) * x + Rational(b) * y + Rational(c);
}

bool operator<(const Line& l, const Line& r) {
    if (l.a != r.a) return l.a < r.a;
    if (l.b != r.b) return l.b < r.b;
    return l.c < r.c;
}

std::string Line::str() const {
    std::ostringstream out;
    out << a.get_str() << " " << b.get_str() << " " << c.get_str();
    return out.str();
}

DirectionKey DirectionKey::of_normal(Int a, Int b) {
    if (a == 0 && b == 0) throw Error("DirectionKey: zero vector");
    Int g = int_gcd(::abs(a), ::abs(b));
    a /= g;
    b /= g;
    if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
    }
    return DirectionKey{a, b};
}

DirectionKey DirectionKey::of_direction(const Int& u, const Int& v) {
    return of_normal(-v, u);
}

std::string DirectionKey::str() const {
    return "(" + a.get_str() + ":" + b.get_str() + ")";
}

Arrangement Arrangement::parse(const std::string& text, const std::string& name) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string row;
    int line_no = 0;
    while (std::getline(in, row)) {
        ++line_no;
        auto hash = row.find('#');
        if (hash != std::string::npos) row.erase(hash);
        std::istringstream fields(row);
        std::vector<std::string> parts;
        std::string tok;
        while (fields >> tok) parts.push_back(tok);
        if (parts.empty()) continue;
        if (parts.size() != 3)
            throw ParseError(line_no, "expected 3 entries 'a b c', got " +
                                          std::to_string(parts.size()));
        Rational vals[3];
        for (int i = 0; i < 3; ++i) {
            try {
                vals[i] = Rational::parse(parts[i]);
            } catch (const std::exception& e) {
                throw ParseError(line_no, e.what());
            }
        }
        if (vals[0].is_zero() && vals[1].is_zero())
            throw ParseError(line_no, "degenerate line: (a, b) = (0, 0)");
        lines.push_back(Line::normalized(vals[0], vals[1], vals[2]));
    }
    return from_lines(std::move(lines), name);
}

Arrangement Arrangement::from_lines(std::vector<Line> lines, const std::string& name) {
    Arrangement arr;
    arr.lines_ = std::move(lines);
    arr.name_ = name;
    arr.validate_and_index();
    return arr;
}

void Arrangement::validate_and_index() {
    std::set<Line> seen;
    for (size_t i = 0; i < lines_.size(); ++i) {
        if (!seen.insert(lines_[i]).second)
            throw DuplicateLineError("duplicate line at index " + std::to_string(i + 1) + ": " +
                                     lines_[i].str());
    }

    classes_.clear();
    for (size_t i = 0; i < lines_.size(); ++i)
        classes_[DirectionKey::of_normal(lines_[i].a, lines_[i].b)].push_back(int(i));
    if (classes_.size() < 2)
        throw NonEssentialError("arrangement is not essential: fewer than two line directions");

    // All pairwise intersections, merged by coincidence.
    std::map<std::pair<Rational, Rational>, std::set<int>> by_point;
    auto key_of = [](const Rational& x, const Rational& y) { return std::make_pair(x, y); };
    for (size_t i = 0; i < lines_.size(); ++i) {
        for (size_t j = i + 1; j < lines_.size(); ++j) {
            const Line &p = lines_[i], &q = lines_[j];
            Rational det = Rational(p.a) * Rational(q.b) - Rational(p.b) * Rational(q.a);
            if (det.is_zero()) continue;  // parallel
            Rational x = (Rational(p.b) * Rational(q.c) - Rational(p.c) * Rational(q.b)) / det;
            Rational y = (Rational(p.c) * Rational(q.a) - Rational(p.a) * Rational(q.c)) / det;
            auto& inc = by_point[key_of(x, y)];
            inc.insert(int(i));
            inc.insert(int(j));
        }
    }
    points_.clear();
    for (const auto& [xy, inc] : by_point) {
        AffinePoint pt;
        pt.x = xy.first;
        pt.y = xy.second;
        pt.incident.assign(inc.begin(), inc.end());
        points_.push_back(std::move(pt));
    }
}

DenseEdgeSet Arrangement::dense_edges() const {
    DenseEdgeSet d;
    for (const auto& pt : points_)
        if (pt.multiplicity() >= 3) d.affine_dense.push_back(pt);
    for (const auto& [key, members] : classes_)
        if (members.size() >= 2) d.infinity_dense.push_back(InfinityPoint{key, members});
    d.h_infinity_dense = true;
    return d;
}

std::array<long, 3> Arrangement::betti_numbers() const {
    long b2 = 0;
    for (const auto& pt : points_) b2 += long(pt.multiplicity()) - 1;
    return {1, long(lines_.size()), b2};
}

LaurentPoly Arrangement::q_half_monomial(const EdgeAtInfinity& x) const {
    std::vector<int> e(lines_.size(), -1);
    if (!x.is_h_infinity())
        for (int i : x.point.members) e[size_t(i)] += 1;
    return LaurentPoly::monomial(LaurentMonomial(std::move(e)));
}

Rational Arrangement::coordinate_bound() const {
    Rational bound(0);
    for (const auto& pt : points_) {
        bound = std::max(bound, pt.x.abs());
        bound = std::max(bound, pt.y.abs());
    }
    return bound;
}

}  // namespace chambercoh
