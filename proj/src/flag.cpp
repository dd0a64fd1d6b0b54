#include "chambercoh/flag.hpp"

#include <algorithm>
#include <set>

namespace chambercoh {

namespace {

// Slope candidates 0, 1, -1, 1/2, -1/2, 2, -2, 1/3, -1/3, 3, -3, ...
Rational slope_candidate(int i) {
    if (i == 0) return Rational(0);
    if (i <= 2) return i == 1 ? Rational(1) : Rational(-1);
    int j = i - 3;
    int k = j / 4 + 2;
    switch (j % 4) {
        case 0: return Rational(Int(1), Int(k));
        case 1: return -Rational(Int(1), Int(k));
        case 2: return Rational(k);
        default: return -Rational(k);
    }
}

struct Candidate {
    Rational slope;
    std::pair<Int, Int> dir;
};

Candidate candidate_at(int i) {
    Rational s = slope_candidate(i);
    return {s, {s.den(), s.num()}};
}

bool direction_ok(const Arrangement& a, const std::pair<Int, Int>& dir) {
    for (const Line& l : a.lines())
        if (l.a * dir.first + l.b * dir.second == 0) return false;  // parallel
    return true;
}

bool vertices_separated(const Arrangement& a, const Rational& slope) {
    std::set<Rational> values;
    for (const auto& p : a.intersection_points())
        if (!values.insert(p.y - slope * p.x).second) return false;
    return true;
}

Flag build_flag(const Arrangement& a, const Candidate& cand) {
    Flag f;
    f.f1_direction = cand.dir;
    // Tentative h2 = y - slope*x; F1 sits one unit below the lowest vertex.
    Rational min_v;
    bool first = true;
    for (const auto& p : a.intersection_points()) {
        Rational v = p.y - cand.slope * p.x;
        if (first || v < min_v) min_v = v;
        first = false;
    }
    f.f1_offset = min_v - Rational(1);
    f.h2 = AffineForm{-cand.slope, Rational(1), -f.f1_offset};

    // Parametrize F1 as P(tau) = (0, offset) + tau * dir and collect the
    // crossing parameters.
    Rational dx(cand.dir.first), dy(cand.dir.second);
    std::vector<std::pair<Rational, int>> crossings;
    for (size_t i = 0; i < a.size(); ++i) {
        const Line& l = a.lines()[i];
        Rational denom = Rational(l.a) * dx + Rational(l.b) * dy;
        Rational tau = -(Rational(l.b) * f.f1_offset + Rational(l.c)) / denom;
        crossings.emplace_back(tau, int(i));
    }
    std::sort(crossings.begin(), crossings.end());
    Rational tau0 = crossings.front().first - Rational(1);
    for (const auto& [tau, idx] : crossings) {
        f.crossing_tau.push_back(tau);
        f.crossing_lines.push_back(idx);
    }
    f.f0x = tau0 * dx;
    f.f0y = f.f1_offset + tau0 * dy;
    // tau as an affine form: tau(x, y) = (dx*x + dy*(y - offset)) / (dx^2 + dy^2).
    Rational nrm = dx * dx + dy * dy;
    f.h1 = AffineForm{dx / nrm, dy / nrm, -dy * f.f1_offset / nrm - tau0};
    return f;
}

}  // namespace

void validate_flag(const Arrangement& a, const Flag& f) {
    if (!direction_ok(a, f.f1_direction))
        throw InvalidFlagError("F1 is parallel to a line of the arrangement");
    for (const auto& p : a.intersection_points())
        if (!(f.h2.eval(p.x, p.y) > Rational(0)))
            throw InvalidFlagError("vertex not strictly on the positive side of F1");
    std::set<Rational> h2_values;
    for (const auto& p : a.intersection_points())
        if (!h2_values.insert(f.h2.eval(p.x, p.y)).second)
            throw InvalidFlagError("two vertices project equally onto h2");
    std::set<Rational> taus;
    for (size_t i = 0; i < f.crossing_tau.size(); ++i) {
        Rational tau = f.crossing_tau[i];
        if (!taus.insert(tau).second) throw InvalidFlagError("two crossings share an h1 value");
        Rational x = tau * Rational(f.f1_direction.first);
        Rational y = f.f1_offset + tau * Rational(f.f1_direction.second);
        if (!(f.h1.eval(x, y) > Rational(0)))
            throw InvalidFlagError("crossing not at h1 > 0");
        if (!a.lines()[size_t(f.crossing_lines[i])].eval(x, y).is_zero())
            throw InvalidFlagError("recorded crossing is not on its line");
    }
    if (std::set<int>(f.crossing_lines.begin(), f.crossing_lines.end()).size() != a.size())
        throw InvalidFlagError("flag crossing data does not cover every line");
    if (!f.h1.eval(f.f0x, f.f0y).is_zero()) throw InvalidFlagError("h1 does not vanish at F0");
    if (!f.h2.eval(f.f0x, f.f0y).is_zero()) throw InvalidFlagError("F0 is not on F1");
}

Flag choose_generic_flag(const Arrangement& a, int skip_accepted, int max_candidates) {
    int accepted = 0;
    for (int i = 0; i < max_candidates; ++i) {
        Candidate cand = candidate_at(i);
        if (!direction_ok(a, cand.dir)) continue;
        if (!vertices_separated(a, cand.slope)) continue;
        Flag f = build_flag(a, cand);
        validate_flag(a, f);
        if (accepted++ == skip_accepted) return f;
    }
    throw InvalidFlagError("no generic flag direction found after " +
                           std::to_string(max_candidates) + " candidates");
}

bool FlagDecomposition::in_ch1(int chamber) const {
    return std::find(ch1.begin(), ch1.end(), chamber) != ch1.end();
}

FlagDecomposition decompose(const Arrangement& a, const ChamberSet& cs, const Flag& f) {
    validate_flag(a, f);
    FlagDecomposition dec;
    Rational dx(f.f1_direction.first), dy(f.f1_direction.second);
    auto chamber_at_tau = [&](const Rational& tau) {
        Rational x = tau * dx, y = f.f1_offset + tau * dy;
        int idx = cs.index_of(sign_vector_at(a, x, y));
        if (idx < 0) throw std::logic_error("flag interval point not in any chamber");
        return idx;
    };

    dec.c0 = cs.index_of(sign_vector_at(a, f.f0x, f.f0y));
    if (dec.c0 < 0) throw std::logic_error("F0 not in any chamber");

    size_t n = a.size();
    for (size_t i = 0; i < n; ++i) {
        Rational rep = (i + 1 < n) ? (f.crossing_tau[i] + f.crossing_tau[i + 1]) / Rational(2)
                                   : f.crossing_tau[i] + Rational(1);
        int idx = chamber_at_tau(rep);
        dec.ch1.push_back(idx);
        if (i + 1 < n) {
            dec.walls1.push_back({f.crossing_lines[i], f.crossing_lines[i + 1]});
            dec.bch1.push_back(idx);
        } else {
            dec.walls1.push_back({f.crossing_lines[i]});
            dec.uch1.push_back(idx);
        }
    }

    std::set<int> used(dec.ch1.begin(), dec.ch1.end());
    used.insert(dec.c0);
    if (used.size() != n + 1) throw std::logic_error("flag intervals hit a repeated chamber");
    for (int i = 0; i < int(cs.size()); ++i) {
        if (used.count(i)) continue;
        dec.ch2.push_back(i);
        if (cs.at(i).bounded())
            dec.bch2.push_back(i);
        else
            dec.uch2.push_back(i);
    }
    return dec;
}

std::vector<int> walls(const FlagDecomposition& dec, int chamber) {
    for (size_t i = 0; i < dec.ch1.size(); ++i)
        if (dec.ch1[i] == chamber) return dec.walls1[i];
    throw Error("walls: chamber is not in ch^1");
}

}  // namespace chambercoh
