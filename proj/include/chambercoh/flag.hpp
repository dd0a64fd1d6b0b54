#pragma once

#include "chambercoh/chambers.hpp"

#include <vector>

namespace chambercoh {

struct AffineForm {
    Rational cx, cy, c0;
    Rational eval(const Rational& x, const Rational& y) const { return cx * x + cy * y + c0; }
};

// Generic flag F0 in F1 in R^2. F1 = {h2 = 0} with every vertex of the
// arrangement at h2 > 0; h1 restricts to the parameter along F1 and vanishes
// at F0, with every crossing at h1 > 0 and pairwise distinct.
struct Flag {
    std::pair<Int, Int> f1_direction;  // primitive direction of F1
    Rational f1_offset;                // F1 = {y - slope*x = offset} (slope = dir.second/dir.first)
    AffineForm h2;
    AffineForm h1;
    Rational f0x, f0y;

    std::vector<int> crossing_lines;    // line indices by increasing h1
    std::vector<Rational> crossing_tau; // matching parameter values
};

// Deterministic search over slopes 0, 1, -1, 1/2, -1/2, 2, -2, 1/3, -1/3, ...
// accepting the first direction that is parallel to no line and separates all
// vertices; throws after max_candidates rejections. skip_accepted > 0 skips
// that many valid flags first (used to test flag independence).
Flag choose_generic_flag(const Arrangement& a, int skip_accepted = 0, int max_candidates = 1000);

// Throws InvalidFlagError when the flag fails any genericity condition for a.
void validate_flag(const Arrangement& a, const Flag& f);

struct FlagDecomposition {
    int c0 = -1;                         // ch^0 = {C0}
    std::vector<int> ch1;                // by increasing h1 of the interval on F1
    std::vector<int> ch2;                // remaining chambers, canonical order
    std::vector<int> bch1, uch1, bch2, uch2;
    std::vector<std::vector<int>> walls1;  // per ch1 entry: one or two line indices

    bool in_ch1(int chamber) const;
};

// Partition of the chambers along the flag, with bounded/unbounded refinement
// and wall data read off the sorted crossings.
FlagDecomposition decompose(const Arrangement& a, const ChamberSet& cs, const Flag& f);

// Wall lines of a ch^1 chamber (two for a bounded interval, one for the last);
// throws when the chamber is not in ch^1.
std::vector<int> walls(const FlagDecomposition& dec, int chamber);

}  // namespace chambercoh
