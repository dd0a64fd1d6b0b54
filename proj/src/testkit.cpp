#include "chambercoh/testkit.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace chambercoh {

namespace {

// Bounded draws via modulo so results do not depend on the standard library's
// distribution implementations.
long draw(std::mt19937_64& rng, long lo, long hi) {
    return lo + long(rng() % uint64_t(hi - lo + 1));
}

Line random_line(std::mt19937_64& rng, int bound) {
    while (true) {
        long a = draw(rng, -bound, bound);
        long b = draw(rng, -bound, bound);
        long c = draw(rng, -bound, bound);
        if (a == 0 && b == 0) continue;
        return Line::normalized(Rational(a), Rational(b), Rational(c));
    }
}

}  // namespace

Arrangement random_arrangement(const GeneratorConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        int n = int(draw(rng, cfg.n_min, cfg.n_max));
        int planted = cfg.force_parallel_pairs + cfg.force_triple_points;
        int base = std::max(2, n - planted);

        std::vector<Line> lines;
        for (int i = 0; i < base; ++i) lines.push_back(random_line(rng, cfg.coeff_bound));

        bool bad = false;
        for (int p = 0; p < cfg.force_parallel_pairs && !bad; ++p) {
            const Line& src = lines[size_t(draw(rng, 0, long(lines.size()) - 1))];
            long c = draw(rng, -cfg.coeff_bound, cfg.coeff_bound);
            lines.push_back(Line{src.a, src.b, Int(c)});
        }
        for (int t = 0; t < cfg.force_triple_points && !bad; ++t) {
            // A fresh line through the intersection of two non-parallel ones.
            int tries = 16;
            while (tries-- > 0) {
                size_t i = size_t(draw(rng, 0, long(lines.size()) - 1));
                size_t j = size_t(draw(rng, 0, long(lines.size()) - 1));
                if (i == j) continue;
                const Line &p = lines[i], &q = lines[j];
                Rational det = Rational(p.a) * Rational(q.b) - Rational(p.b) * Rational(q.a);
                if (det.is_zero()) continue;
                Rational x = (Rational(p.b) * Rational(q.c) - Rational(p.c) * Rational(q.b)) / det;
                Rational y = (Rational(p.c) * Rational(q.a) - Rational(p.a) * Rational(q.c)) / det;
                long du = draw(rng, -cfg.coeff_bound, cfg.coeff_bound);
                long dv = draw(rng, -cfg.coeff_bound, cfg.coeff_bound);
                if (du == 0 && dv == 0) continue;
                // normal (dv, -du), through (x, y)
                Rational a(dv), b(-du);
                Rational c = -(a * x + b * y);
                Line cand = Line::normalized(a, b, c);
                if (std::find(lines.begin(), lines.end(), cand) != lines.end()) continue;
                lines.push_back(cand);
                break;
            }
            if (tries < 0) bad = true;
        }
        if (bad) continue;

        try {
            Arrangement a = Arrangement::from_lines(
                lines, "seed" + std::to_string(cfg.seed) + "#" + std::to_string(attempt));
            if (cfg.force_parallel_pairs > 0 && a.dense_edges().infinity_dense.empty()) continue;
            if (cfg.force_triple_points > 0 && a.dense_edges().affine_dense.empty()) continue;
            return a;
        } catch (const Error&) {
            continue;
        }
    }
    throw Error("random_arrangement: retries exhausted for seed " + std::to_string(cfg.seed));
}

std::pair<long, long> zaslavsky_oracle(const Arrangement& a) {
    long s = 0;
    for (const auto& p : a.intersection_points()) s += long(p.multiplicity()) - 1;
    long n = long(a.size());
    return {1 + n + s, 1 - n + s};
}

std::set<SignVector> sample_points_oracle(const Arrangement& a, int count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    Rational b = a.coordinate_bound();
    Int reach_z = b.num() / b.den() + 3;
    long reach = reach_z.get_si();
    std::set<SignVector> seen;
    for (int i = 0; i < count; ++i) {
        long d1 = draw(rng, 1, 4), d2 = draw(rng, 1, 4);
        Rational x(Int(draw(rng, -reach * d1, reach * d1)), Int(d1));
        Rational y(Int(draw(rng, -reach * d2, reach * d2)), Int(d2));
        try {
            seen.insert(sign_vector_at(a, x, y));
        } catch (const Error&) {
            // on a line; skip
        }
    }
    return seen;
}

bool SuiteSummary::ok() const { return total_failures() == 0; }

int SuiteSummary::total_failures() const {
    return zaslavsky_failures + involution_failures + dense_edge_match_failures +
           counting_failures + d_squared_failures + degree_sign_failures +
           reduced_shape_failures + det_failures + sample_failures + thm_vanishing_failures +
           thm_equivalence_failures + trivial_failures + euler_failures + bound_failures +
           metamorphic_failures;
}

namespace {

struct CaseContext {
    Arrangement a;
    ChamberSet cs;
    FlagDecomposition dec;
    CoboundaryMatrices mats;
};

void note(SuiteSummary& s, const std::string& msg) {
    if (s.messages.size() < 24) s.messages.push_back(msg);
}

bool same_edge(const EdgeAtInfinity& x, const EdgeAtInfinity& y) {
    if (x.is_h_infinity() != y.is_h_infinity()) return false;
    return x.is_h_infinity() || x.point.normal == y.point.normal;
}

void check_report_sanity(const CaseContext& cx, const CohomologyReport& rep, SuiteSummary& sum,
                         const std::string& tag) {
    auto b = cx.a.betti_numbers();
    if (!rep.euler_check) {
        ++sum.euler_failures;
        note(sum, tag + ": euler identity broken");
    }
    if (rep.h0 > b[0] || rep.h1 > b[1] || rep.h2 > b[2]) {
        ++sum.bound_failures;
        note(sum, tag + ": betti upper bound broken");
    }
}

MonodromyAssignment random_assignment(std::mt19937_64& rng, size_t n) {
    MonodromyAssignment l;
    l.m = unsigned(draw(rng, 2, 7));
    for (size_t i = 0; i < n; ++i) l.k.push_back(draw(rng, 0, 2L * l.m - 1));
    return l;
}

// Force q_X = 1 for one dense edge at infinity by adjusting a single k.
MonodromyAssignment planted_violation(std::mt19937_64& rng, const Arrangement& a,
                                      const EdgeAtInfinity& x) {
    MonodromyAssignment l = random_assignment(rng, a.size());
    long m = long(l.m);
    if (x.is_h_infinity()) {
        size_t j = a.size() - 1;
        long rest = 0;
        for (size_t i = 0; i + 1 < a.size(); ++i) rest += l.k[i];
        l.k[j] = ((-rest) % m + m) % m;
    } else {
        // q_X = q_members * q_inf: kill sum over the complement of members.
        std::vector<size_t> outside;
        for (size_t i = 0; i < a.size(); ++i)
            if (std::find(x.point.members.begin(), x.point.members.end(), int(i)) ==
                x.point.members.end())
                outside.push_back(i);
        size_t j = outside.back();
        long rest = 0;
        for (size_t i : outside)
            if (i != j) rest += l.k[i];
        l.k[j] = ((-rest) % m + m) % m;
    }
    return l;
}

void run_case(const CaseContext& cx, std::mt19937_64& rng, int assignments, int sample_points,
              SuiteSummary& sum) {
    const Arrangement& a = cx.a;
    const ChamberSet& cs = cx.cs;
    const FlagDecomposition& dec = cx.dec;
    const std::string tag = a.name();
    auto b = a.betti_numbers();

    auto [total, bounded] = zaslavsky_oracle(a);
    if (total != long(cs.size()) || bounded != cs.bounded_count() ||
        total != b[0] + b[1] + b[2]) {
        ++sum.zaslavsky_failures;
        note(sum, tag + ": zaslavsky count mismatch");
    }

    // Involution and the dense-edge characterization of {X(C)}.
    std::vector<EdgeAtInfinity> seen_edges;
    bool invol_ok = true;
    for (int i = 0; i < int(cs.size()); ++i) {
        if (cs.at(i).bounded()) continue;
        int j = opposite(a, cs, i);
        if (opposite(a, cs, j) != i) invol_ok = false;
        const EdgeAtInfinity& x = *cs.at(i).x_infinity;
        bool fresh = true;
        for (const auto& e : seen_edges) fresh = fresh && !same_edge(e, x);
        if (fresh) seen_edges.push_back(x);
    }
    if (!invol_ok) {
        ++sum.involution_failures;
        note(sum, tag + ": opposite is not an involution");
    }
    auto dense = a.dense_edges();
    bool has_hinf = false;
    size_t point_edges = 0;
    for (const auto& e : seen_edges) {
        if (e.is_h_infinity()) {
            has_hinf = true;
            continue;
        }
        ++point_edges;
        bool found = false;
        for (const auto& d : dense.infinity_dense) found = found || d.normal == e.point.normal;
        if (!found) {
            ++sum.dense_edge_match_failures;
            note(sum, tag + ": X(C) hit a non-dense direction");
        }
    }
    if (!has_hinf || point_edges != dense.infinity_dense.size()) {
        ++sum.dense_edge_match_failures;
        note(sum, tag + ": {X(C)} misses a dense edge at infinity");
    }

    // Counting: |ch^q| = b_q, iota bijections, flag independence in counts.
    bool counts_ok = long(dec.ch1.size()) == b[1] && long(dec.ch2.size()) == b[2] &&
                     dec.uch1.size() == 1 && dec.uch1[0] == opposite(a, cs, dec.c0) &&
                     long(dec.bch2.size()) == cs.bounded_count();
    std::set<int> uch2_set(dec.uch2.begin(), dec.uch2.end());
    std::set<int> image;
    for (int c : dec.bch1) image.insert(opposite(a, cs, c));
    counts_ok = counts_ok && image == uch2_set;
    try {
        Flag alt = choose_generic_flag(a, 1);
        FlagDecomposition dec2 = decompose(a, cs, alt);
        counts_ok = counts_ok && dec2.ch1.size() == dec.ch1.size() &&
                    dec2.ch2.size() == dec.ch2.size() && dec2.bch1.size() == dec.bch1.size() &&
                    dec2.uch2.size() == dec.uch2.size();
    } catch (const Error&) {
        counts_ok = false;
    }
    if (!counts_ok) {
        ++sum.counting_failures;
        note(sum, tag + ": flag decomposition counts broken");
    }

    // d1 . d0 = 0 in the Laurent ring.
    for (size_t j = 0; j < dec.ch2.size(); ++j) {
        LaurentPoly acc(a.size());
        for (size_t i = 0; i < dec.ch1.size(); ++i) acc += cx.mats.d0[i] * cx.mats.d1[i][j];
        if (!acc.is_zero()) {
            ++sum.d_squared_failures;
            note(sum, tag + ": d^2 != 0 at column " + std::to_string(j));
            break;
        }
    }

    // Wall-parallelism sign rule and the diagonal coefficient identity.
    for (int c : dec.bch1) {
        int cv = opposite(a, cs, c);
        auto wall_lines = walls(dec, c);
        const Line& w0 = a.lines()[size_t(wall_lines[0])];
        const Line& w1 = a.lines()[size_t(wall_lines[1])];
        bool parallel = (w0.a * w1.b - w0.b * w1.a) == 0;
        int deg = degree(cs, dec, c, cv);
        if (deg != (parallel ? -1 : 1)) {
            ++sum.degree_sign_failures;
            note(sum, tag + ": wall parallelism sign rule broken");
        }
        size_t i = size_t(std::find(dec.ch1.begin(), dec.ch1.end(), c) - dec.ch1.begin());
        size_t j = size_t(std::find(dec.ch2.begin(), dec.ch2.end(), cv) - dec.ch2.begin());
        if (i >= dec.ch1.size() || j >= dec.ch2.size()) {
            ++sum.degree_sign_failures;
            note(sum, tag + ": opposite of a bch^1 chamber escaped ch^2");
            continue;
        }
        LaurentPoly mono = a.q_half_monomial(*cs.at(c).x_infinity);
        const LaurentMonomial& mx = mono.terms().begin()->first;
        LaurentPoly expect = LaurentPoly::monomial(mx) - LaurentPoly::monomial(mx.inverse());
        if (!equal_up_to_sign(cx.mats.d1[i][j], expect)) {
            ++sum.degree_sign_failures;
            note(sum, tag + ": diagonal coefficient is not the X(C) factor");
        }
    }

    // Reduced matrix: narrow rows have a single nonzero entry, and wide rows
    // vanish on the other wide columns.
    ReducedMatrix red = build_reduced(a, cs, dec, cx.mats);
    bool shape_ok = true;
    for (size_t i = 0; i < red.size(); ++i) {
        bool row_narrow = cs.at(red.rows[i]).narrow();
        for (size_t j = 0; j < red.size(); ++j) {
            if (i == j) {
                if (red.m[i][j].is_zero()) shape_ok = false;
                continue;
            }
            bool col_wide = cs.at(red.cols[j]).wide();
            if (row_narrow && !red.m[i][j].is_zero()) shape_ok = false;
            if (!row_narrow && col_wide && !red.m[i][j].is_zero()) shape_ok = false;
        }
    }
    if (!shape_ok) {
        ++sum.reduced_shape_failures;
        note(sum, tag + ": reduced matrix block structure broken");
    }

    // Determinant factorization.
    ++sum.det_checked;
    LaurentPoly det = symbolic_det(red);
    LaurentPoly pred = predicted_det(a, cs, dec);
    if (!equal_up_to_sign(det, pred)) {
        ++sum.det_failures;
        note(sum, tag + ": det != predicted product");
    }

    // Point-sampling soundness.
    for (const auto& s : sample_points_oracle(a, sample_points, 7 + a.size())) {
        if (cs.index_of(s) < 0) {
            ++sum.sample_failures;
            note(sum, tag + ": sampled sign vector not enumerated");
            break;
        }
    }

    // Vanishing theorem: cdo-true assignments give (0, 0, |chi|).
    long chi = cs.bounded_count();
    int found = 0;
    for (int tries = 0; tries < 40 * assignments && found < assignments; ++tries) {
        MonodromyAssignment l = random_assignment(rng, a.size());
        if (!condition_cdo(a, l)) continue;
        ++found;
        ++sum.thm_vanishing_checked;
        CohomologyReport rep = cohomology_dims(a, cs, dec, cx.mats, l);
        check_report_sanity(cx, rep, sum, tag);
        if (rep.h0 != 0 || rep.h1 != 0 || rep.h2 != chi || !rep.bounded_basis_holds) {
            ++sum.thm_vanishing_failures;
            note(sum, tag + ": cdo assignment missed (0, 0, |chi|)");
        }
    }

    // Equivalence of (i), (ii), (iii) for indecomposable arrangements, with
    // violations planted at each dense edge at infinity in turn.
    if (is_indecomposable(cs, dec)) {
        std::vector<EdgeAtInfinity> edges = {EdgeAtInfinity::h_infinity()};
        for (const auto& d : dense.infinity_dense) edges.push_back(EdgeAtInfinity::at(d));
        for (int t = 0; t < assignments; ++t) {
            MonodromyAssignment l = t % 2 == 0
                                        ? random_assignment(rng, a.size())
                                        : planted_violation(rng, a, edges[size_t(t / 2) % edges.size()]);
            ++sum.thm_equivalence_checked;
            MainTheoremVerdict v = check_main_theorem(a, cs, dec, cx.mats, l);
            if (!(v.i == v.ii && v.ii == v.iii)) {
                ++sum.thm_equivalence_failures;
                note(sum, tag + ": verdicts (i), (ii), (iii) disagree");
            }
        }
    }

    // Trivial local system recovers the Betti numbers.
    CohomologyReport triv = cohomology_dims(a, cs, dec, cx.mats,
                                            MonodromyAssignment::trivial(a.size()));
    check_report_sanity(cx, triv, sum, tag);
    if (triv.h0 != b[0] || triv.h1 != b[1] || triv.h2 != b[2]) {
        ++sum.trivial_failures;
        note(sum, tag + ": trivial system != betti numbers");
    }

    // Half-twist sign flip t_j -> -t_j leaves dimensions unchanged.
    MonodromyAssignment l1 = random_assignment(rng, a.size());
    MonodromyAssignment l2 = l1;
    l2.k[size_t(draw(rng, 0, long(a.size()) - 1))] += long(l1.m);
    CohomologyReport r1 = cohomology_dims(a, cs, dec, cx.mats, l1);
    CohomologyReport r2 = cohomology_dims(a, cs, dec, cx.mats, l2);
    if (r1.h0 != r2.h0 || r1.h1 != r2.h1 || r1.h2 != r2.h2) {
        ++sum.metamorphic_failures;
        note(sum, tag + ": sign flip of a half twist changed dimensions");
    }
}

}  // namespace

GeneratorConfig suite_case_config(uint64_t seed, int i) {
    GeneratorConfig cfg;
    cfg.seed = seed + uint64_t(i) * 1000003ULL;
    cfg.force_parallel_pairs = (i % 3 == 1) ? 1 : 0;
    cfg.force_triple_points = (i % 3 == 2) ? 1 : 0;
    if (i % 12 == 0) cfg.force_parallel_pairs = cfg.force_triple_points = 1;
    return cfg;
}

SuiteSummary run_property_suite(uint64_t seed, int cases, int assignments, int sample_points) {
    SuiteSummary sum;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int i = 0; i < cases; ++i) {
        CaseContext cx{random_arrangement(suite_case_config(seed, i)), {}, {}, {}};
        cx.cs = enumerate_chambers(cx.a);
        Flag f = choose_generic_flag(cx.a);
        cx.dec = decompose(cx.a, cx.cs, f);
        cx.mats = build_matrices(cx.a, cx.cs, cx.dec);
        run_case(cx, rng, assignments, sample_points, sum);
        ++sum.cases;
    }
    return sum;
}

}  // namespace chambercoh
