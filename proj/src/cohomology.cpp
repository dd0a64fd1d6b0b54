#include "chambercoh/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace chambercoh {

MonodromyAssignment MonodromyAssignment::parse(const std::string& text, size_t expected_n) {
    std::istringstream in(text);
    std::string row;
    std::vector<std::vector<std::string>> rows;
    int line_no = 0;
    while (std::getline(in, row)) {
        ++line_no;
        auto hash = row.find('#');
        if (hash != std::string::npos) row.erase(hash);
        std::istringstream fields(row);
        std::vector<std::string> parts;
        std::string tok;
        while (fields >> tok) parts.push_back(tok);
        if (!parts.empty()) rows.push_back(std::move(parts));
    }
    if (rows.size() != 2 || rows[0].size() != 2 || rows[0][0] != "m" || rows[1].empty() ||
        rows[1][0] != "k")
        throw ParseError(line_no, "expected 'm <positive integer>' then 'k <n integers>'");
    MonodromyAssignment l;
    try {
        long m = std::stol(rows[0][1]);
        if (m <= 0) throw std::invalid_argument("m must be positive");
        l.m = unsigned(m);
        for (size_t i = 1; i < rows[1].size(); ++i) l.k.push_back(std::stol(rows[1][i]));
    } catch (const std::exception& e) {
        throw ParseError(line_no, std::string("bad .mono value: ") + e.what());
    }
    if (l.k.size() != expected_n)
        throw Error("monodromy has " + std::to_string(l.k.size()) + " entries, arrangement has " +
                    std::to_string(expected_n) + " lines");
    return l;
}

std::vector<Cyclotomic> MonodromyAssignment::half_twists() const {
    std::vector<Cyclotomic> t;
    for (long ki : k) t.push_back(Cyclotomic::zeta_pow(zeta_order(), ki));
    return t;
}

long MonodromyAssignment::k_infinity() const {
    return -std::accumulate(k.begin(), k.end(), 0L);
}

int rank_exact(std::vector<std::vector<Cyclotomic>> mat) {
    size_t rows = mat.size(), cols = rows ? mat[0].size() : 0;
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t piv = r;
        while (piv < rows && mat[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(mat[piv], mat[r]);
        Cyclotomic inv = mat[r][col].inverse();
        for (size_t i = r + 1; i < rows; ++i) {
            if (mat[i][col].is_zero()) continue;
            Cyclotomic factor = mat[i][col] * inv;
            for (size_t j = col; j < cols; ++j) mat[i][j] -= factor * mat[r][j];
        }
        ++r;
    }
    return int(r);
}

namespace {

long mod2m(long e, unsigned m) {
    long mod = 2L * long(m);
    long v = e % mod;
    return v < 0 ? v + mod : v;
}

// Exponent of zeta_2m in the value of one Laurent monomial.
long monomial_exponent(const LaurentMonomial& mono, const MonodromyAssignment& l) {
    long e = 0;
    for (size_t i = 0; i < mono.e.size(); ++i) e += long(mono.e[i]) * l.k[i];
    return mod2m(e, l.m);
}

}  // namespace

Cyclotomic eval_at_assignment(const LaurentPoly& p, const MonodromyAssignment& l) {
    unsigned order = l.zeta_order();
    Cyclotomic acc(order);
    for (const auto& [mono, coeff] : p.terms())
        acc += Cyclotomic::zeta_pow(order, monomial_exponent(mono, l)) * coeff;
    return acc;
}

std::vector<std::vector<Cyclotomic>> evaluate_matrix(const std::vector<std::vector<LaurentPoly>>& m,
                                                     const MonodromyAssignment& l) {
    // Precompute the power table once; entries sum a handful of roots.
    unsigned order = l.zeta_order();
    std::vector<Cyclotomic> powers;
    for (unsigned j = 0; j < order; ++j) powers.push_back(Cyclotomic::zeta_pow(order, j));
    std::vector<std::vector<Cyclotomic>> out;
    for (const auto& row : m) {
        std::vector<Cyclotomic> orow;
        for (const auto& p : row) {
            Cyclotomic acc(order);
            for (const auto& [mono, coeff] : p.terms())
                acc += powers[size_t(monomial_exponent(mono, l))] * coeff;
            orow.push_back(std::move(acc));
        }
        out.push_back(std::move(orow));
    }
    return out;
}

bool q_infinity_is_one(const MonodromyAssignment& l) {
    return mod2m(2 * l.k_infinity(), l.m) == 0;
}

bool q_edge_is_one(const InfinityPoint& x, const MonodromyAssignment& l) {
    long e = 2 * l.k_infinity();
    for (int i : x.members) e += 2 * l.k[size_t(i)];
    return mod2m(e, l.m) == 0;
}

bool q_point_is_one(const AffinePoint& p, const MonodromyAssignment& l) {
    long e = 0;
    for (int i : p.incident) e += 2 * l.k[size_t(i)];
    return mod2m(e, l.m) == 0;
}

bool q_line_is_one(size_t line, const MonodromyAssignment& l) {
    return mod2m(2 * l.k[line], l.m) == 0;
}

bool condition_cdo(const Arrangement& a, const MonodromyAssignment& l) {
    if (q_infinity_is_one(l)) return false;
    for (const auto& x : a.dense_edges().infinity_dense)
        if (q_edge_is_one(x, l)) return false;
    return true;
}

bool condition_dt(const Arrangement& a, const MonodromyAssignment& l, bool include_hyperplanes) {
    if (!condition_cdo(a, l)) return false;
    for (const auto& p : a.dense_edges().affine_dense)
        if (q_point_is_one(p, l)) return false;
    if (include_hyperplanes)
        for (size_t i = 0; i < a.size(); ++i)
            if (q_line_is_one(i, l)) return false;
    return true;
}

namespace {

std::vector<size_t> uch2_column_positions(const FlagDecomposition& dec) {
    std::vector<size_t> cols;
    for (size_t j = 0; j < dec.ch2.size(); ++j)
        if (std::find(dec.uch2.begin(), dec.uch2.end(), dec.ch2[j]) != dec.uch2.end())
            cols.push_back(j);
    return cols;
}

template <typename Entry>
std::vector<std::vector<Entry>> select_columns(const std::vector<std::vector<Entry>>& m,
                                               const std::vector<size_t>& cols) {
    std::vector<std::vector<Entry>> out;
    for (const auto& row : m) {
        std::vector<Entry> orow;
        for (size_t j : cols) orow.push_back(row[j]);
        out.push_back(std::move(orow));
    }
    return out;
}

}  // namespace

CohomologyReport cohomology_dims(const Arrangement& a, const ChamberSet& cs,
                                 const FlagDecomposition& dec, const CoboundaryMatrices& mats,
                                 const MonodromyAssignment& l, bool dt_include_hyperplanes) {
    if (l.k.size() != a.size())
        throw Error("monodromy dimension does not match the arrangement");
    CohomologyReport rep;
    auto d0 = evaluate_matrix({mats.d0}, l);
    auto d1 = evaluate_matrix(mats.d1, l);
    rep.rank_d0 = rank_exact(d0);
    rep.rank_d1 = rank_exact(d1);
    long n1 = long(dec.ch1.size()), n2 = long(dec.ch2.size());
    rep.h0 = 1 - rep.rank_d0;
    rep.h1 = n1 - rep.rank_d0 - rep.rank_d1;
    rep.h2 = n2 - rep.rank_d1;
    if (rep.h0 < 0 || rep.h1 < 0 || rep.h2 < 0)
        throw Error("inconsistent cohomology dimensions");

    auto ucols = uch2_column_positions(dec);
    rep.bounded_basis_holds =
        rank_exact(select_columns(d1, ucols)) == long(dec.uch2.size());

    rep.cdo_holds = condition_cdo(a, l);
    rep.dt_holds = condition_dt(a, l, dt_include_hyperplanes);
    rep.indecomposable = is_indecomposable(cs, dec);
    auto b = a.betti_numbers();
    rep.euler_check = (rep.h0 - rep.h1 + rep.h2) == (b[0] - b[1] + b[2]);
    return rep;
}

MainTheoremVerdict check_main_theorem(const Arrangement& a, const ChamberSet& cs,
                                      const FlagDecomposition& dec, const CoboundaryMatrices& mats,
                                      const MonodromyAssignment& l) {
    CohomologyReport rep = cohomology_dims(a, cs, dec, mats, l);
    MainTheoremVerdict v;
    v.indecomposable = rep.indecomposable;
    v.i = rep.cdo_holds;
    long bch = cs.bounded_count();
    v.ii = rep.h0 == 0 && rep.h1 == 0 && rep.h2 == bch && rep.bounded_basis_holds;
    v.iii = rep.bounded_basis_holds;
    v.implications_hold = (!v.i || v.ii) && (!v.ii || v.iii);
    v.equivalent = v.indecomposable && v.i == v.ii && v.ii == v.iii;
    return v;
}

CohomologyReport generic_rank_mode(const Arrangement& a, const ChamberSet& cs,
                                   const FlagDecomposition& dec, const CoboundaryMatrices& mats) {
    CohomologyReport rep;
    rep.generic = true;
    rep.rank_d0 = 0;
    for (const auto& p : mats.d0)
        if (!p.is_zero()) {
            rep.rank_d0 = 1;
            break;
        }
    rep.rank_d1 = symbolic_rank(mats.d1);
    long n1 = long(dec.ch1.size()), n2 = long(dec.ch2.size());
    rep.h0 = 1 - rep.rank_d0;
    rep.h1 = n1 - rep.rank_d0 - rep.rank_d1;
    rep.h2 = n2 - rep.rank_d1;
    auto ucols = uch2_column_positions(dec);
    rep.bounded_basis_holds =
        symbolic_rank(select_columns(mats.d1, ucols)) == long(dec.uch2.size());
    // Every q_X is a nontrivial monomial in the t_i, hence generically != 1.
    rep.cdo_holds = true;
    rep.dt_holds = true;
    rep.indecomposable = is_indecomposable(cs, dec);
    auto b = a.betti_numbers();
    rep.euler_check = (rep.h0 - rep.h1 + rep.h2) == (b[0] - b[1] + b[2]);
    return rep;
}

std::vector<EdgeConditionStatus> edge_condition_survey(const Arrangement& a,
                                                       const MonodromyAssignment& l,
                                                       bool include_hyperplanes) {
    std::vector<EdgeConditionStatus> out;
    out.push_back({"H_infinity", q_infinity_is_one(l)});
    auto dense = a.dense_edges();
    for (const auto& x : dense.infinity_dense) {
        std::ostringstream name;
        name << "infinity point " << x.normal.str() << " lines {";
        for (size_t i = 0; i < x.members.size(); ++i)
            name << (i ? "," : "") << x.members[i] + 1;
        name << "}";
        out.push_back({name.str(), q_edge_is_one(x, l)});
    }
    for (const auto& p : dense.affine_dense) {
        std::ostringstream name;
        name << "point (" << p.x.str() << ", " << p.y.str() << ") lines {";
        for (size_t i = 0; i < p.incident.size(); ++i)
            name << (i ? "," : "") << p.incident[i] + 1;
        name << "}";
        out.push_back({name.str(), q_point_is_one(p, l)});
    }
    if (include_hyperplanes)
        for (size_t i = 0; i < a.size(); ++i)
            out.push_back({"line " + std::to_string(i + 1), q_line_is_one(i, l)});
    return out;
}

}  // namespace chambercoh
