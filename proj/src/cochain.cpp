#include "chambercoh/cochain.hpp"

#include <algorithm>

namespace chambercoh {

int degree(const ChamberSet& cs, const FlagDecomposition& dec, int c_ch1, int c_ch2) {
    const std::vector<int> wall_lines = walls(dec, c_ch1);
    std::vector<int> s = sep(cs.at(c_ch1).sign, cs.at(c_ch2).sign);
    auto separates = [&](int line) {
        return std::binary_search(s.begin(), s.end(), line);
    };
    if (wall_lines.size() == 2) {
        bool h0 = separates(wall_lines[0]), h1 = separates(wall_lines[1]);
        if (h0 && h1) return 1;
        if (!h0 && !h1) return -1;
        return 0;
    }
    return separates(wall_lines[0]) ? 0 : -1;
}

LaurentPoly sep_factor(size_t nvars, const std::vector<int>& sep_indices) {
    std::vector<int> e(nvars, 0);
    for (int i : sep_indices) e[size_t(i)] = 1;
    LaurentMonomial m(std::move(e));
    return LaurentPoly::monomial(m) - LaurentPoly::monomial(m.inverse());
}

CoboundaryMatrices build_matrices(const Arrangement& a, const ChamberSet& cs,
                                  const FlagDecomposition& dec) {
    CoboundaryMatrices out;
    size_t n = a.size();
    const SignVector& s0 = cs.at(dec.c0).sign;
    for (int c : dec.ch1) out.d0.push_back(sep_factor(n, sep(s0, cs.at(c).sign)));
    for (int c : dec.ch1) {
        std::vector<LaurentPoly> row;
        for (int c2 : dec.ch2) {
            int deg = degree(cs, dec, c, c2);
            LaurentPoly entry(n);
            if (deg != 0)
                entry = sep_factor(n, sep(cs.at(c).sign, cs.at(c2).sign)) * Rational(deg);
            row.push_back(std::move(entry));
        }
        out.d1.push_back(std::move(row));
    }
    return out;
}

ReducedMatrix build_reduced(const Arrangement& a, const ChamberSet& cs,
                            const FlagDecomposition& dec, const CoboundaryMatrices& mats) {
    ReducedMatrix red;
    // Rows: bch1, narrow first, stable within each class.
    for (int pass = 0; pass < 2; ++pass)
        for (int c : dec.bch1)
            if (cs.at(c).narrow() == (pass == 0)) red.rows.push_back(c);
    for (int c : red.rows) red.cols.push_back(opposite(a, cs, c));

    // Column positions of uch2 chambers inside the full d1 column order.
    auto col_in_ch2 = [&](int chamber) {
        auto it = std::find(dec.ch2.begin(), dec.ch2.end(), chamber);
        if (it == dec.ch2.end()) throw std::logic_error("reduced column is not in ch^2");
        return size_t(it - dec.ch2.begin());
    };
    auto row_in_ch1 = [&](int chamber) {
        auto it = std::find(dec.ch1.begin(), dec.ch1.end(), chamber);
        return size_t(it - dec.ch1.begin());
    };
    for (int r : red.rows) {
        std::vector<LaurentPoly> row;
        for (int c : red.cols) row.push_back(mats.d1[row_in_ch1(r)][col_in_ch2(c)]);
        red.m.push_back(std::move(row));
    }
    return red;
}

namespace {

// Fraction-free elimination with full pivoting. Returns the number of pivots;
// when det_out is non-null the input must be square and the signed last pivot
// (the determinant) is stored there.
int bareiss(std::vector<std::vector<LaurentPoly>>& m, LaurentPoly* det_out, size_t nvars) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    LaurentPoly prev = LaurentPoly::constant(nvars, Rational(1));
    int sign = 1;
    size_t k = 0;
    for (; k < std::min(rows, cols); ++k) {
        size_t pi = k, pj = k;
        bool found = false;
        for (size_t i = k; i < rows && !found; ++i)
            for (size_t j = k; j < cols && !found; ++j)
                if (!m[i][j].is_zero()) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        if (pi != k) {
            std::swap(m[pi], m[k]);
            sign = -sign;
        }
        if (pj != k) {
            for (auto& row : m) std::swap(row[pj], row[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < rows; ++i) {
            for (size_t j = k + 1; j < cols; ++j)
                m[i][j] = LaurentPoly::exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = LaurentPoly(nvars);
        }
        prev = m[k][k];
    }
    if (det_out) {
        if (rows != cols) throw Error("determinant of a non-square matrix");
        if (k < rows)
            *det_out = LaurentPoly(nvars);
        else
            *det_out = prev * Rational(sign);
    }
    return int(k);
}

}  // namespace

LaurentPoly symbolic_det(const ReducedMatrix& red) {
    if (red.size() == 0) return LaurentPoly::constant(0, Rational(1));
    size_t nvars = red.m[0][0].nvars();
    auto work = red.m;
    LaurentPoly det(nvars);
    bareiss(work, &det, nvars);
    return det;
}

LaurentPoly predicted_det(const Arrangement& a, const ChamberSet& cs,
                          const FlagDecomposition& dec) {
    LaurentPoly prod = LaurentPoly::constant(a.size(), Rational(1));
    for (int c : dec.bch1) {
        LaurentPoly mono = a.q_half_monomial(*cs.at(c).x_infinity);
        const LaurentMonomial& m = mono.terms().begin()->first;
        prod *= LaurentPoly::monomial(m) - LaurentPoly::monomial(m.inverse());
    }
    return prod;
}

std::vector<std::pair<EdgeAtInfinity, int>> det_exponents(const Arrangement& a,
                                                          const ChamberSet& cs,
                                                          const FlagDecomposition& dec) {
    std::vector<std::pair<EdgeAtInfinity, int>> out;
    auto bump = [&](const EdgeAtInfinity& x) {
        for (auto& [edge, count] : out) {
            if (edge.is_h_infinity() != x.is_h_infinity()) continue;
            if (!edge.is_h_infinity() && !(edge.point.normal == x.point.normal)) continue;
            ++count;
            return;
        }
        out.emplace_back(x, 1);
    };
    for (int c : dec.bch1) bump(*cs.at(c).x_infinity);
    return out;
}

bool is_indecomposable(const ChamberSet& cs, const FlagDecomposition& dec) {
    long wide = 0;
    for (int c : dec.uch2)
        if (cs.at(c).wide()) ++wide;
    if (wide == 0 && !dec.uch2.empty())
        throw std::logic_error("uch^2 holds no wide chamber; decomposability dichotomy broken");
    return wide >= 2;
}

int symbolic_rank(std::vector<std::vector<LaurentPoly>> m) {
    if (m.empty() || m[0].empty()) return 0;
    return bareiss(m, nullptr, m[0][0].nvars());
}

}  // namespace chambercoh
