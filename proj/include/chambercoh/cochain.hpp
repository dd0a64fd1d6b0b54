#pragma once

#include "chambercoh/flag.hpp"
#include "chambercoh/laurent.hpp"

#include <vector>

namespace chambercoh {

// deg(C, C') for C in ch^1, C' in ch^2, from the wall/separator case analysis:
// two walls H, H': +1 when both separate C from C', -1 when neither does,
// 0 otherwise; one wall H (the unbounded interval): -1 when H does not
// separate, 0 when it does.
int degree(const ChamberSet& cs, const FlagDecomposition& dec, int c_ch1, int c_ch2);

// (m - m^{-1}) for the separating-set monomial m = prod_{i in Sep} t_i.
LaurentPoly sep_factor(size_t nvars, const std::vector<int>& sep_indices);

struct CoboundaryMatrices {
    // d0[j] is the coefficient of ch1[j] in d(C0); d1[i][j] the coefficient of
    // ch2[j] in d(ch1[i]).
    std::vector<LaurentPoly> d0;
    std::vector<std::vector<LaurentPoly>> d1;
};

CoboundaryMatrices build_matrices(const Arrangement& a, const ChamberSet& cs,
                                  const FlagDecomposition& dec);

// Square restriction of d1 to rows bch^1 and columns uch^2 = iota(bch^1),
// rows ordered narrow-first and each column paired with its row through the
// involution.
struct ReducedMatrix {
    std::vector<int> rows;  // bch1 chamber ids
    std::vector<int> cols;  // opposite chamber ids, same order
    std::vector<std::vector<LaurentPoly>> m;

    size_t size() const { return rows.size(); }
};

ReducedMatrix build_reduced(const Arrangement& a, const ChamberSet& cs,
                            const FlagDecomposition& dec, const CoboundaryMatrices& mats);

// Exact determinant over the Laurent ring by fraction-free (Bareiss)
// elimination with full pivoting.
LaurentPoly symbolic_det(const ReducedMatrix& m);

// The closed form prod_{C in bch^1} (q_{X(C)}^{1/2} - q_{X(C)}^{-1/2}); agrees
// with symbolic_det up to sign.
LaurentPoly predicted_det(const Arrangement& a, const ChamberSet& cs,
                          const FlagDecomposition& dec);

// Exponent of each dense edge at infinity in the predicted determinant.
std::vector<std::pair<EdgeAtInfinity, int>> det_exponents(const Arrangement& a,
                                                          const ChamberSet& cs,
                                                          const FlagDecomposition& dec);

// A plane arrangement is decomposable exactly when uch^2 holds a single wide
// chamber. Zero wide chambers would break the dichotomy and is reported as an
// internal error.
bool is_indecomposable(const ChamberSet& cs, const FlagDecomposition& dec);

// Rank of a Laurent-polynomial matrix over the fraction field, fraction-free
// elimination with full pivoting; an entry counts as nonzero iff it is not the
// zero polynomial.
int symbolic_rank(std::vector<std::vector<LaurentPoly>> m);

}  // namespace chambercoh
