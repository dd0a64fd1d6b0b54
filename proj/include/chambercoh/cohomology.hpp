#pragma once

#include "chambercoh/cochain.hpp"
#include "chambercoh/cyclotomic.hpp"

#include <string>
#include <vector>

namespace chambercoh {

// Torsion monodromy lambda_i = k_i / m; all arithmetic happens in Q(zeta_2m)
// so the half twists t_i = zeta_2m^{k_i} are exact.
struct MonodromyAssignment {
    unsigned m = 1;
    std::vector<long> k;

    // .mono format: "m <positive integer>" then "k <n integers>".
    static MonodromyAssignment parse(const std::string& text, size_t expected_n);
    static MonodromyAssignment trivial(size_t n) { return {1, std::vector<long>(n, 0)}; }

    unsigned zeta_order() const { return 2 * m; }
    std::vector<Cyclotomic> half_twists() const;
    long k_infinity() const;
};

// Exact rank over Q(zeta) by Gaussian elimination with field inverses.
int rank_exact(std::vector<std::vector<Cyclotomic>> mat);

// Evaluate a Laurent entry at t_i = zeta_2m^{k_i} by exponent arithmetic.
Cyclotomic eval_at_assignment(const LaurentPoly& p, const MonodromyAssignment& l);
std::vector<std::vector<Cyclotomic>> evaluate_matrix(const std::vector<std::vector<LaurentPoly>>& m,
                                                     const MonodromyAssignment& l);

// q_X = 1 tests by integer exponent sums mod 2m, no field arithmetic.
bool q_infinity_is_one(const MonodromyAssignment& l);
bool q_edge_is_one(const InfinityPoint& x, const MonodromyAssignment& l);
bool q_point_is_one(const AffinePoint& p, const MonodromyAssignment& l);
bool q_line_is_one(size_t line, const MonodromyAssignment& l);

// q_X != 1 for every dense edge at infinity (H_infinity included).
bool condition_cdo(const Arrangement& a, const MonodromyAssignment& l);
// condition_cdo plus q != 1 at every affine dense point; with
// include_hyperplanes also q_i != 1 for every single line.
bool condition_dt(const Arrangement& a, const MonodromyAssignment& l, bool include_hyperplanes);

struct CohomologyReport {
    long h0 = 0, h1 = 0, h2 = 0;
    long rank_d0 = 0, rank_d1 = 0;
    bool cdo_holds = false;
    bool dt_holds = false;
    bool bounded_basis_holds = false;  // ch^1 -> uch^2 has full rank
    bool indecomposable = false;
    bool euler_check = false;
    bool generic = false;  // ranks taken over the symbolic fraction field
};

CohomologyReport cohomology_dims(const Arrangement& a, const ChamberSet& cs,
                                 const FlagDecomposition& dec, const CoboundaryMatrices& mats,
                                 const MonodromyAssignment& l, bool dt_include_hyperplanes = true);

struct MainTheoremVerdict {
    bool indecomposable = false;
    bool i = false, ii = false, iii = false;
    bool equivalent = false;        // meaningful only when indecomposable
    bool implications_hold = false; // (i => ii) and (ii => iii), any arrangement
};

MainTheoremVerdict check_main_theorem(const Arrangement& a, const ChamberSet& cs,
                                      const FlagDecomposition& dec, const CoboundaryMatrices& mats,
                                      const MonodromyAssignment& l);

// Ranks over the fraction field of the Laurent ring; the generic answer
// (0, 0, |chi|).
CohomologyReport generic_rank_mode(const Arrangement& a, const ChamberSet& cs,
                                   const FlagDecomposition& dec, const CoboundaryMatrices& mats);

// Human-readable survey of every dense-edge condition, for check verdicts.
struct EdgeConditionStatus {
    std::string edge;
    bool q_is_one = false;
};
std::vector<EdgeConditionStatus> edge_condition_survey(const Arrangement& a,
                                                       const MonodromyAssignment& l,
                                                       bool include_hyperplanes);

}  // namespace chambercoh
