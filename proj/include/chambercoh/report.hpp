#pragma once

#include "chambercoh/testkit.hpp"

#include <json.hpp>

namespace chambercoh {

using Json = nlohmann::ordered_json;

Json arrangement_summary(const Arrangement& a);
Json chambers_json(const Arrangement& a, const ChamberSet& cs);
Json flag_json(const Flag& f);
Json decomposition_json(const ChamberSet& cs, const FlagDecomposition& dec);
Json matrices_json(const Arrangement& a, const FlagDecomposition& dec,
                   const CoboundaryMatrices& mats, const ReducedMatrix& red);
Json cohomology_json(const CohomologyReport& rep);
Json verdict_json(const MainTheoremVerdict& v);
Json suite_json(const SuiteSummary& s);

std::string chamber_label(int index);

}  // namespace chambercoh
