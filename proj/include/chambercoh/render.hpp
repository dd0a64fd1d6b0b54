#pragma once

#include "chambercoh/flag.hpp"

#include <optional>
#include <string>

namespace chambercoh {

// Static SVG of the arrangement: lines clipped to a box around the vertices,
// intersection points, chamber labels at witness points, and the flag overlay
// when given. Deterministic layout.
std::string render_svg(const Arrangement& a, const ChamberSet& cs,
                       const std::optional<Flag>& flag);

}  // namespace chambercoh
