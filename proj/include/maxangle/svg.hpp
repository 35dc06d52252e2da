#pragma once

#include <string>

#include "maxangle/candidates.hpp"
#include "maxangle/pea.hpp"

namespace maxangle {

// Standalone SVG figure: the enclosing circle, the hull, the winning
// polygonization, filled extremal / open internal vertices, arc cut ticks,
// and (when a theorem report is supplied) the phi wedge at the pot's
// maximal pea. Output bytes are a pure function of the inputs.
std::string render_svg(const PointSet& s, const CandidateSet& cs,
                       const TheoremReport* rep = nullptr, const std::string& label = {});

void write_svg(const std::string& svg, const std::string& path);

}  // namespace maxangle
