#pragma once

#include <string>
#include <vector>

#include "polypack/packcheck.hpp"
#include "polypack/synth.hpp"

namespace polypack {

/// Deterministic SVG: one <polygon> per copy, filled by its state shift, and
/// the big polygon outlined in black. Coordinates are decimal renderings of
/// the exact values and exist only in this output. `shifts` holds one entry
/// per placement (0 when unknown).
std::string render_svg(const GadgetPolygons& g, const PackingCertificate& cert, const std::vector<int>& shifts,
                       double pixels_per_unit = 400);

/// Shift of each canonical placement, recovered from its offset against the
/// frame base (row-major grid order).
std::vector<int> shifts_of(const PackingCertificate& cert, const CanonicalFrame& frame);

}  // namespace polypack
