#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "polypack/circuit.hpp"
#include "polypack/packcheck.hpp"
#include "polypack/synth.hpp"

namespace polypack {

using Json = nlohmann::ordered_json;

/// Parses text into JSON; throws Error(Parse) with the parser's position.
Json parse_json(std::string_view text);

// Every from_json throws Error(Parse) on a missing or mistyped field.

Json to_json(const GridSatInstance& inst);
GridSatInstance instance_from_json(const Json& j);

Json to_json(const Assignment& a);
Assignment assignment_from_json(const Json& j);

Json to_json(const Netlist& n);
Netlist netlist_from_json(const Json& j);

Json to_json(const LayoutHint& h);
LayoutHint layout_from_json(const Json& j);

Json to_json(const GadgetParams& p);
/// Missing fields fall back to `base`.
GadgetParams params_from_json(const Json& j, const GadgetParams& base);

Json to_json(const Polygon& p);
Polygon polygon_from_json(const Json& j);

/// {"phase","width","height","params","small","big","small_features","big_features"}
Json to_json(const GadgetPolygons& g);
GadgetPolygons polygons_from_json(const Json& j);

/// Array of {"tx","ty","c","s"}.
Json to_json(const PackingCertificate& c);
PackingCertificate certificate_from_json(const Json& j);

Json to_json(const PackingReport& r);
PackingReport report_from_json(const Json& j);

Json to_json(const std::vector<Violation>& v);
Json to_json(const std::vector<ParamViolation>& v);

Json to_json(const StateGrid& g);
StateGrid state_grid_from_json(const Json& j);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace polypack
