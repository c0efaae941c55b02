#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polypack/geom.hpp"
#include "polypack/gridsat.hpp"
#include "polypack/semantics.hpp"

namespace polypack {

/// Numeric schedule of the gadget construction. All lengths are exact.
///
/// Scale hierarchy (each level must dominate the spread of the next):
///   unit >> eps (whitespace quantum) >> delta (shift quantum)
///        >> notch_pitch (group pitch) >> micronotch_pitch.
/// Protrusion and nail cross-sections are a quarter of the finest pitch in
/// use, so neighbouring micronotches always keep material between them.
struct GadgetParams {
  Scalar unit{1};
  Scalar eps;
  Scalar notch_pitch;
  Scalar micronotch_pitch;
  Scalar protrusion_depth;
  Scalar nail_length;
  Scalar nailer_notch_pitch;
  Scalar delta;
  int copies = kShiftCopies;

  static GadgetParams defaults(int width, int height);
  bool operator==(const GadgetParams&) const = default;
};

struct ParamViolation {
  std::string rule;
  std::string detail;
};

std::vector<ParamViolation> validate_params(const GadgetParams& p, int width, int height);

/// Slack of a protrusion inside its pocket along any pinned axis. Every
/// pocket is cut to the exact footprint of its protrusion, so this is zero.
Scalar protrusion_wiggle(const GadgetParams& p);

enum class FeatureKind {
  Body,
  ToothH,      // horizontal protrusion
  PocketH,     // horizontal (micro)notch
  RodV,        // vertical protrusion with its hook
  ChannelV,    // vertical inclusion lane
  PocketV,     // vertical (micro)notch
  Nail,
  NailerChannel,
  NailerNotch,
  Anchor,      // container tooth forcing the upper-left True condition
};

const char* to_string(FeatureKind k);

/// Run of consecutive boundary vertices belonging to one gadget.
/// For notches, (x, y) is the grid cell whose neighbour relation the notch
/// serves and `delta` the signed shift difference (0 before phase 5).
struct Feature {
  FeatureKind kind;
  std::size_t first = 0;
  std::size_t count = 0;
  int x = -1;
  int y = -1;
  int delta = 0;
};

/// Canonical translation of each grid cell before its state shift.
struct CanonicalFrame {
  int phase = 1;
  int width = 1;
  int height = 1;
  GadgetParams params;

  Point base(int x, int y) const;
};

struct GadgetPolygons {
  Polygon small;
  Polygon big;
  std::vector<Feature> small_features;
  std::vector<Feature> big_features;
  CanonicalFrame frame;

  std::map<FeatureKind, int> census() const;
  int count(FeatureKind k, int x, int y) const;
};

struct BuildOptions {
  TableVariant table = TableVariant::Filtered;
  /// Re-run the exact simplicity check on both polygons.
  bool check_simple = true;
};

/// Phase 1: unit squares in a rectangle. Phase 2: protrusions, inclusions and
/// graduated whitespace. Phase 3: nail and nailer. Phase 4: micronotch groups.
/// Phase 5: 63 shift copies programmed from this instance's edge classes.
/// Throws Error(ParamViolation) or Error(NonSimpleResult).
GadgetPolygons build_phase(int phase, const GridSatInstance& inst, const GadgetParams& params,
                           const BuildOptions& options = {});

/// Identity rotation; translation = base(x, y) + (0, shift * delta).
/// Throws Error(ParityMismatch) when the state parity disagrees with x.
Placement canonical_placement(int x, int y, std::optional<State> state, const CanonicalFrame& frame);

/// Notch deltas the container's anchor tooth accepts at (0,0).
std::vector<int> big_interface_deltas(const GridSatInstance& inst);

/// Vertex-count bound asserted by the tests: c * (W*H)^2 * copies, c = 64.
std::size_t vertex_bound(int width, int height);

}  // namespace polypack
