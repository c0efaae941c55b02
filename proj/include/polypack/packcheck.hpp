#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polypack/geom.hpp"
#include "polypack/gridsat.hpp"
#include "polypack/semantics.hpp"
#include "polypack/synth.hpp"

namespace polypack {

/// One placement per copy of the small polygon, row-major over the grid when
/// produced by canonical_certificate.
struct PackingCertificate {
  std::vector<Placement> placements;
  bool operator==(const PackingCertificate&) const = default;
};

enum class ViolationKind { NotContained, Overlap, NotSimple };
const char* to_string(ViolationKind k);

struct PackingViolation {
  ViolationKind kind;
  /// Copy indices involved; empty for NotSimple on the input polygons.
  std::vector<std::size_t> indices;
  std::optional<GeomWitness> witness;
  std::string detail;
};

struct PackingReport {
  bool valid = true;
  std::vector<PackingViolation> violations;
};

struct VerifyOptions {
  /// Stop at the first violation instead of collecting all of them.
  bool first_only = false;
};

/// Verifier bound to one (big, small) pair. Pairwise and containment results
/// are memoised by relative placement, which is exact: two copies at the same
/// relative offset and rotations overlap identically.
class PackingVerifier {
 public:
  PackingVerifier(Polygon big, Polygon small);
  ~PackingVerifier();
  PackingVerifier(const PackingVerifier&) = delete;
  PackingVerifier& operator=(const PackingVerifier&) = delete;

  PackingReport verify(const PackingCertificate& cert, const VerifyOptions& opts = {});

  const Polygon& big() const;
  const Polygon& small() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// valid iff every copy lies in `big` and no two copies share interior.
/// Throws Error(InvalidRotation).
PackingReport verify_packing(const Polygon& big, const Polygon& small, const PackingCertificate& cert,
                             const VerifyOptions& opts = {});

/// Placement per vertex from the states induced by `a` (row-major).
PackingCertificate canonical_certificate(const GridSatInstance& inst, const Assignment& a,
                                         const CanonicalFrame& frame);
PackingCertificate state_grid_certificate(const StateGrid& grid, const CanonicalFrame& frame);

struct ProbeOutcome {
  std::size_t copy = 0;
  std::string probe;  // e.g. "tx+", "rot(3/5,4/5)"
  Scalar magnitude;
  bool survived = false;
};

struct ProbeReport {
  std::size_t probes = 0;
  /// Perturbations above the wiggle allowance that still verified.
  std::vector<ProbeOutcome> survivors;
  /// Perturbations at or below the allowance that verified; expected.
  std::vector<ProbeOutcome> informational;
  bool ok() const { return survivors.empty(); }
};

/// Rational rotation with sine in [magnitude, 2*magnitude), generated by the
/// Gaussian integer (k + i)^2 for the largest suitable k.
Placement small_rotation(const Scalar& magnitude);

/// For every copy: translations by +-(m,0), +-(0,m) for each magnitude, and
/// three rotations about the copy's reference point, one per Pythagorean
/// triple (3/5,4/5), (5/13,12/13), (8/17,15/17) scaled toward the identity
/// until its sine is just above the smallest positive magnitude. A probe
/// that still verifies is a survivor when its magnitude exceeds `wiggle`.
ProbeReport perturbation_probe(const Polygon& big, const Polygon& small, const PackingCertificate& cert,
                               const std::vector<Scalar>& magnitudes, const Scalar& wiggle = 0);

struct InstanceOutcome {
  GridSatInstance instance;
  bool sat = false;
  bool sem = false;
  /// Every satisfying assignment's canonical certificate verified.
  bool geo_sound = true;
  std::size_t assignments_checked = 0;
  /// State-grid level completeness: certificates verify exactly for
  /// accepted state grids. Only run when width*height <= state_level_cells.
  std::optional<bool> state_level;
  std::size_t state_grids_checked = 0;
  std::string failure;

  bool agrees() const { return sat == sem && geo_sound && state_level.value_or(true); }
};

struct BatteryOptions {
  std::optional<GadgetParams> params;  // defaults(W, H) per instance when unset
  int state_level_cells = 6;
  int jobs = 1;
  TableVariant table = TableVariant::Filtered;
};

struct BatterySummary {
  std::vector<InstanceOutcome> outcomes;
  std::size_t agreements() const;
  bool all_agree() const { return agreements() == outcomes.size(); }
};

/// Throws Error(SizeLimitExceeded) when an instance exceeds the brute-force
/// vertex limit.
BatterySummary equivalence_battery(const std::vector<GridSatInstance>& instances,
                                   const BatteryOptions& opts = {});

/// Every satisfying assignment in lexicographic order.
std::vector<Assignment> all_solutions(const GridSatInstance& inst);

/// All edge classifications of a width x height grid (no AND gates).
std::vector<GridSatInstance> enumerate_instances(int width, int height);
/// Uniform random classes per edge from a seeded generator; AND gates are
/// placed where width allows with probability 1/8 per legal slot.
GridSatInstance random_instance(int width, int height, std::uint64_t seed);

/// Exhaustive instances for every grid up to max_w x max_h (at most 6
/// vertices), then `seeds` random rand_w x rand_h instances. Throws
/// Error(SizeLimitExceeded) beyond those limits or 24 random vertices.
std::vector<GridSatInstance> battery_instances(int max_w, int max_h, int seeds, int rand_w, int rand_h,
                                               std::uint64_t seed_base);

inline constexpr int kExhaustiveVertexLimit = 6;

}  // namespace polypack
