#include "polypack/packcheck.hpp"

#include <atomic>
#include <mutex>
#include <random>
#include <thread>
#include <unordered_map>

#include "polypack/errors.hpp"

namespace polypack {

const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::NotContained: return "NotContained";
    case ViolationKind::Overlap: return "Overlap";
    case ViolationKind::NotSimple: return "NotSimple";
  }
  return "?";
}

namespace {

bool is_identity(const Placement& p) { return p.c == 1 && sgn(p.s) == 0; }

std::string key_of(const Placement& p) {
  return p.tx.get_str() + "," + p.ty.get_str() + "," + p.c.get_str() + "," + p.s.get_str();
}

Box placed_box(const Box& b, const Placement& pl) {
  if (is_identity(pl)) return {b.min_x + pl.tx, b.min_y + pl.ty, b.max_x + pl.tx, b.max_y + pl.ty};
  Point cs[4] = {apply(pl, {b.min_x, b.min_y}), apply(pl, {b.max_x, b.min_y}),
                 apply(pl, {b.max_x, b.max_y}), apply(pl, {b.min_x, b.max_y})};
  Box out{cs[0].x, cs[0].y, cs[0].x, cs[0].y};
  for (const Point& p : cs) {
    out.min_x = std::min(out.min_x, p.x);
    out.min_y = std::min(out.min_y, p.y);
    out.max_x = std::max(out.max_x, p.x);
    out.max_y = std::max(out.max_y, p.y);
  }
  return out;
}

bool interiors_may_meet(const Box& a, const Box& b) {
  return a.min_x < b.max_x && b.min_x < a.max_x && a.min_y < b.max_y && b.min_y < a.max_y;
}

struct CachedResult {
  bool bad = false;
  std::optional<GeomWitness> witness;  // relative to the first copy's translation
};

GeomWitness shifted(GeomWitness w, const Scalar& dx, const Scalar& dy) {
  w.point.x += dx;
  w.point.y += dy;
  return w;
}

}  // namespace

struct PackingVerifier::Impl {
  Polygon big_poly;
  Polygon small_poly;
  PreparedPolygon big;
  Box small_box;
  std::optional<PackingViolation> not_simple;
  std::unordered_map<std::string, CachedResult> contain_cache;
  std::unordered_map<std::string, CachedResult> pair_cache;

  Impl(Polygon b, Polygon s)
      : big_poly(b), small_poly(std::move(s)), big(std::move(b)), small_box(bounding_box(small_poly)) {
    for (auto [poly, name] : {std::pair{&big_poly, "big"}, std::pair{&small_poly, "small"}}) {
      SimplicityReport r = is_simple(*poly);
      if (!r.simple) {
        not_simple = PackingViolation{ViolationKind::NotSimple, {}, std::nullopt,
                                      std::string(name) + " polygon: " + r.reason};
        break;
      }
      if (sgn(signed_area(*poly)) <= 0) {
        not_simple = PackingViolation{ViolationKind::NotSimple, {}, std::nullopt,
                                      std::string(name) + " polygon has non-positive area"};
        break;
      }
    }
  }
};

PackingVerifier::PackingVerifier(Polygon big, Polygon small)
    : impl_(std::make_unique<Impl>(std::move(big), std::move(small))) {}
PackingVerifier::~PackingVerifier() = default;
const Polygon& PackingVerifier::big() const { return impl_->big_poly; }
const Polygon& PackingVerifier::small() const { return impl_->small_poly; }

PackingReport PackingVerifier::verify(const PackingCertificate& cert, const VerifyOptions& opts) {
  Impl& m = *impl_;
  PackingReport rep;
  auto add = [&](PackingViolation v) {
    rep.valid = false;
    rep.violations.push_back(std::move(v));
    return opts.first_only;
  };
  for (const Placement& p : cert.placements)
    if (!p.is_valid_rotation()) throw Error(ErrorKind::InvalidRotation, "placement rotation is not unit length");
  if (m.not_simple && add(*m.not_simple)) return rep;

  const std::size_t n = cert.placements.size();
  std::vector<std::unique_ptr<PreparedPolygon>> placed(n);
  auto copy = [&](std::size_t i) -> const PreparedPolygon& {
    if (!placed[i]) placed[i] = std::make_unique<PreparedPolygon>(transform(m.small_poly, cert.placements[i]));
    return *placed[i];
  };
  std::vector<Box> boxes;
  boxes.reserve(n);
  for (const Placement& p : cert.placements) boxes.push_back(placed_box(m.small_box, p));

  for (std::size_t i = 0; i < n; ++i) {
    const Placement& p = cert.placements[i];
    std::string key = key_of(p);
    auto it = m.contain_cache.find(key);
    if (it == m.contain_cache.end()) {
      CachedResult r;
      r.witness = escape_witness(m.big, copy(i));
      r.bad = r.witness.has_value();
      it = m.contain_cache.emplace(key, std::move(r)).first;
    }
    if (it->second.bad &&
        add({ViolationKind::NotContained, {i}, it->second.witness, "copy leaves the container"}))
      return rep;
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!interiors_may_meet(boxes[i], boxes[j])) continue;
      const Placement& a = cert.placements[i];
      const Placement& b = cert.placements[j];
      bool rel = is_identity(a) && is_identity(b);
      std::string key = rel ? "T" + Scalar(b.tx - a.tx).get_str() + "," + Scalar(b.ty - a.ty).get_str()
                            : key_of(a) + "|" + key_of(b);
      auto it = m.pair_cache.find(key);
      if (it == m.pair_cache.end()) {
        CachedResult r;
        r.witness = overlap_witness(copy(i), copy(j));
        if (r.witness && rel) r.witness = shifted(*r.witness, -a.tx, -a.ty);
        r.bad = r.witness.has_value();
        it = m.pair_cache.emplace(key, std::move(r)).first;
      }
      if (it->second.bad) {
        std::optional<GeomWitness> w = it->second.witness;
        if (w && rel) w = shifted(*w, a.tx, a.ty);
        if (add({ViolationKind::Overlap, {i, j}, w, "copies share interior"})) return rep;
      }
    }
  }
  return rep;
}

PackingReport verify_packing(const Polygon& big, const Polygon& small, const PackingCertificate& cert,
                             const VerifyOptions& opts) {
  PackingVerifier v(big, small);
  return v.verify(cert, opts);
}

PackingCertificate state_grid_certificate(const StateGrid& grid, const CanonicalFrame& frame) {
  PackingCertificate cert;
  for (int y = 0; y < static_cast<int>(grid.size()); ++y)
    for (int x = 0; x < static_cast<int>(grid[y].size()); ++x)
      cert.placements.push_back(canonical_placement(x, y, grid[y][x], frame));
  return cert;
}

PackingCertificate canonical_certificate(const GridSatInstance& inst, const Assignment& a,
                                         const CanonicalFrame& frame) {
  if (a.width() != inst.width || a.height() != inst.height)
    throw Error(ErrorKind::Domain, "assignment does not cover the instance lattice");
  PackingCertificate cert;
  for (int y = 0; y < inst.height; ++y)
    for (int x = 0; x < inst.width; ++x) {
      std::optional<State> s;
      if (frame.phase == 5) s = state_of(a, x, y);
      cert.placements.push_back(canonical_placement(x, y, s, frame));
    }
  return cert;
}

// --- Perturbation probes ----------------------------------------------------

namespace {

// Rotation generated by the Gaussian integer (m + n i)^2, normalised.
Placement rotation_from(const mpz_class& m, const mpz_class& n) {
  mpz_class d = m * m + n * n;
  Placement p;
  p.c = mpq_class(m * m - n * n, d);
  p.s = mpq_class(2 * m * n, d);
  p.c.canonicalize();
  p.s.canonicalize();
  return p;
}

// Scale the generator (m, n) toward identity until the sine is at most
// twice `magnitude` while still at least `magnitude`.
Placement scaled_rotation(int m0, int n0, const Scalar& magnitude) {
  // sine = 2Mmn / (M^2 m^2 + n^2) ~ 2n / (M m); choose M = floor(2n / (m * magnitude)).
  mpq_class target = mpq_class(2 * n0) / (m0 * magnitude);
  mpz_class scale = target.get_num() / target.get_den();
  if (scale < 1) scale = 1;
  Placement p = rotation_from(scale * m0, n0);
  while (p.s < magnitude && scale > 1) {
    scale -= 1;
    p = rotation_from(scale * m0, n0);
  }
  return p;
}

Placement compose(const Placement& base, const Placement& rot) {
  // Rotate about the copy's reference point, then translate as before.
  Placement out;
  out.c = base.c * rot.c - base.s * rot.s;
  out.s = base.s * rot.c + base.c * rot.s;
  out.tx = base.tx;
  out.ty = base.ty;
  return out;
}

}  // namespace

Placement small_rotation(const Scalar& magnitude) { return scaled_rotation(1, 1, magnitude); }

ProbeReport perturbation_probe(const Polygon& big, const Polygon& small, const PackingCertificate& cert,
                               const std::vector<Scalar>& magnitudes, const Scalar& wiggle) {
  PackingVerifier verifier(big, small);
  ProbeReport rep;
  VerifyOptions first{true};
  auto run = [&](std::size_t i, const Placement& moved, std::string name, const Scalar& mag) {
    PackingCertificate c = cert;
    c.placements[i] = moved;
    bool survived = sgn(mag) != 0 && verifier.verify(c, first).valid;
    ++rep.probes;
    if (!survived) return;
    ProbeOutcome o{i, std::move(name), mag, true};
    (mag > wiggle ? rep.survivors : rep.informational).push_back(std::move(o));
  };
  // Pythagorean generators of (3/5,4/5), (5/13,12/13) and (15/17,8/17).
  const std::pair<int, int> triples[] = {{2, 1}, {3, 2}, {4, 1}};
  Scalar largest = 0;
  for (const Scalar& m : magnitudes) largest = std::max(largest, m);
  for (std::size_t i = 0; i < cert.placements.size(); ++i) {
    const Placement& p = cert.placements[i];
    for (const Scalar& m : magnitudes) {
      for (auto [dx, dy, name] : {std::tuple{1, 0, "tx+"}, std::tuple{-1, 0, "tx-"},
                                  std::tuple{0, 1, "ty+"}, std::tuple{0, -1, "ty-"}}) {
        Placement q = p;
        q.tx += m * dx;
        q.ty += m * dy;
        run(i, q, name, m);
      }
    }
    if (sgn(largest) == 0) continue;
    Scalar smallest = largest;
    for (const Scalar& m : magnitudes)
      if (sgn(m) > 0) smallest = std::min(smallest, m);
    for (auto [m0, n0] : triples) {
      Placement r = scaled_rotation(m0, n0, smallest);
      run(i, compose(p, r), "rot(" + r.c.get_str() + "," + r.s.get_str() + ")", r.s);
    }
  }
  return rep;
}

// --- Equivalence battery ----------------------------------------------------

std::size_t BatterySummary::agreements() const {
  std::size_t n = 0;
  for (const auto& o : outcomes) n += o.agrees();
  return n;
}

std::vector<Assignment> all_solutions(const GridSatInstance& inst) {
  const int n = inst.vertex_count();
  if (n > kBruteForceVertexLimit)
    throw Error(ErrorKind::SizeLimitExceeded, "solution enumeration limited to 24 vertices");
  std::vector<Assignment> out;
  Assignment a = Assignment::all(inst.width, inst.height, false);
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    for (int i = 0; i < n; ++i) a.set(i % inst.width, i / inst.width, (bits >> (n - 1 - i)) & 1u);
    if (check_assignment(inst, a).empty()) out.push_back(a);
  }
  return out;
}

std::vector<GridSatInstance> enumerate_instances(int width, int height) {
  std::vector<Vertex> hs, vs;
  for (int y = 0; y < height; ++y)
    for (int x = 0; x + 1 < width; ++x) hs.push_back({x, y});
  for (int y = 0; y + 1 < height; ++y)
    for (int x = 0; x < width; ++x) vs.push_back({x, y});
  const std::size_t edges = hs.size() + vs.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < edges; ++i) total *= 3;
  const EdgeClass classes[] = {EdgeClass::DontCare, EdgeClass::Wire, EdgeClass::Inverter};
  std::vector<GridSatInstance> out;
  for (std::size_t code = 0; code < total; ++code) {
    GridSatInstance inst;
    inst.width = width;
    inst.height = height;
    std::size_t c = code;
    for (std::size_t e = 0; e < edges; ++e, c /= 3) {
      EdgeClass cls = classes[c % 3];
      if (cls == EdgeClass::DontCare) continue;
      if (e < hs.size())
        inst.h_edges[hs[e]] = cls;
      else
        inst.v_edges[vs[e - hs.size()]] = cls;
    }
    out.push_back(std::move(inst));
  }
  return out;
}

GridSatInstance random_instance(int width, int height, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 2);
  const EdgeClass classes[] = {EdgeClass::DontCare, EdgeClass::Wire, EdgeClass::Inverter};
  GridSatInstance inst;
  inst.width = width;
  inst.height = height;
  for (int y = 0; y < height; ++y) {
    for (int x = 3; x < width; x += 2) {
      if (rng() % 8 == 0 && !inst.and_gates.count({x - 2, y})) inst.and_gates.insert({x, y});
    }
  }
  auto consumed = [&](int x, int y) {
    return inst.and_gates.count({x + 2, y}) || inst.and_gates.count({x + 1, y});
  };
  for (int y = 0; y < height; ++y)
    for (int x = 0; x + 1 < width; ++x) {
      EdgeClass c = classes[pick(rng)];
      if (c != EdgeClass::DontCare && !consumed(x, y)) inst.h_edges[{x, y}] = c;
    }
  for (int y = 0; y + 1 < height; ++y)
    for (int x = 0; x < width; ++x) {
      EdgeClass c = classes[pick(rng)];
      if (c != EdgeClass::DontCare) inst.v_edges[{x, y}] = c;
    }
  return inst;
}

std::vector<GridSatInstance> battery_instances(int max_w, int max_h, int seeds, int rand_w, int rand_h,
                                               std::uint64_t seed_base) {
  if (max_w < 0 || max_h < 0 || seeds < 0) throw Error(ErrorKind::Domain, "battery sizes must be non-negative");
  if (max_w * max_h > kExhaustiveVertexLimit)
    throw Error(ErrorKind::SizeLimitExceeded, "exhaustive enumeration is limited to 6 vertices");
  std::vector<GridSatInstance> out;
  for (int h = 1; h <= max_h; ++h)
    for (int w = 1; w <= max_w; ++w)
      for (auto& inst : enumerate_instances(w, h)) out.push_back(std::move(inst));
  if (seeds > 0) {
    if (rand_w < 1 || rand_h < 1) throw Error(ErrorKind::Domain, "random grid dimensions must be positive");
    if (rand_w * rand_h > kBruteForceVertexLimit)
      throw Error(ErrorKind::SizeLimitExceeded, "random battery instances are limited to 24 vertices");
    for (int s = 0; s < seeds; ++s) out.push_back(random_instance(rand_w, rand_h, seed_base + s));
  }
  return out;
}

namespace {

InstanceOutcome run_instance(const GridSatInstance& inst, const BatteryOptions& opts) {
  InstanceOutcome out;
  out.instance = inst;
  out.sat = solve_bruteforce(inst).has_value();
  out.sem = semantic_pack_exists(inst, opts.table).has_value();

  GadgetParams params = opts.params ? *opts.params : GadgetParams::defaults(inst.width, inst.height);
  BuildOptions build;
  build.table = opts.table;
  GadgetPolygons g = build_phase(5, inst, params, build);
  PackingVerifier verifier(g.big, g.small);
  VerifyOptions first{true};

  for (const Assignment& a : all_solutions(inst)) {
    ++out.assignments_checked;
    if (!verifier.verify(canonical_certificate(inst, a, g.frame), first).valid) {
      out.geo_sound = false;
      out.failure = "canonical certificate of a satisfying assignment does not verify";
      break;
    }
  }

  if (inst.vertex_count() <= opts.state_level_cells) {
    bool ok = true;
    for_each_state_grid(inst.width, inst.height, [&](const StateGrid& grid) {
      ++out.state_grids_checked;
      bool accepted = state_grid_accepted(inst, grid, opts.table);
      bool valid = verifier.verify(state_grid_certificate(grid, g.frame), first).valid;
      if (accepted != valid) {
        ok = false;
        if (out.failure.empty())
          out.failure = accepted ? "accepted state grid fails verification"
                                 : "rejected state grid verifies";
        return false;
      }
      return true;
    });
    out.state_level = ok;
  }
  if (out.sat != out.sem && out.failure.empty()) out.failure = "brute force and semantic search disagree";
  return out;
}

}  // namespace

BatterySummary equivalence_battery(const std::vector<GridSatInstance>& instances, const BatteryOptions& opts) {
  for (const auto& inst : instances)
    if (inst.vertex_count() > kBruteForceVertexLimit)
      throw Error(ErrorKind::SizeLimitExceeded, "battery instances are limited to 24 vertices");
  BatterySummary sum;
  sum.outcomes.resize(instances.size());
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < instances.size(); ++i) sum.outcomes[i] = run_instance(instances[i], opts);
    return sum;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < instances.size(); i = next++) {
        try {
          sum.outcomes[i] = run_instance(instances[i], opts);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return sum;
}

}  // namespace polypack
