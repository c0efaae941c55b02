#include "polypack/synth.hpp"

#include <algorithm>
#include <sstream>

#include "polypack/errors.hpp"

namespace polypack {

const char* to_string(FeatureKind k) {
  switch (k) {
    case FeatureKind::Body: return "body";
    case FeatureKind::ToothH: return "tooth_h";
    case FeatureKind::PocketH: return "pocket_h";
    case FeatureKind::RodV: return "rod_v";
    case FeatureKind::ChannelV: return "channel_v";
    case FeatureKind::PocketV: return "pocket_v";
    case FeatureKind::Nail: return "nail";
    case FeatureKind::NailerChannel: return "nailer_channel";
    case FeatureKind::NailerNotch: return "nailer_notch";
    case FeatureKind::Anchor: return "anchor";
  }
  return "?";
}

GadgetParams GadgetParams::defaults(int width, int height) {
  const int w = width, h = height;
  GadgetParams p;
  p.unit = 1;
  // Whitespace is dominated by eps * (W*H*(W+H+2)/2 + (W+H+3)*(W+H)).
  p.eps = Scalar(1, 4 * (w * h * (w + h + 2) + (w + h + 3) * (w + h + 2)));
  p.delta = p.eps / 128;
  p.notch_pitch = p.delta / (4 * (w + h + 2));
  p.micronotch_pitch = p.notch_pitch / (2 * (w + h + 1));
  p.nailer_notch_pitch = p.micronotch_pitch;
  p.protrusion_depth = p.eps * (std::max(w, h) + 2);
  p.nail_length = 2 * p.eps * (w + h + 3);
  p.copies = kShiftCopies;
  p.eps.canonicalize();
  return p;
}

Scalar protrusion_wiggle(const GadgetParams&) { return 0; }

namespace {

Scalar feature_width(int phase, const GadgetParams& p) {
  return phase >= 4 ? Scalar(p.micronotch_pitch / 4) : Scalar(p.notch_pitch / 4);
}

Scalar chamfer(const GadgetParams& p, int w, int h) { return p.eps * (w + h + 1); }

Scalar nail_end(const GadgetParams& p) { return 2 * p.unit + p.nail_length; }

// Outer extent of the small polygon beyond its unit body.
std::pair<Scalar, Scalar> small_extent(const GadgetParams& p, int phase) {
  Scalar f = feature_width(phase, p);
  Scalar ex = p.unit + p.protrusion_depth;
  Scalar ey = ex;
  if (phase >= 3) {
    Scalar s = nail_end(p);
    ex = std::max(ex, Scalar((s + f / 2) / 2));
    ey = std::max(ey, Scalar((s + 3 * f / 2) / 2));
  }
  return {ex, ey};
}

std::string fmt(const Scalar& v) {
  std::ostringstream os;
  os << v.get_str();
  return os.str();
}

}  // namespace

std::vector<ParamViolation> validate_params(const GadgetParams& p, int width, int height) {
  std::vector<ParamViolation> out;
  auto need = [&](bool ok, const char* rule, const std::string& detail) {
    if (!ok) out.push_back({rule, detail});
  };
  const int w = width, h = height;
  if (w < 1 || h < 1) {
    out.push_back({"grid-size", "width and height must be positive"});
    return out;
  }
  for (auto [name, v] : {std::pair{"unit", &p.unit}, {"eps", &p.eps}, {"notch_pitch", &p.notch_pitch},
                         {"micronotch_pitch", &p.micronotch_pitch},
                         {"protrusion_depth", &p.protrusion_depth}, {"nail_length", &p.nail_length},
                         {"nailer_notch_pitch", &p.nailer_notch_pitch}, {"delta", &p.delta}}) {
    if (sgn(*v) <= 0) out.push_back({"positive", std::string(name) + " must be > 0"});
  }
  if (!out.empty()) return out;

  need(p.copies == kShiftCopies, "copies",
       "shift copies must be 63 (every difference in [-31,31]), got " + std::to_string(p.copies));
  // Linear gaps eps*(x+1) strictly increase because eps > 0; checked above.
  need(p.notch_pitch >= 2 * p.micronotch_pitch * (w + h + 1), "group-pitch",
       "notch_pitch >= 2*micronotch_pitch*(W+H+1) keeps micronotch groups disjoint");
  need(p.delta >= 2 * (p.notch_pitch + 2 * p.micronotch_pitch) * (w + h + 2), "shift-separates-groups",
       "delta >= 2*(notch_pitch + 2*micronotch_pitch)*(W+H+2) keeps shift copies disjoint");
  need(p.eps >= 128 * p.delta, "whitespace-dominates-shift",
       "eps >= 128*delta so every gap clears the largest shift difference");
  need(31 * p.delta <= p.unit / 64, "shift-small",
       "31*delta <= unit/64 (largest shift small against the unit square)");
  need(p.delta >= 64 * p.nailer_notch_pitch, "shift-large",
       "delta >= 64*nailer_notch_pitch (shift large against nailer features)");
  need(p.nailer_notch_pitch >= p.micronotch_pitch, "nailer-pitch",
       "nailer_notch_pitch >= micronotch_pitch");
  need(protrusion_wiggle(p) < p.nailer_notch_pitch, "wiggle",
       "protrusion wiggle room must stay below the nailer notch spacing");
  need(p.protrusion_depth >= p.eps * (std::max(w, h) + 2), "protrusion-reach",
       "protrusion_depth >= eps*(max(W,H)+2) so protrusions bridge every gap");
  need(p.protrusion_depth <= p.unit / 8, "protrusion-short", "protrusion_depth <= unit/8");
  need(p.nail_length >= 2 * p.eps * (w + h + 3), "nail-reach",
       "nail_length >= 2*eps*(W+H+3) so the nail reaches past the chamfer");
  need(p.nail_length <= p.unit / 4, "nail-short", "nail_length <= unit/4");

  // Whitespace budget: area(B) - W*H*area(S) < area(S), bounded from the
  // container extents and the largest possible carve-out.
  {
    const GadgetParams& q = p;
    CanonicalFrame frame{5, w, h, q};
    Scalar max_x = 0, max_y = 0;
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) {
        Point b = frame.base(x, y);
        if (b.x > max_x) max_x = b.x;
        if (b.y > max_y) max_y = b.y;
      }
    auto [ex, ey] = small_extent(q, 5);
    Scalar big_area = (max_x + ex) * (max_y + 31 * q.delta + ey);
    Scalar f = feature_width(4, q);
    Scalar r = chamfer(q, w, h);
    Scalar carve = r * r / 2 +
                   Scalar(w * h * q.copies) * f * q.protrusion_depth +          // horizontal notches
                   Scalar(w * h) * 2 * f * (q.protrusion_depth + 32 * q.delta) +  // vertical lanes
                   Scalar(w * h * q.copies) * 3 * f * q.nail_length;              // nailer
    Scalar small_lb = q.unit * q.unit - carve;
    Scalar whitespace_ub = big_area - Scalar(w * h) * small_lb;
    need(whitespace_ub < small_lb, "whitespace-budget",
         "total whitespace bound " + fmt(whitespace_ub) + " must be < small polygon area " +
             fmt(small_lb));
  }
  return out;
}

Point CanonicalFrame::base(int x, int y) const {
  const GadgetParams& p = params;
  if (phase <= 1) return {p.unit * x, p.unit * y};
  Scalar bx = p.unit * x + p.eps * ((x + 1) * (x + 2) / 2) + p.notch_pitch * (y * (y + 1) / 2);
  Scalar by = p.unit * y + p.eps * ((y + 1) * (y + 2) / 2) + p.notch_pitch * (x * (x + 1) / 2);
  if (phase >= 4) {
    bx += p.micronotch_pitch * (x * y);
    by += p.micronotch_pitch * (x * y);
  }
  return {bx, by};
}

std::map<FeatureKind, int> GadgetPolygons::census() const {
  std::map<FeatureKind, int> m;
  for (const Feature& f : small_features) ++m[f.kind];
  return m;
}

int GadgetPolygons::count(FeatureKind k, int x, int y) const {
  int n = 0;
  for (const Feature& f : small_features)
    if (f.kind == k && f.x == x && f.y == y) ++n;
  return n;
}

std::size_t vertex_bound(int width, int height) {
  std::size_t cells = static_cast<std::size_t>(width) * height;
  return 64 * cells * cells * kShiftCopies;
}

Placement canonical_placement(int x, int y, std::optional<State> state, const CanonicalFrame& frame) {
  if (x < 0 || y < 0 || x >= frame.width || y >= frame.height)
    throw Error(ErrorKind::Domain, "cell outside the grid");
  Point b = frame.base(x, y);
  Placement pl = Placement::translation(b.x, b.y);
  if (state) {
    if (is_even(*state) != column_is_even(x))
      throw Error(ErrorKind::ParityMismatch,
                  std::string("state ") + to_string(*state) + " does not match column parity");
    pl.ty += frame.params.delta * shift_of(*state);
  }
  return pl;
}

std::vector<int> big_interface_deltas(const GridSatInstance&) {
  std::vector<int> out;
  for (State s : kEvenStates)
    if (allowed_anchor(s)) out.push_back(shift_of(s));
  return out;
}

namespace {

Point st_point(const Scalar& sigma, const Scalar& tau) {
  return {(sigma - tau) / 2, (sigma + tau) / 2};
}

class BoundaryWriter {
 public:
  void emit(FeatureKind k, std::initializer_list<Point> pts, int x = -1, int y = -1, int d = 0) {
    for (const Point& p : pts) emit_one(k, p, x, y, d);
  }
  void emit_one(FeatureKind k, const Point& p, int x = -1, int y = -1, int d = 0) {
    bool extend = !features_.empty() && features_.back().kind == k && features_.back().x == x &&
                  features_.back().y == y && features_.back().delta == d &&
                  features_.back().first + features_.back().count == poly_.vertices.size();
    if (extend) {
      ++features_.back().count;
    } else {
      features_.push_back({k, poly_.vertices.size(), 1, x, y, d});
    }
    poly_.vertices.push_back(p);
    poly_.tags.emplace_back(to_string(k));
  }
  Polygon take_polygon() { return std::move(poly_); }
  std::vector<Feature> take_features() { return std::move(features_); }

 private:
  Polygon poly_;
  std::vector<Feature> features_;
};

struct HPocket {
  Scalar top;
  Scalar depth;
  int x, y, d;
};

struct VEar {
  Scalar bottom;
  int d;
};

struct VLane {
  Scalar left;
  int x, y;
  std::vector<VEar> ears;
};

struct NailNotch {
  Scalar tip;
  int x, y, d;
};

struct Carving {
  std::vector<HPocket> h;
  std::vector<VLane> v;
  std::map<Scalar, std::vector<NailNotch>> nailer;  // keyed by channel offset
};

class SmallBuilder {
 public:
  SmallBuilder(int phase, const GridSatInstance& inst, const GadgetParams& p, TableVariant table)
      : phase_(phase), inst_(inst), p_(p), table_(table), frame_{phase, inst.width, inst.height, p},
        f_(feature_width(phase, p)), yh_(p.unit / 2), xv_(p.unit / 2) {}

  const CanonicalFrame& frame() const { return frame_; }
  Scalar tooth_top() const { return yh_; }
  Scalar feature() const { return f_; }

  // Offset taking the source copy's local frame into the target's, with the
  // target sitting `delta` shift quanta below the source.
  Point offset(int sx, int sy, int tx, int ty, int delta) const {
    Point a = frame_.base(sx, sy);
    Point b = frame_.base(tx, ty);
    return {a.x - b.x, a.y - b.y - p_.delta * delta};
  }

  Carving carve() const {
    Carving c;
    const int w = inst_.width, h = inst_.height;
    if (phase_ < 2) return c;

    // Horizontal notches: footprint of the left neighbour's tooth.
    auto add_h = [&](int x, int y, int d) {
      Point o = offset(x - 1, y, x, y, d);
      c.h.push_back({yh_ + o.y, p_.unit + p_.protrusion_depth + o.x, x, y, d});
    };
    // Vertical notches: footprint of the upper neighbour's rod and hook.
    auto lane_for = [&](int x, int y) -> VLane& {
      Point o = offset(x, y - 1, x, y, 0);
      for (VLane& l : c.v)
        if (l.x == x && l.y == y) return l;
      c.v.push_back({xv_ + o.x, x, y, {}});
      return c.v.back();
    };
    auto add_v = [&](int x, int y, int d) {
      Point o = offset(x, y - 1, x, y, d);
      lane_for(x, y).ears.push_back({p_.unit + p_.protrusion_depth + o.y, d});
    };
    auto add_nail = [&](int x, int y, int d) {
      Point o = offset(x, y, x + 1, y + 1, d);
      c.nailer[o.y - o.x].push_back({nail_end(p_) + o.x + o.y, x, y, d});
    };

    if (phase_ <= 3) {
      // One notch per column (horizontal) and per row (vertical); the row or
      // column coordinate is not yet encoded.
      for (int x = 0; x < w; ++x) add_h(x, 0, 0);
      for (int y = 0; y < h; ++y) add_v(0, y, 0);
    } else if (phase_ == 4) {
      for (int x = 0; x < w; ++x)
        for (int y = 0; y < h; ++y) add_h(x, y, 0);
      for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) add_v(x, y, 0);
    } else {
      for (int d : big_interface_deltas(inst_)) add_h(0, 0, d);
      for (int y = 0; y < h; ++y) {
        for (int x = 1; x < w; ++x) {
          EdgeClass cls = inst_.h_class(x - 1, y);
          for (State l : column_is_even(x - 1) ? std::vector<State>(kEvenStates.begin(), kEvenStates.end())
                                               : std::vector<State>(kOddStates.begin(), kOddStates.end()))
            for (State r : column_is_even(x) ? std::vector<State>(kEvenStates.begin(), kEvenStates.end())
                                             : std::vector<State>(kOddStates.begin(), kOddStates.end()))
              if (allowed_horizontal(l, r, cls, table_)) add_h(x, y, shift_of(r) - shift_of(l));
        }
      }
      for (int y = 1; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
          EdgeClass cls = inst_.v_class(x, y - 1);
          std::vector<int> ds;
          const auto states = column_is_even(x)
                                  ? std::vector<State>(kEvenStates.begin(), kEvenStates.end())
                                  : std::vector<State>(kOddStates.begin(), kOddStates.end());
          for (State u : states)
            for (State l : states)
              if (allowed_vertical(u, l, cls)) ds.push_back(shift_of(l) - shift_of(u));
          std::sort(ds.begin(), ds.end());
          ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
          for (int d : ds) add_v(x, y, d);
        }
      }
    }

    if (phase_ >= 3) {
      int span = phase_ == 5 ? (p_.copies - 1) / 2 : 0;
      for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
          for (int d = -span; d <= span; ++d) add_nail(x, y, d);
    }
    return c;
  }

  void write(BoundaryWriter& out, Carving c) const {
    const Scalar& u = p_.unit;
    const Scalar& L = p_.protrusion_depth;
    const Scalar f = f_;
    const bool nail = phase_ >= 3;
    const Scalar r = nail ? chamfer(p_, inst_.width, inst_.height) : Scalar(0);

    // Top edge, west to east, with the vertical lanes.
    out.emit(FeatureKind::Body, {{r, 0}});
    std::sort(c.v.begin(), c.v.end(), [](const VLane& a, const VLane& b) { return a.left < b.left; });
    for (VLane& lane : c.v) {
      std::sort(lane.ears.begin(), lane.ears.end(),
                [](const VEar& a, const VEar& b) { return a.bottom > b.bottom; });
      Scalar depth = lane.ears.front().bottom + f;
      out.emit(FeatureKind::ChannelV, {{lane.left, 0}, {lane.left, depth}, {lane.left + f, depth}},
               lane.x, lane.y);
      for (const VEar& e : lane.ears) {
        out.emit(FeatureKind::PocketV,
                 {{lane.left + f, e.bottom}, {lane.left + 2 * f, e.bottom},
                  {lane.left + 2 * f, e.bottom - f}, {lane.left + f, e.bottom - f}},
                 lane.x, lane.y, e.d);
      }
      out.emit(FeatureKind::ChannelV, {{lane.left + f, 0}}, lane.x, lane.y);
    }

    // East edge with the horizontal tooth.
    out.emit(FeatureKind::Body, {{u, 0}});
    if (phase_ >= 2) {
      out.emit(FeatureKind::ToothH, {{u, yh_}, {u + L, yh_}, {u + L, yh_ + f}, {u, yh_ + f}});
    }

    // South-east corner, optionally with the nail and its hook.
    if (nail) {
      Scalar s = nail_end(p_);
      Scalar half = f / 2;
      out.emit(FeatureKind::Nail,
               {{u, u - half}, st_point(s, -half), st_point(s, half + f), st_point(s - f, half + f),
                st_point(s - f, half), {u - half, u}});
    } else {
      out.emit(FeatureKind::Body, {{u, u}});
    }

    // South edge, east to west, with the vertical rod and its hook.
    if (phase_ >= 2) {
      out.emit(FeatureKind::RodV, {{xv_ + f, u}, {xv_ + f, u + L - f}, {xv_ + 2 * f, u + L - f},
                                   {xv_ + 2 * f, u + L}, {xv_, u + L}, {xv_, u}});
    }
    out.emit(FeatureKind::Body, {{0, u}});

    // West edge, south to north, with the horizontal notches.
    std::sort(c.h.begin(), c.h.end(), [](const HPocket& a, const HPocket& b) { return a.top > b.top; });
    for (const HPocket& ph : c.h) {
      out.emit(FeatureKind::PocketH,
               {{0, ph.top + f}, {ph.depth, ph.top + f}, {ph.depth, ph.top}, {0, ph.top}}, ph.x, ph.y,
               ph.d);
    }

    // North-west chamfer with the nailer channels, from tau = r down to -r.
    if (nail) {
      out.emit(FeatureKind::Body, {{0, r}});
      for (auto it = c.nailer.rbegin(); it != c.nailer.rend(); ++it) {
        const Scalar& tau = it->first;
        auto notches = it->second;
        std::sort(notches.begin(), notches.end(),
                  [](const NailNotch& a, const NailNotch& b) { return a.tip < b.tip; });
        Scalar hi = tau + f / 2;
        Scalar lo = tau - f / 2;
        out.emit(FeatureKind::NailerChannel, {st_point(r, hi)});
        for (const NailNotch& n : notches) {
          out.emit(FeatureKind::NailerNotch,
                   {st_point(n.tip - f, hi), st_point(n.tip - f, hi + f), st_point(n.tip, hi + f),
                    st_point(n.tip, hi)},
                   n.x, n.y, n.d);
        }
        Scalar bottom = notches.back().tip + f;
        out.emit(FeatureKind::NailerChannel, {st_point(bottom, hi), st_point(bottom, lo), st_point(r, lo)});
      }
    }
  }

 private:
  int phase_;
  const GridSatInstance& inst_;
  const GadgetParams& p_;
  TableVariant table_;
  CanonicalFrame frame_;
  Scalar f_;
  Scalar yh_;
  Scalar xv_;
};

// Footprint of the nail alone, in the small polygon's frame.
Polygon nail_footprint(const GadgetParams& p, const Scalar& f) {
  Scalar s = nail_end(p);
  Scalar half = f / 2;
  Scalar back = 2 * p.unit - f;  // start just inside the body corner
  Polygon poly;
  poly.vertices = {st_point(back, -half), st_point(s, -half), st_point(s, half + f),
                   st_point(s - f, half + f), st_point(s - f, half), st_point(back, half)};
  return poly;
}

void check_simple(const Polygon& poly, const char* which) {
  SimplicityReport rep = is_simple(poly);
  if (!rep.simple) {
    std::ostringstream os;
    os << which << " polygon is not simple: " << rep.reason;
    if (rep.witness) os << " (edges " << rep.witness->first << ", " << rep.witness->second << ")";
    throw Error(ErrorKind::NonSimpleResult, os.str());
  }
  if (sgn(signed_area(poly)) <= 0)
    throw Error(ErrorKind::NonSimpleResult, std::string(which) + " polygon has non-positive area");
}

// The nail must clear the two copies it passes between, for every shift
// combination those copies can take.
void check_nail_clearance(const GadgetPolygons& g) {
  const CanonicalFrame& fr = g.frame;
  Polygon nail = nail_footprint(fr.params, feature_width(fr.phase, fr.params));
  PreparedPolygon small(g.small);
  auto shifts_for = [&](int x) -> std::vector<int> {
    if (fr.phase < 5) return {0};
    std::vector<int> out;
    for (State s : column_is_even(x) ? std::vector<State>(kEvenStates.begin(), kEvenStates.end())
                                     : std::vector<State>(kOddStates.begin(), kOddStates.end()))
      out.push_back(shift_of(s));
    return out;
  };
  for (int s0 : shifts_for(0)) {
    Point b0 = fr.base(0, 0);
    PreparedPolygon placed_nail(transform(nail, Placement::translation(b0.x, b0.y + fr.params.delta * s0)));
    for (auto [nx, ny] : {std::pair{1, 0}, std::pair{0, 1}}) {
      for (int s1 : shifts_for(nx)) {
        Point b1 = fr.base(nx, ny);
        Point rel{b1.x, b1.y + fr.params.delta * s1};
        // Move the nail into the neighbour's frame instead of moving the neighbour.
        Polygon local = transform(placed_nail.polygon(), Placement::translation(-rel.x, -rel.y));
        if (overlap_witness(PreparedPolygon(local), small))
          throw Error(ErrorKind::NonSimpleResult, "nail overlaps a neighbouring copy");
      }
    }
  }
}

}  // namespace

GadgetPolygons build_phase(int phase, const GridSatInstance& inst, const GadgetParams& params,
                           const BuildOptions& options) {
  if (phase < 1 || phase > 5) throw Error(ErrorKind::Domain, "phase must be in 1..5");
  auto report = validate_instance(inst);
  if (!report.empty()) throw Error(ErrorKind::Domain, "invalid instance: " + report.front().detail);
  auto violations = validate_params(params, inst.width, inst.height);
  if (!violations.empty()) {
    std::string msg = "parameter violation:";
    for (const auto& v : violations) msg += " [" + v.rule + "] " + v.detail + ";";
    throw Error(ErrorKind::ParamViolation, msg);
  }

  GadgetPolygons g;
  g.frame = {phase, inst.width, inst.height, params};
  const Scalar& u = params.unit;

  if (phase == 1) {
    g.small.vertices = {{0, 0}, {u, 0}, {u, u}, {0, u}};
    g.small.tags.assign(4, to_string(FeatureKind::Body));
    g.small_features = {{FeatureKind::Body, 0, 4}};
    Scalar bw = u * inst.width, bh = u * inst.height;
    g.big.vertices = {{0, 0}, {bw, 0}, {bw, bh}, {0, bh}};
    g.big.tags.assign(4, to_string(FeatureKind::Body));
    g.big_features = {{FeatureKind::Body, 0, 4}};
    return g;
  }

  SmallBuilder builder(phase, inst, params, options.table);
  BoundaryWriter sw;
  builder.write(sw, builder.carve());
  g.small = sw.take_polygon();
  g.small_features = sw.take_features();

  // Container: bounding rectangle of every canonical copy at every shift,
  // plus the anchor tooth acting as the left neighbour of cell (0,0).
  Box sb = bounding_box(g.small);
  Scalar bw = 0, bh = 0;
  Scalar drop = phase == 5 ? Scalar(params.delta * kMaxShift) : Scalar(0);
  for (int y = 0; y < inst.height; ++y)
    for (int x = 0; x < inst.width; ++x) {
      Point b = g.frame.base(x, y);
      bw = std::max(bw, Scalar(b.x + sb.max_x));
      bh = std::max(bh, Scalar(b.y + drop + sb.max_y));
    }
  Point virt = g.frame.base(-1, 0);
  Scalar ty = virt.y + builder.tooth_top();
  Scalar tx = virt.x + u + params.protrusion_depth;
  Scalar f = builder.feature();
  BoundaryWriter bwriter;
  bwriter.emit(FeatureKind::Body, {{0, 0}, {bw, 0}, {bw, bh}, {0, bh}});
  bwriter.emit(FeatureKind::Anchor, {{0, ty + f}, {tx, ty + f}, {tx, ty}, {0, ty}});
  g.big = bwriter.take_polygon();
  g.big_features = bwriter.take_features();

  if (options.check_simple) {
    check_simple(g.small, "small");
    check_simple(g.big, "big");
  }
  if (phase >= 3) check_nail_clearance(g);
  return g;
}

}  // namespace polypack
