#include "polypack/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "polypack/errors.hpp"

namespace polypack {

namespace detail {

Approx approx(const Point& p) {
  double x = p.x.get_d(), y = p.y.get_d();
  return {x, y, std::max(std::abs(x), std::abs(y)) * (1 + 8 * std::numeric_limits<double>::epsilon()) + 1e-300};
}

Envelope envelope(const Approx& a, const Approx& b) {
  double sl = 8 * (std::numeric_limits<double>::epsilon() / 2) * std::max(a.m, b.m) + 1e-300;
  double sa = a.x + a.y, sb = b.x + b.y, ta = a.y - a.x, tb = b.y - b.x;
  return {std::min(a.x, b.x) - sl, std::max(a.x, b.x) + sl, std::min(a.y, b.y) - sl,
          std::max(a.y, b.y) + sl, std::min(sa, sb) - 2 * sl, std::max(sa, sb) + 2 * sl,
          std::min(ta, tb) - 2 * sl, std::max(ta, tb) + 2 * sl};
}

}  // namespace detail

const char* to_string(Orientation o) {
  switch (o) {
    case Orientation::CW: return "CW";
    case Orientation::Collinear: return "Collinear";
    case Orientation::CCW: return "CCW";
  }
  return "?";
}

const char* to_string(Location l) {
  switch (l) {
    case Location::Inside: return "Inside";
    case Location::OnBoundary: return "OnBoundary";
    case Location::Outside: return "Outside";
  }
  return "?";
}

namespace {

int orient(const Point& p, const Point& q, const Point& r) {
  Scalar d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sgn(d);
}

using detail::Approx;
using detail::Envelope;

constexpr double kUnit = std::numeric_limits<double>::epsilon() / 2;
constexpr double kTiny = 1e-300;

// Sign of orient(p, q, r) decided in doubles when the error bound allows,
// exactly otherwise. Approximations carry at most 2 ulp of input error.
int orient_fast(const Point& p, const Point& q, const Point& r, const Approx& pd, const Approx& qd,
                const Approx& rd) {
  double ax = qd.x - pd.x, ay = qd.y - pd.y, bx = rd.x - pd.x, by = rd.y - pd.y;
  double l = ax * by, rr = ay * bx;
  double det = l - rr;
  double e = 6 * kUnit * std::max({pd.m, qd.m, rd.m});
  double bound = (std::abs(ax) + std::abs(by) + std::abs(ay) + std::abs(bx)) * e + 2 * e * e +
                 4 * kUnit * (std::abs(l) + std::abs(rr));
  bound = 2 * bound + kTiny;
  if (det > bound) return 1;
  if (det < -bound) return -1;
  return orient(p, q, r);
}

// Sign of a - b.
int compare_fast(const Scalar& a, double ad, double am, const Scalar& b, double bd, double bm) {
  double slack = 6 * kUnit * std::max(am, bm) + kTiny;
  if (ad - bd > slack) return 1;
  if (bd - ad > slack) return -1;
  return cmp(a, b);
}

bool near(const Envelope& en, const Approx& pd) {
  double sp = 6 * kUnit * pd.m + kTiny;
  return pd.x + sp >= en.xmin && pd.x - sp <= en.xmax && pd.y + sp >= en.ymin && pd.y - sp <= en.ymax;
}

Envelope window_envelope(const Box& b) {
  Approx lo = detail::approx({b.min_x, b.min_y});
  Approx hi = detail::approx({b.max_x, b.max_y});
  double inf = std::numeric_limits<double>::infinity();
  double sl = 6 * kUnit * std::max(lo.m, hi.m) + kTiny;
  return {lo.x - sl, hi.x + sl, lo.y - sl, hi.y + sl, -inf, inf, -inf, inf};
}

bool within_box(const Point& p, const Point& q, const Point& r) {
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
         std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
}

// r lies on the closed segment pq.
bool on_segment(const Point& p, const Point& q, const Point& r) {
  return within_box(p, q, r) && orient(p, q, r) == 0;
}

Box segment_box(const Point& a, const Point& b) {
  return {std::min(a.x, b.x), std::min(a.y, b.y), std::max(a.x, b.x), std::max(a.y, b.y)};
}

Scalar dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
Point sub(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point midpoint(const Point& a, const Point& b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

// Location by crossing number against an edge subset that contains every
// edge whose closed y-range includes pt.y.
template <typename EdgeIdx, typename GetA, typename GetB>
Location locate_with(const Point& pt, const EdgeIdx& edges, GetA&& get_a, GetB&& get_b) {
  bool inside = false;
  for (std::size_t i : edges) {
    const Point& a = get_a(i);
    const Point& b = get_b(i);
    if (on_segment(a, b, pt)) return Location::OnBoundary;
    bool a_above = a.y > pt.y;
    bool b_above = b.y > pt.y;
    if (a_above == b_above) continue;
    // Half-open rule on y; pt must be strictly on the "inner" side.
    int o = orient(a, b, pt);
    if (b.y > a.y ? o > 0 : o < 0) inside = !inside;
  }
  return inside ? Location::Inside : Location::Outside;
}

bool adjacent(std::size_t i, std::size_t j, std::size_t n) {
  return (i + 1) % n == j || (j + 1) % n == i;
}

// Adjacent edges overlapping beyond their shared vertex.
bool adjacent_fold(const Polygon& p, std::size_t i, std::size_t j) {
  std::size_t n = p.size();
  if ((j + 1) % n == i) std::swap(i, j);  // now edge j follows edge i
  const Point& u = p.at(i);
  const Point& v = p.at(j);
  const Point& w = p.next(j);
  if (n == 3 && (i + 1) % n != j) return false;
  return orient(u, v, w) == 0 && dot(sub(v, u), sub(w, v)) < 0;
}

SimplicityReport basic_checks(const Polygon& p) {
  SimplicityReport r;
  if (p.size() < 3) {
    r.simple = false;
    r.reason = "fewer than 3 vertices";
    return r;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.at(i) == p.next(i)) {
      r.simple = false;
      r.witness = std::make_pair(i, i);
      r.reason = "zero-length edge";
      return r;
    }
  }
  return r;
}

SimplicityReport check_pair(const Polygon& p, std::size_t i, std::size_t j) {
  SimplicityReport r;
  std::size_t n = p.size();
  bool bad;
  if (adjacent(i, j, n)) {
    bad = adjacent_fold(p, i, j);
    if (n == 3 && !bad) bad = adjacent_fold(p, j, i);
  } else {
    bad = segments_intersect(p.at(i), p.next(i), p.at(j), p.next(j));
  }
  if (bad) {
    r.simple = false;
    r.witness = std::make_pair(std::min(i, j), std::max(i, j));
    r.reason = adjacent(i, j, n) ? "adjacent edges overlap" : "non-adjacent edges intersect";
  }
  return r;
}

}  // namespace

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  return static_cast<Orientation>(orient(p, q, r));
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return (o1 == 0 && within_box(a, b, c)) || (o2 == 0 && within_box(a, b, d)) ||
         (o3 == 0 && within_box(c, d, a)) || (o4 == 0 && within_box(c, d, b));
}

Box bounding_box(const Polygon& p) {
  Box b{p.at(0).x, p.at(0).y, p.at(0).x, p.at(0).y};
  for (const Point& v : p.vertices) {
    if (v.x < b.min_x) b.min_x = v.x;
    if (v.y < b.min_y) b.min_y = v.y;
    if (v.x > b.max_x) b.max_x = v.x;
    if (v.y > b.max_y) b.max_y = v.y;
  }
  return b;
}

Scalar signed_area(const Polygon& p) {
  Scalar twice = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point& a = p.at(i);
    const Point& b = p.next(i);
    twice += a.x * b.y - b.x * a.y;
  }
  return twice / 2;
}

SimplicityReport is_simple_naive(const Polygon& p) {
  SimplicityReport r = basic_checks(p);
  if (!r.simple) return r;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      SimplicityReport pr = check_pair(p, i, j);
      if (!pr.simple) return pr;
    }
  }
  return r;
}

SimplicityReport is_simple(const Polygon& p) {
  SimplicityReport r = basic_checks(p);
  if (!r.simple) return r;
  const std::size_t n = p.size();
  std::vector<Approx> ap;
  ap.reserve(n);
  for (const Point& v : p.vertices) ap.push_back(detail::approx(v));
  std::vector<Envelope> env;
  env.reserve(n);
  for (std::size_t i = 0; i < n; ++i) env.push_back(detail::envelope(ap[i], ap[(i + 1) % n]));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return env[a].xmin < env[b].xmin; });

  auto crosses = [&](std::size_t i, std::size_t j) {
    std::size_t i2 = (i + 1) % n, j2 = (j + 1) % n;
    const Point &a = p.at(i), &b = p.at(i2), &c = p.at(j), &d = p.at(j2);
    int o1 = orient_fast(a, b, c, ap[i], ap[i2], ap[j]);
    int o2 = orient_fast(a, b, d, ap[i], ap[i2], ap[j2]);
    if (o1 * o2 > 0) return false;
    int o3 = orient_fast(c, d, a, ap[j], ap[j2], ap[i]);
    int o4 = orient_fast(c, d, b, ap[j], ap[j2], ap[i2]);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return (o1 == 0 && within_box(a, b, c)) || (o2 == 0 && within_box(a, b, d)) ||
           (o3 == 0 && within_box(c, d, a)) || (o4 == 0 && within_box(c, d, b));
  };

  // Report the lexicographically smallest offending pair so the witness
  // matches the naive scan.
  std::optional<std::pair<std::size_t, std::size_t>> worst;
  SimplicityReport found;
  std::vector<std::size_t> active;
  for (std::size_t e : order) {
    std::erase_if(active, [&](std::size_t a) { return env[a].xmax < env[e].xmin; });
    for (std::size_t a : active) {
      if (!env[a].meets(env[e])) continue;
      bool bad;
      if (adjacent(a, e, n)) {
        bad = adjacent_fold(p, a, e) || (n == 3 && adjacent_fold(p, e, a));
      } else {
        bad = crosses(a, e);
      }
      if (!bad) continue;
      std::pair<std::size_t, std::size_t> w{std::min(a, e), std::max(a, e)};
      if (!worst || w < *worst) {
        worst = w;
        found.simple = false;
        found.witness = w;
        found.reason = adjacent(a, e, n) ? "adjacent edges overlap" : "non-adjacent edges intersect";
      }
    }
    active.push_back(e);
  }
  return worst ? found : r;
}

Point apply(const Placement& pl, const Point& p) {
  return {pl.c * p.x - pl.s * p.y + pl.tx, pl.s * p.x + pl.c * p.y + pl.ty};
}

Polygon transform(const Polygon& p, const Placement& pl) {
  if (!pl.is_valid_rotation()) {
    throw Error(ErrorKind::InvalidRotation, "rotation (c,s) must satisfy c^2 + s^2 = 1");
  }
  Polygon out;
  out.tags = p.tags;
  out.vertices.reserve(p.size());
  bool translation_only = pl.c == 1 && pl.s == 0;
  for (const Point& v : p.vertices) {
    out.vertices.push_back(translation_only ? Point{v.x + pl.tx, v.y + pl.ty} : apply(pl, v));
  }
  return out;
}

Location point_in_polygon(const Point& pt, const Polygon& p) {
  std::vector<std::size_t> all(p.size());
  std::iota(all.begin(), all.end(), 0);
  return locate_with(
      pt, all, [&](std::size_t i) -> const Point& { return p.at(i); },
      [&](std::size_t i) -> const Point& { return p.next(i); });
}

// --- PreparedPolygon --------------------------------------------------------

PreparedPolygon::PreparedPolygon(Polygon p) : poly_(std::move(p)) {
  box_ = bounding_box(poly_);
  const std::size_t n = poly_.size();
  edge_boxes_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) edge_boxes_.push_back(segment_box(a(i), b(i)));
  approx_.reserve(n);
  for (const Point& v : poly_.vertices) approx_.push_back(detail::approx(v));
  envelopes_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) envelopes_.push_back(detail::envelope(approx_a(i), approx_b(i)));

  std::vector<Scalar> ys;
  ys.reserve(n);
  for (const Point& v : poly_.vertices) ys.push_back(v.y);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  std::size_t target = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(double(n))));
  std::size_t step = std::max<std::size_t>(1, ys.size() / target);
  for (std::size_t i = 0; i < ys.size(); i += step) bucket_bounds_.push_back(ys[i]);
  if (bucket_bounds_.back() != ys.back()) bucket_bounds_.push_back(ys.back());
  std::size_t nb = bucket_bounds_.size() > 1 ? bucket_bounds_.size() - 1 : 1;
  buckets_.assign(nb, {});
  for (std::size_t i = 0; i < n; ++i) {
    const Box& eb = edge_boxes_[i];
    // Buckets [lo, hi] whose closed range meets [eb.min_y, eb.max_y].
    auto first = std::upper_bound(bucket_bounds_.begin(), bucket_bounds_.end(), eb.min_y);
    std::size_t k = first == bucket_bounds_.begin() ? 0 : (first - bucket_bounds_.begin()) - 1;
    if (k > 0 && bucket_bounds_[k] == eb.min_y) --k;
    for (; k < nb; ++k) {
      if (bucket_bounds_[k] > eb.max_y) break;
      buckets_[k].push_back(i);
    }
  }
}

const std::vector<std::size_t>* PreparedPolygon::bucket_for(const Scalar& y) const {
  if (y < box_.min_y || y > box_.max_y) return nullptr;
  auto it = std::upper_bound(bucket_bounds_.begin(), bucket_bounds_.end(), y);
  std::size_t k = it == bucket_bounds_.begin() ? 0 : (it - bucket_bounds_.begin()) - 1;
  if (k >= buckets_.size()) k = buckets_.size() - 1;
  return &buckets_[k];
}

Location PreparedPolygon::locate(const Point& pt) const {
  if (pt.x < box_.min_x || pt.x > box_.max_x) return Location::Outside;
  const auto* bucket = bucket_for(pt.y);
  if (bucket == nullptr) return Location::Outside;
  const Approx pd = detail::approx(pt);
  bool inside = false;
  for (std::size_t i : *bucket) {
    const Approx& ad = approx_a(i);
    const Approx& bd = approx_b(i);
    const Envelope& en = envelopes_[i];
    int oa = compare_fast(a(i).y, ad.y, ad.m, pt.y, pd.y, pd.m);
    int ob = compare_fast(b(i).y, bd.y, bd.m, pt.y, pd.y, pd.m);
    if (oa > 0 && ob > 0) continue;
    if (oa < 0 && ob < 0) continue;
    int o = 2;  // not yet computed
    if (near(en, pd)) {
      o = orient_fast(a(i), b(i), pt, ad, bd, pd);
      if (o == 0 && within_box(a(i), b(i), pt)) return Location::OnBoundary;
    }
    if ((oa > 0) == (ob > 0)) continue;
    if (o == 2) o = orient_fast(a(i), b(i), pt, ad, bd, pd);
    bool b_lower = ob > 0;  // b.y > pt.y >= a.y or the reverse
    if (b_lower ? o > 0 : o < 0) inside = !inside;
  }
  return inside ? Location::Inside : Location::Outside;
}

std::optional<std::size_t> PreparedPolygon::edge_through(const Point& pt) const {
  const auto* bucket = bucket_for(pt.y);
  if (bucket == nullptr) return std::nullopt;
  for (std::size_t i : *bucket)
    if (on_segment(a(i), b(i), pt)) return i;
  return std::nullopt;
}

// --- Boundary interaction ---------------------------------------------------

namespace {

struct Contacts {
  std::optional<GeomWitness> crossing;
  std::vector<std::vector<Point>> split_a;
  std::vector<std::vector<Point>> split_b;
  std::vector<std::size_t> cand_a;
  std::vector<std::size_t> cand_b;
};

Box intersect(const Box& u, const Box& v) {
  return {std::max(u.min_x, v.min_x), std::max(u.min_y, v.min_y), std::min(u.max_x, v.max_x),
          std::min(u.max_y, v.max_y)};
}

// Finds every contact between the boundaries of `pa` and `pb` restricted to
// edges meeting `window`. Stops early at the first proper crossing.
Contacts boundary_contacts(const PreparedPolygon& pa, const PreparedPolygon& pb, const Box& window,
                           bool all_a) {
  Contacts c;
  c.split_a.resize(pa.size());
  c.split_b.resize(pb.size());
  const Envelope win = window_envelope(window);
  for (std::size_t i = 0; i < pa.size(); ++i)
    if (all_a || pa.envelope(i).meets(win)) c.cand_a.push_back(i);
  for (std::size_t i = 0; i < pb.size(); ++i)
    if (pb.envelope(i).meets(win)) c.cand_b.push_back(i);

  struct Ev {
    double min_x;
    std::size_t idx;
    bool from_a;
  };
  std::vector<Ev> evs;
  evs.reserve(c.cand_a.size() + c.cand_b.size());
  for (std::size_t i : c.cand_a) evs.push_back({pa.envelope(i).xmin, i, true});
  for (std::size_t i : c.cand_b) evs.push_back({pb.envelope(i).xmin, i, false});
  std::sort(evs.begin(), evs.end(), [](const Ev& u, const Ev& v) { return u.min_x < v.min_x; });

  std::vector<std::size_t> act_a, act_b;
  for (const Ev& ev : evs) {
    const Envelope& eb = ev.from_a ? pa.envelope(ev.idx) : pb.envelope(ev.idx);
    auto& other = ev.from_a ? act_b : act_a;
    const PreparedPolygon& op = ev.from_a ? pb : pa;
    std::erase_if(other, [&](std::size_t k) { return op.envelope(k).xmax < eb.xmin; });
    for (std::size_t k : other) {
      if (!op.envelope(k).meets(eb)) continue;
      std::size_t ia = ev.from_a ? ev.idx : k;
      std::size_t ib = ev.from_a ? k : ev.idx;
      const Point& p1 = pa.a(ia);
      const Point& p2 = pa.b(ia);
      const Point& q1 = pb.a(ib);
      const Point& q2 = pb.b(ib);
      const Approx &d1 = pa.approx_a(ia), &d2 = pa.approx_b(ia);
      const Approx &e1 = pb.approx_a(ib), &e2 = pb.approx_b(ib);
      int o1 = orient_fast(p1, p2, q1, d1, d2, e1), o2 = orient_fast(p1, p2, q2, d1, d2, e2);
      if (o1 * o2 > 0) continue;
      int o3 = orient_fast(q1, q2, p1, e1, e2, d1), o4 = orient_fast(q1, q2, p2, e1, e2, d2);
      if (o3 * o4 > 0) continue;
      if (o1 * o2 < 0 && o3 * o4 < 0) {
        Point dp = sub(p2, p1), dq = sub(q2, q1), w = sub(q1, p1);
        Scalar t = (w.x * dq.y - w.y * dq.x) / (dp.x * dq.y - dp.y * dq.x);
        c.crossing = GeomWitness{{p1.x + t * dp.x, p1.y + t * dp.y}, ia, ib};
        return c;
      }
      auto add = [&](const Point& pt) {
        c.split_a[ia].push_back(pt);
        c.split_b[ib].push_back(pt);
      };
      if (o1 == 0 && within_box(p1, p2, q1)) add(q1);
      if (o2 == 0 && within_box(p1, p2, q2)) add(q2);
      if (o3 == 0 && within_box(q1, q2, p1)) add(p1);
      if (o4 == 0 && within_box(q1, q2, p2)) add(p2);
    }
    (ev.from_a ? act_a : act_b).push_back(ev.idx);
  }
  return c;
}

// Midpoints of the pieces of edge i of `p` cut at `cuts`.
std::vector<std::pair<Point, Point>> pieces(const PreparedPolygon& p, std::size_t i,
                                            std::vector<Point> cuts) {
  cuts.push_back(p.a(i));
  cuts.push_back(p.b(i));
  std::sort(cuts.begin(), cuts.end(), [](const Point& u, const Point& v) {
    return u.x < v.x || (u.x == v.x && u.y < v.y);
  });
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<std::pair<Point, Point>> out;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) out.emplace_back(cuts[k], cuts[k + 1]);
  return out;
}

// Interior of `p` along its edge i meets the interior of `q`.
std::optional<GeomWitness> edge_pokes_into(const PreparedPolygon& p, std::size_t i,
                                           const std::vector<Point>& cuts,
                                           const PreparedPolygon& q) {
  Point dir = sub(p.b(i), p.a(i));
  for (const auto& [u, v] : pieces(p, i, cuts)) {
    Point m = midpoint(u, v);
    Location loc = q.locate(m);
    if (loc == Location::Inside) return GeomWitness{m, i, std::nullopt};
    if (loc == Location::OnBoundary) {
      auto e = q.edge_through(m);
      // Shared boundary: both interiors lie on the same side iff the edges
      // run in the same direction (both polygons counter-clockwise).
      if (e && dot(dir, sub(q.b(*e), q.a(*e))) > 0) return GeomWitness{m, i, *e};
    }
  }
  return std::nullopt;
}

// Candidate edges worth probing: every edge with contacts, plus the first
// edge of each run of consecutive contact-free edges. Along such a run the
// boundary never meets the other polygon, so its location cannot change.
std::vector<std::size_t> probe_edges(const std::vector<std::size_t>& cand,
                                     const std::vector<std::vector<Point>>& split) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < cand.size(); ++k) {
    std::size_t i = cand[k];
    bool free_run = k > 0 && cand[k - 1] + 1 == i && split[i].empty() && split[cand[k - 1]].empty();
    if (!free_run) out.push_back(i);
  }
  return out;
}

}  // namespace

std::optional<GeomWitness> overlap_witness(const PreparedPolygon& a, const PreparedPolygon& b) {
  const Box& ba = a.box();
  const Box& bb = b.box();
  if (!(ba.min_x < bb.max_x && bb.min_x < ba.max_x && ba.min_y < bb.max_y && bb.min_y < ba.max_y))
    return std::nullopt;
  Box window = intersect(ba, bb);
  Contacts c = boundary_contacts(a, b, window, false);
  if (c.crossing) return c.crossing;
  for (std::size_t i : probe_edges(c.cand_a, c.split_a))
    if (auto w = edge_pokes_into(a, i, c.split_a[i], b)) return w;
  for (std::size_t i : probe_edges(c.cand_b, c.split_b))
    if (auto w = edge_pokes_into(b, i, c.split_b[i], a)) {
      w->edge_b = w->edge_a;
      w->edge_a.reset();
      return w;
    }
  return std::nullopt;
}

bool interiors_overlap(const Polygon& a, const Polygon& b) {
  return overlap_witness(PreparedPolygon(a), PreparedPolygon(b)).has_value();
}

std::optional<GeomWitness> escape_witness(const PreparedPolygon& outer,
                                          const PreparedPolygon& inner) {
  Contacts c = boundary_contacts(inner, outer, outer.box(), true);
  if (c.crossing) return c.crossing;
  for (std::size_t i : probe_edges(c.cand_a, c.split_a)) {
    for (const auto& [u, v] : pieces(inner, i, c.split_a[i])) {
      Point m = midpoint(u, v);
      if (outer.locate(m) == Location::Outside) return GeomWitness{m, i, std::nullopt};
    }
  }
  return std::nullopt;
}

bool contains(const Polygon& outer, const Polygon& inner) {
  return !escape_witness(PreparedPolygon(outer), PreparedPolygon(inner)).has_value();
}

}  // namespace polypack
