#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polypack/rational.hpp"

namespace polypack {

struct Point {
  Scalar x;
  Scalar y;
  bool operator==(const Point&) const = default;
};

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };
enum class Location { Inside, OnBoundary, Outside };

const char* to_string(Orientation o);
const char* to_string(Location l);

Orientation orientation(const Point& p, const Point& q, const Point& r);

/// Closed-segment intersection test.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

struct Polygon {
  std::vector<Point> vertices;
  /// Optional per-vertex gadget label; empty or one entry per vertex.
  std::vector<std::string> tags;

  std::size_t size() const { return vertices.size(); }
  const Point& at(std::size_t i) const { return vertices[i]; }
  const Point& next(std::size_t i) const { return vertices[(i + 1) % vertices.size()]; }
};

struct Box {
  Scalar min_x, min_y, max_x, max_y;
  bool overlaps(const Box& o) const {
    return min_x <= o.max_x && o.min_x <= max_x && min_y <= o.max_y && o.min_y <= max_y;
  }
  bool contains(const Box& o) const {
    return min_x <= o.min_x && o.max_x <= max_x && min_y <= o.min_y && o.max_y <= max_y;
  }
};

Box bounding_box(const Polygon& p);

/// Twice the shoelace sum halved: positive for counter-clockwise order.
Scalar signed_area(const Polygon& p);

struct SimplicityReport {
  bool simple = true;
  /// Offending edge pair (edge i joins vertex i and i+1).
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string reason;
};

/// Sweep over edges sorted by x; exact.
SimplicityReport is_simple(const Polygon& p);
/// All-pairs reference check.
SimplicityReport is_simple_naive(const Polygon& p);

/// Rigid motion: rotation by (c, s) with c^2 + s^2 = 1, then translation.
struct Placement {
  Scalar tx{0};
  Scalar ty{0};
  Scalar c{1};
  Scalar s{0};

  static Placement translation(Scalar x, Scalar y) { return {std::move(x), std::move(y), 1, 0}; }
  bool is_valid_rotation() const { return c * c + s * s == 1; }
  bool operator==(const Placement&) const = default;
};

Point apply(const Placement& pl, const Point& p);
/// Throws Error(InvalidRotation) if c^2 + s^2 != 1. Tags are carried over.
Polygon transform(const Polygon& p, const Placement& pl);

Location point_in_polygon(const Point& pt, const Polygon& p);

namespace detail {
/// Double approximation of a vertex; m bounds |x| and |y|.
struct Approx {
  double x, y, m;
};
/// Outward-rounded bounds of an edge in x, y and the diagonal axes x+y, y-x.
/// Disjoint envelopes imply disjoint edges; the converse is not claimed.
struct Envelope {
  double xmin, xmax, ymin, ymax, smin, smax, tmin, tmax;
  bool meets(const Envelope& o) const {
    return xmin <= o.xmax && o.xmin <= xmax && ymin <= o.ymax && o.ymin <= ymax && smin <= o.smax &&
           o.smin <= smax && tmin <= o.tmax && o.tmin <= tmax;
  }
};
Approx approx(const Point& p);
Envelope envelope(const Approx& a, const Approx& b);
}  // namespace detail

/// Polygon with precomputed edge boxes and a y-bucketed edge index for
/// repeated point location and boundary intersection queries.
class PreparedPolygon {
 public:
  explicit PreparedPolygon(Polygon p);

  const Polygon& polygon() const { return poly_; }
  const Box& box() const { return box_; }
  const Box& edge_box(std::size_t i) const { return edge_boxes_[i]; }
  std::size_t size() const { return poly_.size(); }
  const Point& a(std::size_t i) const { return poly_.vertices[i]; }
  const Point& b(std::size_t i) const { return poly_.next(i); }
  const detail::Approx& approx_a(std::size_t i) const { return approx_[i]; }
  const detail::Approx& approx_b(std::size_t i) const { return approx_[(i + 1) % approx_.size()]; }
  const detail::Envelope& envelope(std::size_t i) const { return envelopes_[i]; }

  Location locate(const Point& pt) const;
  /// Index of an edge containing `pt`, if any.
  std::optional<std::size_t> edge_through(const Point& pt) const;

 private:
  const std::vector<std::size_t>* bucket_for(const Scalar& y) const;

  Polygon poly_;
  Box box_;
  std::vector<Box> edge_boxes_;
  std::vector<detail::Approx> approx_;
  std::vector<detail::Envelope> envelopes_;
  std::vector<Scalar> bucket_bounds_;
  std::vector<std::vector<std::size_t>> buckets_;
};

/// Evidence of interior overlap or of an inner point escaping a container.
struct GeomWitness {
  Point point;
  std::optional<std::size_t> edge_a;
  std::optional<std::size_t> edge_b;
};

/// Open interiors intersect. Shared boundary does not count. Both polygons
/// must be simple with positive signed area.
std::optional<GeomWitness> overlap_witness(const PreparedPolygon& a, const PreparedPolygon& b);
bool interiors_overlap(const Polygon& a, const Polygon& b);

/// inner is a subset of the closure of outer; the witness is a point of
/// inner lying strictly outside outer.
std::optional<GeomWitness> escape_witness(const PreparedPolygon& outer, const PreparedPolygon& inner);
bool contains(const Polygon& outer, const Polygon& inner);

}  // namespace polypack
