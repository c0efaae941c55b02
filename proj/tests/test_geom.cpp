#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "polypack/errors.hpp"
#include "polypack/geom.hpp"

using namespace polypack;

namespace {

Point P(Scalar x, Scalar y) { return {std::move(x), std::move(y)}; }

Polygon poly(std::vector<Point> pts) {
  Polygon p;
  p.vertices = std::move(pts);
  return p;
}

Polygon rect(Scalar x0, Scalar y0, Scalar x1, Scalar y1) {
  return poly({P(x0, y0), P(x1, y0), P(x1, y1), P(x0, y1)});
}

Polygon unit_square() { return rect(0, 0, 1, 1); }

Scalar q(long n, long d) {
  Scalar v(n, d);
  v.canonicalize();
  return v;
}

// Random rational point on the unit circle from a Gaussian integer (a + bi)^2.
Placement pythagorean(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(-40, 40);
  int a = 0, b = 0;
  while (a == 0 && b == 0) a = pick(rng), b = pick(rng);
  long n = static_cast<long>(a) * a + static_cast<long>(b) * b;
  Placement pl;
  pl.c = q(static_cast<long>(a) * a - static_cast<long>(b) * b, n);
  pl.s = q(2L * a * b, n);
  pl.tx = q(pick(rng), 1 + std::abs(pick(rng)));
  pl.ty = q(pick(rng), 1 + std::abs(pick(rng)));
  return pl;
}

// Random polygon on a small integer grid; many of these self-intersect or
// contain collinear overlaps, which is the point.
Polygon random_polygon(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(3, 9), coord(0, 6);
  Polygon p;
  int n = len(rng);
  for (int i = 0; i < n; ++i) p.vertices.push_back(P(coord(rng), coord(rng)));
  return p;
}

// Star-shaped random polygon (simple by construction unless vertices collide).
Polygon random_star(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(3, 12), r(1, 20);
  int n = len(rng);
  Polygon p;
  const int dirs[][2] = {{1, 0}, {3, 1}, {1, 1}, {1, 3}, {0, 1}, {-1, 3}, {-1, 1}, {-3, 1},
                         {-1, 0}, {-3, -1}, {-1, -1}, {-1, -3}, {0, -1}, {1, -3}, {1, -1}, {3, -1}};
  std::vector<int> idx(16);
  for (int i = 0; i < 16; ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(n);
  std::sort(idx.begin(), idx.end());
  for (int i : idx) {
    int k = r(rng);
    p.vertices.push_back(P(dirs[i][0] * k, dirs[i][1] * k));
  }
  return p;
}

}  // namespace

TEST_CASE("orientation") {
  CHECK(orientation(P(0, 0), P(1, 0), P(0, 1)) == Orientation::CCW);
  CHECK(orientation(P(0, 0), P(1, 1), P(2, 2)) == Orientation::Collinear);
  CHECK(orientation(P(0, 0), P(0, 1), P(1, 0)) == Orientation::CW);
  // exact near-degenerate case that doubles get wrong
  Scalar tiny = q(1, 1000000007);
  tiny *= q(1, 1000000009);
  CHECK(orientation(P(0, 0), P(1, 1), P(2, 2 + tiny)) == Orientation::CCW);
}

TEST_CASE("segments_intersect is closed") {
  CHECK(segments_intersect(P(0, 0), P(2, 2), P(0, 2), P(2, 0)));
  CHECK(segments_intersect(P(0, 0), P(1, 0), P(1, 0), P(2, 5)));
  CHECK_FALSE(segments_intersect(P(0, 0), P(1, 0), P(2, 0), P(3, 0)));
  CHECK(segments_intersect(P(0, 0), P(2, 0), P(1, 0), P(3, 0)));
}

TEST_CASE("is_simple examples") {
  CHECK(is_simple(unit_square()).simple);
  auto bowtie = poly({P(0, 0), P(2, 2), P(2, 0), P(0, 2)});
  auto r = is_simple(bowtie);
  CHECK_FALSE(r.simple);
  REQUIRE(r.witness);
  CHECK(r.witness->first == 0);
  CHECK(r.witness->second == 2);
}

TEST_CASE("is_simple rejects degenerate polygons") {
  CHECK_FALSE(is_simple(poly({P(0, 0), P(1, 0)})).simple);
  CHECK_FALSE(is_simple(poly({P(0, 0), P(1, 0), P(1, 0), P(0, 1)})).simple);  // zero-length edge
  CHECK_FALSE(is_simple(poly({P(0, 0), P(2, 0), P(1, 0), P(1, 1)})).simple);  // backtracking edge
  CHECK_FALSE(is_simple(poly({P(0, 0), P(2, 0), P(2, 2), P(1, 0), P(0, 2)})).simple);  // vertex touches edge
}

TEST_CASE("orientation does not affect simplicity") {
  CHECK(is_simple(poly({P(0, 0), P(0, 1), P(1, 0)})).simple);
}

TEST_CASE("signed_area") {
  CHECK(signed_area(unit_square()) == 1);
  auto rev = unit_square();
  std::reverse(rev.vertices.begin(), rev.vertices.end());
  CHECK(signed_area(rev) == -1);
  CHECK(signed_area(poly({P(0, 0), P(1, 0), P(0, 1)})) == q(1, 2));
}

TEST_CASE("transform") {
  auto sq = unit_square();
  auto same = transform(sq, Placement{});
  CHECK(same.vertices == sq.vertices);

  Placement rot{0, 0, q(3, 5), q(4, 5)};
  CHECK(signed_area(transform(sq, rot)) == 1);

  auto moved = transform(sq, Placement::translation(2, 0));
  auto box = bounding_box(moved);
  CHECK(box.min_x == 2);
  CHECK(box.max_x == 3);
  CHECK(box.min_y == 0);
  CHECK(box.max_y == 1);

  try {
    transform(sq, Placement{0, 0, 1, 1});
    FAIL("expected InvalidRotation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidRotation);
  }
}

TEST_CASE("transform keeps tags") {
  auto sq = unit_square();
  sq.tags = {"a", "b", "c", "d"};
  CHECK(transform(sq, Placement::translation(1, 1)).tags == sq.tags);
}

TEST_CASE("point_in_polygon") {
  auto sq = unit_square();
  CHECK(point_in_polygon(P(q(1, 2), q(1, 2)), sq) == Location::Inside);
  CHECK(point_in_polygon(P(0, q(1, 2)), sq) == Location::OnBoundary);
  CHECK(point_in_polygon(P(1, 1), sq) == Location::OnBoundary);
  CHECK(point_in_polygon(P(2, 2), sq) == Location::Outside);
  CHECK(point_in_polygon(P(2, 0), sq) == Location::Outside);  // on the line of an edge
  auto l = poly({P(0, 0), P(3, 0), P(3, 1), P(1, 1), P(1, 3), P(0, 3)});
  CHECK(point_in_polygon(P(2, 2), l) == Location::Outside);
  CHECK(point_in_polygon(P(q(1, 2), 2), l) == Location::Inside);
  CHECK(PreparedPolygon(l).locate(P(q(1, 2), 2)) == Location::Inside);
}

TEST_CASE("interiors_overlap") {
  auto a = unit_square();
  CHECK_FALSE(interiors_overlap(a, rect(1, 0, 2, 1)));
  CHECK(interiors_overlap(a, rect(q(1, 2), q(1, 2), q(3, 2), q(3, 2))));
  CHECK_FALSE(interiors_overlap(a, rect(1, 1, 2, 2)));  // corner contact
  CHECK(interiors_overlap(a, a));
  CHECK(interiors_overlap(rect(0, 0, 3, 3), a));  // nested
  CHECK(interiors_overlap(a, rect(0, 0, 3, 3)));
  // cross shapes: no vertex of one inside the other
  CHECK(interiors_overlap(rect(0, 1, 3, 2), rect(1, 0, 2, 3)));
  // symmetric on a rotated pair
  auto r = transform(a, Placement{q(1, 2), 0, q(3, 5), q(4, 5)});
  CHECK(interiors_overlap(a, r) == interiors_overlap(r, a));
}

TEST_CASE("interiors_overlap agrees with point sampling") {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Polygon a = random_star(rng), b = random_star(rng);
    if (!is_simple(a).simple || !is_simple(b).simple) continue;
    Placement pl = Placement::translation(std::uniform_int_distribution<int>(-30, 30)(rng),
                                          std::uniform_int_distribution<int>(-30, 30)(rng));
    b = transform(b, pl);
    bool overlap = interiors_overlap(a, b);
    CHECK(overlap == interiors_overlap(b, a));
    // Sample points on a fine grid: any point strictly inside both proves overlap.
    PreparedPolygon pa(a), pb(b);
    bool sampled = false;
    for (int x = -90; x <= 90 && !sampled; ++x)
      for (int y = -90; y <= 90 && !sampled; ++y) {
        Point p = P(q(2 * x + 1, 2), q(2 * y + 1, 2));
        sampled = pa.locate(p) == Location::Inside && pb.locate(p) == Location::Inside;
      }
    if (sampled) CHECK(overlap);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("contains") {
  auto big = rect(0, 0, 3, 3);
  CHECK(contains(big, unit_square()));
  CHECK_FALSE(contains(big, rect(2, 2, 4, 4)));
  CHECK(contains(big, rect(0, 0, 1, 3)));  // shares boundary
  CHECK(contains(big, big));
  CHECK_FALSE(contains(unit_square(), big));
  // notch: the inner square straddles a slot in the container
  auto u = poly({P(0, 0), P(3, 0), P(3, 3), P(2, 3), P(2, 1), P(1, 1), P(1, 3), P(0, 3)});
  CHECK_FALSE(contains(u, rect(0, 2, 3, 3)));
  CHECK(contains(u, rect(0, 0, 3, 1)));
  // transitivity on nested squares
  auto mid = rect(0, 0, 2, 2);
  CHECK(contains(big, mid));
  CHECK(contains(mid, unit_square()));
  CHECK(contains(big, unit_square()));
}

TEST_CASE("is_simple agrees with the all-pairs reference on random polygons") {
  std::mt19937_64 rng(2024);
  int mismatches = 0, simple = 0;
  const int n = 3000;
  for (int i = 0; i < n; ++i) {
    Polygon p = i % 2 ? random_polygon(rng) : random_star(rng);
    auto fast = is_simple(p);
    auto slow = is_simple_naive(p);
    mismatches += fast.simple != slow.simple;
    if (!fast.simple && !slow.simple && fast.witness && slow.witness) mismatches += *fast.witness != *slow.witness;
    simple += slow.simple;
  }
  CHECK(mismatches == 0);
  CHECK(simple > 100);
  CHECK(simple < n - 100);
}

TEST_CASE("transform preserves area on random Pythagorean placements") {
  std::mt19937_64 rng(77);
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    Polygon p = random_star(rng);
    Placement pl = pythagorean(rng);
    REQUIRE(pl.is_valid_rotation());
    mismatches += signed_area(transform(p, pl)) != signed_area(p);
  }
  CHECK(mismatches == 0);
}
