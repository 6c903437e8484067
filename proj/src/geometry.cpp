#include "frcc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace frcc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

bool finite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

int orientation_sign(const Point& a, const Point& b, const Point& c) {
  const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return (v > 0.0) - (v < 0.0);
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orientation_sign(a, b, c);
  const int o2 = orientation_sign(a, b, d);
  const int o3 = orientation_sign(c, d, a);
  const int o4 = orientation_sign(c, d, b);
  return o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
}

// Even-odd crossing count, half-open edge rule. Boundary points are handled
// by an explicit distance test before this is consulted.
bool ring_crossings_odd(const Ring& r, const Point& p) {
  bool inside = false;
  const auto& v = r.vertices;
  const std::size_t n = v.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    if ((v[i].y > p.y) != (v[j].y > p.y)) {
      const double x_cross =
          (v[j].x - v[i].x) * (p.y - v[i].y) / (v[j].y - v[i].y) + v[i].x;
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

template <typename Fn>
void for_each_edge(const Ring& r, Fn&& fn) {
  const auto& v = r.vertices;
  const std::size_t n = v.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) fn(v[j], v[i]);
}

double distance_point_ring(const Point& p, const Ring& r) {
  double best = kInf;
  for_each_edge(r, [&](const Point& a, const Point& b) {
    best = std::min(best, distance_point_segment(p, a, b));
  });
  return best;
}

double distance_point_polygon_boundary(const Point& p, const Polygon& poly) {
  double best = distance_point_ring(p, poly.exterior);
  for (const Ring& h : poly.holes) best = std::min(best, distance_point_ring(p, h));
  return best;
}

bool polygon_contains(const Polygon& poly, const Point& p) {
  if (distance_point_polygon_boundary(p, poly) <= kBoundaryEps) return true;
  if (!ring_crossings_odd(poly.exterior, p)) return false;
  for (const Ring& h : poly.holes)
    if (ring_crossings_odd(h, p)) return false;
  return true;
}

double distance_point_polygon(const Point& p, const Polygon& poly) {
  if (polygon_contains(poly, p)) return 0.0;
  return distance_point_polygon_boundary(p, poly);
}

double ring_ring_min_edge_distance(const Ring& r1, const Ring& r2) {
  double best = kInf;
  for_each_edge(r1, [&](const Point& a, const Point& b) {
    for_each_edge(r2, [&](const Point& c, const Point& d) {
      best = std::min(best, distance_segment_segment(a, b, c, d));
    });
  });
  return best;
}

double polygon_polygon_distance(const Polygon& a, const Polygon& b) {
  if (polygon_contains(a, b.exterior.vertices.front())) return 0.0;
  if (polygon_contains(b, a.exterior.vertices.front())) return 0.0;
  double best = ring_ring_min_edge_distance(a.exterior, b.exterior);
  for (const Ring& h : a.holes)
    best = std::min(best, ring_ring_min_edge_distance(h, b.exterior));
  for (const Ring& h : b.holes)
    best = std::min(best, ring_ring_min_edge_distance(a.exterior, h));
  for (const Ring& ha : a.holes)
    for (const Ring& hb : b.holes)
      best = std::min(best, ring_ring_min_edge_distance(ha, hb));
  return best;
}

double point_polygon_or_point_distance(const Point& p, const Geometry& g) {
  return std::visit(
      [&](const auto& shape) -> double {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, Point>) {
          return distance_point_point(p, shape);
        } else if constexpr (std::is_same_v<T, Polygon>) {
          return distance_point_polygon(p, shape);
        } else {
          double best = kInf;
          for (const Polygon& poly : shape)
            best = std::min(best, distance_point_polygon(p, poly));
          return best;
        }
      },
      g);
}

void validate_ring(const Ring& r, const char* what) {
  const auto& v = r.vertices;
  require(v.size() >= 3, std::string(what) + ": ring needs at least 3 vertices");
  for (const Point& p : v)
    require(finite(p), std::string(what) + ": non-finite coordinate");
  require(v.front().x != v.back().x || v.front().y != v.back().y,
          std::string(what) + ": closing vertex must not repeat the first");
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool seen = false;
    for (std::size_t j = 0; j < i; ++j)
      if (v[i].x == v[j].x && v[i].y == v[j].y) seen = true;
    if (!seen) ++distinct;
  }
  require(distinct >= 3, std::string(what) + ": ring needs at least 3 distinct vertices");
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    require(a.x != b.x || a.y != b.y,
            std::string(what) + ": zero-length edge");
    for (std::size_t j = i + 1; j < n; ++j) {
      // Skip the two edges adjacent to edge i (shared endpoints are fine).
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      const Point& c = v[j];
      const Point& d = v[(j + 1) % n];
      require(distance_segment_segment(a, b, c, d) > 0.0,
              std::string(what) + ": self-intersecting ring");
    }
  }
}

bool ring_strictly_inside_ring(const Ring& inner, const Ring& outer) {
  for (const Point& p : inner.vertices) {
    if (!ring_crossings_odd(outer, p)) return false;
    if (distance_point_ring(p, outer) <= kBoundaryEps) return false;
  }
  return ring_ring_min_edge_distance(inner, outer) > 0.0;
}

void validate_polygon(const Polygon& poly) {
  validate_ring(poly.exterior, "polygon exterior");
  for (const Ring& h : poly.holes) {
    validate_ring(h, "polygon hole");
    require(ring_strictly_inside_ring(h, poly.exterior),
            "polygon hole must lie strictly inside the exterior");
  }
  for (std::size_t i = 0; i < poly.holes.size(); ++i)
    for (std::size_t j = i + 1; j < poly.holes.size(); ++j) {
      const Ring& a = poly.holes[i];
      const Ring& b = poly.holes[j];
      require(ring_ring_min_edge_distance(a, b) > 0.0 &&
                  !ring_crossings_odd(b, a.vertices.front()) &&
                  !ring_crossings_odd(a, b.vertices.front()),
              "polygon holes must be pairwise disjoint");
    }
}

}  // namespace

bool is_empty(const Geometry& g) {
  if (const auto* mp = std::get_if<MultiPolygon>(&g)) return mp->empty();
  return false;
}

void validate_geometry(const Geometry& g) {
  std::visit(
      [](const auto& shape) {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, Point>) {
          require(finite(shape), "point: non-finite coordinate");
        } else if constexpr (std::is_same_v<T, Polygon>) {
          validate_polygon(shape);
        } else {
          require(!shape.empty(), "collection: must be non-empty");
          for (const Polygon& poly : shape) validate_polygon(poly);
        }
      },
      g);
}

bool contains_point(const Geometry& g, const Point& p) {
  return std::visit(
      [&](const auto& shape) -> bool {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, Point>) {
          return distance_point_point(p, shape) <= kBoundaryEps;
        } else if constexpr (std::is_same_v<T, Polygon>) {
          return polygon_contains(shape, p);
        } else {
          for (const Polygon& poly : shape)
            if (polygon_contains(poly, p)) return true;
          return false;
        }
      },
      g);
}

double distance_point_point(const Point& p, const Point& q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

double distance_point_geometry(const Point& p, const Geometry& g) {
  return point_polygon_or_point_distance(p, g);
}

double distance_geometry_geometry(const Geometry& a, const Geometry& b) {
  const auto components = [](const Geometry& g) {
    std::vector<const Polygon*> polys;
    const Point* pt = nullptr;
    if (const auto* p = std::get_if<Point>(&g)) pt = p;
    if (const auto* poly = std::get_if<Polygon>(&g)) polys.push_back(poly);
    if (const auto* mp = std::get_if<MultiPolygon>(&g))
      for (const Polygon& m : *mp) polys.push_back(&m);
    return std::pair(pt, polys);
  };
  const auto [pa, polys_a] = components(a);
  const auto [pb, polys_b] = components(b);

  double best = kInf;
  if (pa && pb) best = std::min(best, distance_point_point(*pa, *pb));
  if (pa)
    for (const Polygon* q : polys_b)
      best = std::min(best, distance_point_polygon(*pa, *q));
  if (pb)
    for (const Polygon* p : polys_a)
      best = std::min(best, distance_point_polygon(*pb, *p));
  for (const Polygon* p : polys_a)
    for (const Polygon* q : polys_b) {
      best = std::min(best, polygon_polygon_distance(*p, *q));
      if (best == 0.0) return 0.0;
    }
  return best;
}

BoundingBox bounding_box(const Geometry& g) {
  if (is_empty(g)) throw std::invalid_argument("bounding_box: empty geometry");
  BoundingBox bb{kInf, kInf, -kInf, -kInf};
  const auto grow = [&](const Point& p) {
    bb.min_x = std::min(bb.min_x, p.x);
    bb.min_y = std::min(bb.min_y, p.y);
    bb.max_x = std::max(bb.max_x, p.x);
    bb.max_y = std::max(bb.max_y, p.y);
  };
  std::visit(
      [&](const auto& shape) {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, Point>) {
          grow(shape);
        } else if constexpr (std::is_same_v<T, Polygon>) {
          for (const Point& p : shape.exterior.vertices) grow(p);
        } else {
          for (const Polygon& poly : shape)
            for (const Point& p : poly.exterior.vertices) grow(p);
        }
      },
      g);
  return bb;
}

std::vector<Cell> grid_subdivide(const Geometry& g, int dd) {
  if (dd < 1) throw std::invalid_argument("grid_subdivide: dd must be >= 1");
  const BoundingBox bb = bounding_box(g);
  std::vector<double> xs(dd + 1), ys(dd + 1);
  for (int i = 0; i <= dd; ++i) {
    xs[i] = (i == dd) ? bb.max_x : bb.min_x + bb.width() * i / dd;
    ys[i] = (i == dd) ? bb.max_y : bb.min_y + bb.height() * i / dd;
  }
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(dd) * dd);
  for (int iy = 0; iy < dd; ++iy)
    for (int ix = 0; ix < dd; ++ix)
      cells.push_back(Cell{BoundingBox{xs[ix], ys[iy], xs[ix + 1], ys[iy + 1]},
                           Point{xs[ix], ys[iy]}});
  return cells;
}

double interior_depth(const Geometry& g, const Point& p) {
  if (!contains_point(g, p)) return 0.0;
  return std::visit(
      [&](const auto& shape) -> double {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, Point>) {
          return 0.0;  // a point has no interior
        } else if constexpr (std::is_same_v<T, Polygon>) {
          return distance_point_polygon_boundary(p, shape);
        } else {
          double best = kInf;
          for (const Polygon& poly : shape)
            best = std::min(best, distance_point_polygon_boundary(p, poly));
          return best;
        }
      },
      g);
}

double distance_point_segment(const Point& p, const Point& a, const Point& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return distance_point_point(p, a);
  double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

double distance_segment_segment(const Point& a, const Point& b, const Point& c,
                                const Point& d) {
  if (segments_cross(a, b, c, d)) return 0.0;
  return std::min(std::min(distance_point_segment(a, c, d), distance_point_segment(b, c, d)),
                  std::min(distance_point_segment(c, a, b), distance_point_segment(d, a, b)));
}

}  // namespace frcc
