#pragma once

#include <variant>
#include <vector>

namespace frcc {

// Distance below which a point counts as lying on a boundary. Keeps the
// closed-region convention deterministic under floating point.
inline constexpr double kBoundaryEps = 1e-12;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Vertex loop without a repeated closing vertex; closure is implicit.
struct Ring {
  std::vector<Point> vertices;
};

struct Polygon {
  Ring exterior;
  std::vector<Ring> holes;
};

// An empty collection models the empty region.
using MultiPolygon = std::vector<Polygon>;

using Geometry = std::variant<Point, Polygon, MultiPolygon>;

struct BoundingBox {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;

  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
};

// One tile of a grid subdivision. The representative is the (min_x, min_y)
// corner of the tile.
struct Cell {
  BoundingBox bbox;
  Point representative;
};

bool is_empty(const Geometry& g);

// Throws std::invalid_argument naming the violated invariant: rings need at
// least 3 distinct vertices, no repeated closing vertex, simple boundaries,
// holes strictly inside the exterior and pairwise disjoint, finite
// coordinates, non-empty collections.
void validate_geometry(const Geometry& g);

// Closed-region containment: boundary points count as inside. For a Point
// geometry, containment means coincidence.
bool contains_point(const Geometry& g, const Point& p);

double distance_point_point(const Point& p, const Point& q);

// Minimum Euclidean distance from p to any point of g; 0 iff contains_point.
double distance_point_geometry(const Point& p, const Geometry& g);

// Minimum distance over all point pairs; 0 iff the geometries touch or
// intersect.
double distance_geometry_geometry(const Geometry& a, const Geometry& b);

BoundingBox bounding_box(const Geometry& g);

// Tiles bounding_box(g) with a dd x dd row-major regular grid. Cells are
// returned whether or not they intersect g. Throws on dd < 1.
std::vector<Cell> grid_subdivide(const Geometry& g, int dd);

// Distance from p to the complement of g: 0 when p is outside or on the
// boundary, otherwise the distance to the nearest boundary edge.
double interior_depth(const Geometry& g, const Point& p);

double distance_point_segment(const Point& p, const Point& a, const Point& b);
double distance_segment_segment(const Point& a, const Point& b, const Point& c,
                                const Point& d);

}  // namespace frcc
