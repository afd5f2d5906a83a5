#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ordvis/ordered_graph.hpp"

namespace ordvis::geom {

/// Integer lattice point.
struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    auto operator<=>(const Point&) const = default;
};

/// Coordinates must stay within this magnitude for predicates to be exact.
inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 30;

/// Sign of (q - p) x (r - p): +1 left turn, -1 right turn, 0 collinear.
/// Exact for coordinates up to 2^32 in magnitude (internal use doubles the
/// public 2^30 limit). Throws InputError beyond that.
int orientation(const Point& p, const Point& q, const Point& r);

/// True iff r lies on the closed segment pq.
bool on_segment(const Point& p, const Point& q, const Point& r);

/// Closed segments ab and cd share at least one point.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

/// Open segments ab and cd cross at a single point interior to both.
bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d);

/// Twice the signed area (positive for counterclockwise).
__int128 twice_signed_area(std::span<const Point> pts);

/// A closed polygonal curve given by its vertices in order.
struct Polygon {
    std::vector<Point> points;

    int size() const { return static_cast<int>(points.size()); }
};

/// Simple (no self-contact besides consecutive edges at shared vertices)
/// and counterclockwise.
bool is_simple_ccw(const Polygon& poly);

/// Where a point lies relative to a polygon.
enum class Location { kOutside, kBoundary, kInside };

/// Exact even-odd classification.
Location locate(const Polygon& poly, const Point& p);

/// Winding number of the boundary around p; p must not be on the boundary.
int winding_number(const Polygon& poly, const Point& p);

/// True iff the closed segment between vertices i and j avoids the exterior.
bool vertices_visible(const Polygon& poly, int i, int j);

/// Visibility graph with vertices in boundary order. Throws InputError if
/// the polygon is not simple and counterclockwise.
OrderedGraph visibility_graph(const Polygon& poly);

/// Visibility graph induced on a sorted subset of the vertices.
OrderedGraph curve_visibility_graph(const Polygon& poly, std::span<const int> subset);

/// Deterministic random simple CCW polygon with n vertices in general
/// position and coordinates in [0, span].
Polygon random_simple_polygon(int n, std::uint64_t seed, std::int64_t span);

// Text format (.poly): "n", then n lines "x y"; '#' starts a comment line.
Polygon parse_polygon(std::istream& in);
Polygon parse_polygon_string(const std::string& text);
void write_polygon(std::ostream& out, const Polygon& poly);
std::string serialize_polygon(const Polygon& poly);

}  // namespace ordvis::geom
