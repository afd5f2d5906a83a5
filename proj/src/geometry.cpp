#include "ordvis/geometry.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "ordvis/error.hpp"

namespace ordvis::geom {

namespace {

// Internal predicates run on doubled coordinates.
constexpr std::int64_t kExactLimit = kMaxCoordinate * 4;

void check_magnitude(const Point& p) {
    if (p.x > kExactLimit || p.x < -kExactLimit || p.y > kExactLimit || p.y < -kExactLimit) {
        throw InputError("coordinate magnitude exceeds the exact-arithmetic limit");
    }
}

__int128 cross(const Point& p, const Point& q, const Point& r) {
    const __int128 ax = q.x - p.x;
    const __int128 ay = q.y - p.y;
    const __int128 bx = r.x - p.x;
    const __int128 by = r.y - p.y;
    return ax * by - ay * bx;
}

int sign(__int128 v) { return (v > 0) - (v < 0); }

Polygon doubled(const Polygon& poly) {
    Polygon out;
    out.points.reserve(poly.points.size());
    for (const Point& p : poly.points) {
        if (p.x > kMaxCoordinate || p.x < -kMaxCoordinate || p.y > kMaxCoordinate ||
            p.y < -kMaxCoordinate) {
            throw InputError("polygon coordinate exceeds 2^30 in magnitude");
        }
        out.points.push_back({2 * p.x, 2 * p.y});
    }
    return out;
}

// Uniform integer in [0, bound] built only on the generator's raw output,
// so sequences are identical across standard library implementations.
std::int64_t uniform(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == std::numeric_limits<std::uint64_t>::max()) {
        return static_cast<std::int64_t>(rng());
    }
    const std::uint64_t range = bound + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t draw = 0;
    do {
        draw = rng();
    } while (draw >= limit);
    return static_cast<std::int64_t>(draw % range);
}

bool visible_doubled(const Polygon& dp, int i, int j) {
    const int n = dp.size();
    if ((i + 1) % n == j || (j + 1) % n == i) {
        return true;
    }
    const Point& p = dp.points[i];
    const Point& q = dp.points[j];
    for (int k = 0; k < n; ++k) {
        if (segments_cross_properly(p, q, dp.points[k], dp.points[(k + 1) % n])) {
            return false;
        }
    }
    // Boundary contacts along pq, ordered by their projection onto pq.
    const __int128 dx = q.x - p.x;
    const __int128 dy = q.y - p.y;
    std::vector<std::pair<__int128, Point>> contacts{{0, p}, {dx * dx + dy * dy, q}};
    for (int k = 0; k < n; ++k) {
        if (k == i || k == j) {
            continue;
        }
        const Point& v = dp.points[k];
        if (on_segment(p, q, v)) {
            contacts.push_back({(v.x - p.x) * dx + (v.y - p.y) * dy, v});
        }
    }
    std::sort(contacts.begin(), contacts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k + 1 < contacts.size(); ++k) {
        const Point& a = contacts[k].second;
        const Point& b = contacts[k + 1].second;
        // Doubled coordinates are even, so the midpoint is a lattice point.
        const Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
        if (locate(dp, mid) == Location::kOutside) {
            return false;
        }
    }
    return true;
}

}  // namespace

int orientation(const Point& p, const Point& q, const Point& r) {
    check_magnitude(p);
    check_magnitude(q);
    check_magnitude(r);
    return sign(cross(p, q, r));
}

bool on_segment(const Point& p, const Point& q, const Point& r) {
    return orientation(p, q, r) == 0 && std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
           std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) {
        return true;
    }
    return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) ||
           on_segment(c, d, b);
}

bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d) {
    return orientation(a, b, c) * orientation(a, b, d) < 0 &&
           orientation(c, d, a) * orientation(c, d, b) < 0;
}

__int128 twice_signed_area(std::span<const Point> pts) {
    __int128 total = 0;
    const std::size_t n = pts.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Point& a = pts[k];
        const Point& b = pts[(k + 1) % n];
        total += static_cast<__int128>(a.x) * b.y - static_cast<__int128>(b.x) * a.y;
    }
    return total;
}

bool is_simple_ccw(const Polygon& poly) {
    const int n = poly.size();
    if (n < 3) {
        return false;
    }
    const auto& p = poly.points;
    std::set<Point> distinct(p.begin(), p.end());
    if (static_cast<int>(distinct.size()) != n) {
        return false;
    }
    for (int k = 0; k < n; ++k) {
        const Point& a = p[k];
        const Point& b = p[(k + 1) % n];
        // The next edge must not fold back over this one.
        const Point& c = p[(k + 2) % n];
        if (orientation(a, b, c) == 0 && (on_segment(a, b, c) || on_segment(b, c, a))) {
            return false;
        }
        for (int l = k + 2; l < n; ++l) {
            if (k == 0 && l == n - 1) {
                continue;
            }
            if (segments_intersect(a, b, p[l], p[(l + 1) % n])) {
                return false;
            }
        }
    }
    return twice_signed_area(p) > 0;
}

Location locate(const Polygon& poly, const Point& pt) {
    const int n = poly.size();
    bool inside = false;
    for (int k = 0; k < n; ++k) {
        const Point& a = poly.points[k];
        const Point& b = poly.points[(k + 1) % n];
        if (on_segment(a, b, pt)) {
            return Location::kBoundary;
        }
        if ((a.y > pt.y) != (b.y > pt.y)) {
            const int o = orientation(a, b, pt);
            // The edge meets the horizontal line through pt to its right.
            if ((b.y > a.y && o > 0) || (b.y < a.y && o < 0)) {
                inside = !inside;
            }
        }
    }
    return inside ? Location::kInside : Location::kOutside;
}

int winding_number(const Polygon& poly, const Point& pt) {
    const int n = poly.size();
    int wn = 0;
    for (int k = 0; k < n; ++k) {
        const Point& a = poly.points[k];
        const Point& b = poly.points[(k + 1) % n];
        if (a.y <= pt.y) {
            if (b.y > pt.y && orientation(a, b, pt) > 0) {
                ++wn;
            }
        } else if (b.y <= pt.y && orientation(a, b, pt) < 0) {
            --wn;
        }
    }
    return wn;
}

bool vertices_visible(const Polygon& poly, int i, int j) {
    const int n = poly.size();
    if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
        throw InputError("vertices_visible: need two distinct vertex indices in range");
    }
    return visible_doubled(doubled(poly), i, j);
}

OrderedGraph visibility_graph(const Polygon& poly) {
    if (!is_simple_ccw(poly)) {
        throw InputError("polygon is not simple and counterclockwise");
    }
    const Polygon dp = doubled(poly);
    const int n = poly.size();
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (visible_doubled(dp, i, j)) {
                edges.push_back({i, j});
            }
        }
    }
    return OrderedGraph::build(n, edges);
}

OrderedGraph curve_visibility_graph(const Polygon& poly, std::span<const int> subset) {
    if (subset.empty()) {
        throw InputError("curve visibility graph needs at least one vertex");
    }
    return induced(visibility_graph(poly), subset).graph;
}

Polygon random_simple_polygon(int n, std::uint64_t seed, std::int64_t span) {
    if (n < 3) {
        throw InputError("random polygon needs n >= 3");
    }
    if (span < n || span > kMaxCoordinate) {
        throw InputError("random polygon needs n <= span <= 2^30");
    }
    std::mt19937_64 rng(seed);
    std::vector<Point> pts;
    const long long budget = 1000LL * n + 10000;
    long long attempts = 0;
    while (static_cast<int>(pts.size()) < n) {
        if (++attempts > budget) {
            throw InputError("could not sample distinct points in general position");
        }
        const Point cand{uniform(rng, static_cast<std::uint64_t>(span)),
                         uniform(rng, static_cast<std::uint64_t>(span))};
        bool ok = true;
        for (std::size_t a = 0; a < pts.size() && ok; ++a) {
            ok = pts[a] != cand;
            for (std::size_t b = a + 1; b < pts.size() && ok; ++b) {
                ok = orientation(pts[a], pts[b], cand) != 0;
            }
        }
        if (ok) {
            pts.push_back(cand);
        }
    }

    // 2-opt: uncross one pair of tour edges at a time. Each swap strictly
    // shortens the tour, so this terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n && !changed; ++i) {
            for (int j = i + 2; j < n && !changed; ++j) {
                if (i == 0 && j == n - 1) {
                    continue;
                }
                if (segments_cross_properly(pts[i], pts[i + 1], pts[j], pts[(j + 1) % n])) {
                    std::reverse(pts.begin() + i + 1, pts.begin() + j + 1);
                    changed = true;
                }
            }
        }
    }
    if (twice_signed_area(pts) < 0) {
        std::reverse(pts.begin(), pts.end());
    }
    Polygon poly{std::move(pts)};
    if (!is_simple_ccw(poly)) {
        throw InternalContradiction("2-opt untangling did not produce a simple polygon");
    }
    return poly;
}

Polygon parse_polygon(std::istream& in) {
    Polygon poly;
    std::string line;
    int line_no = 0;
    long long declared = -1;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream ls(line);
        std::string rest;
        if (declared < 0) {
            if (!(ls >> declared) || declared < 0 || (ls >> rest)) {
                throw InputError("line " + std::to_string(line_no) + ": expected vertex count");
            }
            continue;
        }
        Point p;
        if (!(ls >> p.x >> p.y) || (ls >> rest)) {
            throw InputError("line " + std::to_string(line_no) + ": expected 'x y'");
        }
        if (p.x > kMaxCoordinate || p.x < -kMaxCoordinate || p.y > kMaxCoordinate ||
            p.y < -kMaxCoordinate) {
            throw InputError("line " + std::to_string(line_no) + ": coordinate out of range");
        }
        poly.points.push_back(p);
    }
    if (declared < 0) {
        throw InputError("missing vertex count");
    }
    if (static_cast<long long>(poly.points.size()) != declared) {
        throw InputError("declared " + std::to_string(declared) + " vertices, found " +
                         std::to_string(poly.points.size()));
    }
    return poly;
}

Polygon parse_polygon_string(const std::string& text) {
    std::istringstream in(text);
    return parse_polygon(in);
}

void write_polygon(std::ostream& out, const Polygon& poly) {
    out << poly.size() << '\n';
    for (const Point& p : poly.points) {
        out << p.x << ' ' << p.y << '\n';
    }
}

std::string serialize_polygon(const Polygon& poly) {
    std::ostringstream out;
    write_polygon(out, poly);
    return out.str();
}

}  // namespace ordvis::geom
