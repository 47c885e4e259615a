#pragma once

// Closed-form planar projections used as an independent oracle for the QP
// solver: nearest point of a point, segment, or triangle. Deliberately built
// on elementary formulas only, with no shared code with the solver under
// test.

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace testsupport {

struct P2 {
    double x = 0.0;
    double y = 0.0;
};

inline double dist2(P2 a, P2 b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

inline double point_projection_dist2(P2 z, P2 a) { return dist2(z, a); }

/// Squared distance from z to segment [a, b]; also reports the clamped
/// parameter t of the nearest point a + t (b - a).
inline double segment_projection_dist2(P2 z, P2 a, P2 b, double* t_out = nullptr) {
    const double ux = b.x - a.x;
    const double uy = b.y - a.y;
    const double uu = ux * ux + uy * uy;
    double t = 0.0;
    if (uu > 0.0) t = std::clamp(((z.x - a.x) * ux + (z.y - a.y) * uy) / uu, 0.0, 1.0);
    if (t_out) *t_out = t;
    const P2 p{a.x + t * ux, a.y + t * uy};
    return dist2(z, p);
}

/// Squared distance from z to triangle {a, b, c}: zero when z lies inside
/// (strictly or on the boundary), otherwise the minimum over the three edges.
/// Degenerate triangles fall through to the edge minimum, which is exact for
/// them as well.
inline double triangle_projection_dist2(P2 z, P2 a, P2 b, P2 c) {
    const auto cross = [](P2 o, P2 p, P2 q) {
        return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
    };
    const double d1 = cross(a, b, z);
    const double d2 = cross(b, c, z);
    const double d3 = cross(c, a, z);
    const bool has_neg = d1 < 0.0 || d2 < 0.0 || d3 < 0.0;
    const bool has_pos = d1 > 0.0 || d2 > 0.0 || d3 > 0.0;
    const double area2 = std::abs(cross(a, b, c));
    if (area2 > 0.0 && !(has_neg && has_pos)) return 0.0;
    return std::min({segment_projection_dist2(z, a, b), segment_projection_dist2(z, b, c),
                     segment_projection_dist2(z, c, a)});
}

/// Distance from z to the hull of 1..3 planar points.
inline double closed_form_dist2(P2 z, const std::vector<P2>& pts) {
    switch (pts.size()) {
        case 1: return point_projection_dist2(z, pts[0]);
        case 2: return segment_projection_dist2(z, pts[0], pts[1]);
        case 3: return triangle_projection_dist2(z, pts[0], pts[1], pts[2]);
        default: return -1.0;
    }
}

}  // namespace testsupport
