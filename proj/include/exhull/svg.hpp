#pragma once

// SVG 1.1 rendering for two-dimensional runs: all points, the hull polygon,
// and optionally the per-step residual directions of the growth traces.
// Rendering reads the finished result only; it never feeds back into it.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "exhull/hull.hpp"
#include "exhull/oracle.hpp"
#include "exhull/point_set.hpp"
#include "exhull/report.hpp"

namespace exhull {

inline std::string render_svg(const PointSet& ps, const HullResult& hull,
                              const Tolerances& tol, bool with_trace) {
    if (ps.dim() != 2) throw std::invalid_argument("render_svg: input must be two-dimensional");

    constexpr double size = 640.0;
    constexpr double margin = 50.0;

    double xmin = ps.at(0, 0), xmax = xmin, ymin = ps.at(0, 1), ymax = ymin;
    for (PointId i = 0; i < ps.size(); ++i) {
        xmin = std::min(xmin, ps.at(i, 0));
        xmax = std::max(xmax, ps.at(i, 0));
        ymin = std::min(ymin, ps.at(i, 1));
        ymax = std::max(ymax, ps.at(i, 1));
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
    const double scale = (size - 2.0 * margin) / span;
    auto sx = [&](double x) { return margin + (x - xmin) * scale; };
    auto sy = [&](double y) { return size - margin - (y - ymin) * scale; };

    std::vector<char> extreme(ps.size(), 0);
    for (PointId id : hull.extreme_ids) extreme[id] = 1;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
        << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    svg << "  <rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";

    const std::vector<PointId> ring = hull_2d_ring(ps, tol);
    if (ring.size() >= 2) {
        svg << "  <polygon points=\"";
        for (std::size_t i = 0; i < ring.size(); ++i) {
            if (i) svg << ' ';
            svg << sx(ps.at(ring[i], 0)) << ',' << sy(ps.at(ring[i], 1));
        }
        svg << "\" fill=\"#dbeafe\" fill-opacity=\"0.5\" stroke=\"#1d4ed8\" stroke-width=\"1.5\"/>\n";
    }

    if (with_trace) {
        for (const IterationTrace& t : hull.traces) {
            for (const TraceStep& s : t.steps) {
                if (!s.added) continue;
                const double px = sx(s.projection[0]);
                const double py = sy(s.projection[1]);
                const double qx = sx(ps.at(t.point, 0));
                const double qy = sy(ps.at(t.point, 1));
                svg << "  <line x1=\"" << px << "\" y1=\"" << py << "\" x2=\"" << qx
                    << "\" y2=\"" << qy
                    << "\" stroke=\"#f59e0b\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
            }
        }
    }

    for (PointId i = 0; i < ps.size(); ++i) {
        const double cx = sx(ps.at(i, 0));
        const double cy = sy(ps.at(i, 1));
        const char* fill = extreme[i] ? "#dc2626" : "#6b7280";
        svg << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << (extreme[i] ? 5 : 3.5)
            << "\" fill=\"" << fill << "\"/>\n";
        svg << "  <text x=\"" << cx + 7 << "\" y=\"" << cy - 7
            << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#111827\">" << (i + 1)
            << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

inline void write_svg(const std::string& path, const PointSet& ps, const HullResult& hull,
                      const Tolerances& tol, bool with_trace) {
    write_file_atomic(path, render_svg(ps, hull, tol, with_trace));
}

}  // namespace exhull
