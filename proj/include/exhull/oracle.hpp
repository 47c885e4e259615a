#pragma once

// Independent ground-truth classifiers: a per-point extremeness test via
// projection onto everything else, and a planar monotone-chain hull for
// cross-validation in two dimensions.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "exhull/point_set.hpp"
#include "exhull/projection.hpp"

namespace exhull {

struct ExtremenessVerdict {
    PointId point = 0;
    bool is_extreme = false;
    double alpha = 0.0;  ///< Euclidean separation from the hull of the other points
};

/// Decides whether x_l lies in the hull of all other points. alpha is the
/// (snapped) distance; the verdict is alpha > eps_zero.
inline ExtremenessVerdict verify_extreme(const PointSet& ps, PointId l, const Tolerances& tol) {
    ps.check_id(l);
    if (ps.size() == 1)
        return {l, true, std::numeric_limits<double>::infinity()};
    std::vector<PointId> others;
    others.reserve(ps.size() - 1);
    for (PointId i = 0; i < ps.size(); ++i)
        if (i != l) others.push_back(i);
    const double a = distance(ps, ps.row(l), others, tol);
    return {l, a > tol.eps_zero, a};
}

namespace detail {

inline bool integer_representable(const PointSet& ps) {
    constexpr double limit = 1 << 25;  // doubles are exact for cross products below this
    for (PointId i = 0; i < ps.size(); ++i) {
        for (double x : ps.row(i)) {
            if (std::abs(x) > limit || x != std::floor(x)) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Planar hull vertices in counter-clockwise walk order (Andrew's monotone
/// chain), starting at the lexicographically smallest point. Edge-interior
/// collinear points are excluded: a candidate whose perpendicular offset from
/// the current chord is at most eps_zero is treated as collinear. For
/// integer-valued inputs the cross products are exact and the threshold is 0.
inline std::vector<PointId> hull_2d_ring(const PointSet& ps, const Tolerances& tol) {
    if (ps.dim() != 2) throw std::invalid_argument("hull_2d: input must be two-dimensional");
    const std::size_t n = ps.size();
    if (n == 1) return {0};

    std::vector<PointId> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](PointId a, PointId b) {
        if (ps.at(a, 0) != ps.at(b, 0)) return ps.at(a, 0) < ps.at(b, 0);
        return ps.at(a, 1) < ps.at(b, 1);
    });

    const bool exact = detail::integer_representable(ps);
    auto non_left_turn = [&](PointId a, PointId b, PointId c) {
        const double cross = (ps.at(b, 0) - ps.at(a, 0)) * (ps.at(c, 1) - ps.at(a, 1)) -
                             (ps.at(b, 1) - ps.at(a, 1)) * (ps.at(c, 0) - ps.at(a, 0));
        if (exact) return cross <= 0.0;
        const double chord = std::hypot(ps.at(c, 0) - ps.at(a, 0), ps.at(c, 1) - ps.at(a, 1));
        return cross <= tol.eps_zero * chord;
    };

    std::vector<PointId> ring(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && non_left_turn(ring[k - 2], ring[k - 1], order[i])) --k;
        ring[k++] = order[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
        while (k >= lower && non_left_turn(ring[k - 2], ring[k - 1], order[i])) --k;
        ring[k++] = order[i];
    }
    ring.resize(k > 1 ? k - 1 : k);  // last point repeats the first
    return ring;
}

/// Planar hull vertex ids in ascending order.
inline std::vector<PointId> hull_2d(const PointSet& ps, const Tolerances& tol) {
    std::vector<PointId> ids = hull_2d_ring(ps, tol);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

/// Runs verify_extreme on every point; the desk-scale reference answer for
/// any dimension.
inline std::vector<PointId> classify_all_bruteforce(const PointSet& ps, const Tolerances& tol) {
    std::vector<PointId> extremes;
    for (PointId i = 0; i < ps.size(); ++i) {
        if (verify_extreme(ps, i, tol).is_extreme) extremes.push_back(i);
    }
    return extremes;
}

}  // namespace exhull
