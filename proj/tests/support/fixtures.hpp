#pragma once

// Shared fixtures for the test suites. The nine-point planar instance is the
// worked example used throughout; ids are 0-based, labels in comments are the
// 1-based point numbers.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "exhull/point_set.hpp"

namespace testsupport {

// Point:        1         2        3        4        5        6        7        8        9
// (x, y):   (10,26)   (72,20)  (40,1)   (46,76)  (32,72)  (71,36)  (34,66)  (40,38)  (62,69)
inline exhull::PointSet nine_point_instance() {
    return exhull::PointSet::from_rows({
        {10, 26}, {72, 20}, {40, 1}, {46, 76}, {32, 72}, {71, 36}, {34, 66}, {40, 38}, {62, 69},
    });
}

// 1-based {1,2,3,4,5,6,9}
inline std::vector<exhull::PointId> nine_point_extremes() { return {0, 1, 2, 3, 4, 5, 8}; }

inline std::set<exhull::PointId> to_set(const std::vector<exhull::PointId>& v) {
    return {v.begin(), v.end()};
}

inline exhull::PointSet random_gaussian_set(std::size_t n, std::size_t m, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    auto uniform = [&] { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };
    std::vector<exhull::Vec> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        exhull::Vec p(m);
        for (double& x : p) {
            const double u1 = 1.0 - uniform();
            const double u2 = uniform();
            x = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
        }
        rows.push_back(std::move(p));
    }
    auto [kept, dropped] = exhull::PointSet::dedup_rows(rows);
    (void)dropped;
    return exhull::PointSet::from_rows(kept);
}

}  // namespace testsupport
