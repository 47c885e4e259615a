#pragma once

// Deterministic synthetic corpora for tests and benchmarks. Draws come from
// an explicit mt19937_64 mapping so a (kind, n, m, seed) tuple reproduces the
// same set regardless of standard-library distribution internals.

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "exhull/log.hpp"
#include "exhull/point_set.hpp"

namespace exhull {

enum class GeneratorKind { cube, gaussian, sphere, simplex_interior };

inline GeneratorKind parse_generator_kind(const std::string& name) {
    if (name == "cube") return GeneratorKind::cube;
    if (name == "gaussian") return GeneratorKind::gaussian;
    if (name == "sphere") return GeneratorKind::sphere;
    if (name == "simplex-interior") return GeneratorKind::simplex_interior;
    throw std::invalid_argument("unknown generator kind: " + name);
}

inline std::string generator_kind_name(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::cube: return "cube";
        case GeneratorKind::gaussian: return "gaussian";
        case GeneratorKind::sphere: return "sphere";
        case GeneratorKind::simplex_interior: return "simplex-interior";
    }
    return "?";
}

namespace detail {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() {  // [0, 1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double normal() {  // Box-Muller, explicit for reproducibility
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace detail

/// cube: uniform in [0,1)^m. gaussian: standard normal. sphere: normal draws
/// scaled to unit norm. simplex-interior: m+1 vertices (each one the unique
/// winner of an axis direction) followed by n-m-1 strictly interior mixtures
/// with weights bounded away from zero.
inline PointSet generate(GeneratorKind kind, std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n == 0 || m == 0)
        throw std::invalid_argument("generate: n and m must be positive");
    if (kind == GeneratorKind::simplex_interior && n < m + 1)
        throw std::invalid_argument("generate: simplex-interior needs n >= m + 1");

    detail::Rng rng(seed);
    std::vector<Vec> rows;
    rows.reserve(n);

    switch (kind) {
        case GeneratorKind::cube:
            for (std::size_t i = 0; i < n; ++i) {
                Vec p(m);
                for (double& x : p) x = rng.uniform();
                rows.push_back(std::move(p));
            }
            break;
        case GeneratorKind::gaussian:
            for (std::size_t i = 0; i < n; ++i) {
                Vec p(m);
                for (double& x : p) x = rng.normal();
                rows.push_back(std::move(p));
            }
            break;
        case GeneratorKind::sphere:
            for (std::size_t i = 0; i < n; ++i) {
                Vec p(m);
                double norm = 0.0;
                do {
                    for (double& x : p) x = rng.normal();
                    norm = detail::norm(p);
                } while (norm < 1e-12);
                for (double& x : p) x /= norm;
                rows.push_back(std::move(p));
            }
            break;
        case GeneratorKind::simplex_interior: {
            std::vector<Vec> vertices;
            Vec base(m);
            for (double& x : base) x = -(1.3 + 0.2 * rng.uniform());
            vertices.push_back(base);
            for (std::size_t c = 0; c < m; ++c) {
                Vec v(m);
                for (std::size_t j = 0; j < m; ++j) v[j] = -0.25 + 0.5 * rng.uniform();
                v[c] = 1.6 + 0.4 * rng.uniform();
                vertices.push_back(std::move(v));
            }
            rows = vertices;
            for (std::size_t i = m + 1; i < n; ++i) {
                std::vector<double> w(m + 1);
                double sum = 0.0;
                for (double& x : w) {
                    x = 0.35 + rng.uniform();
                    sum += x;
                }
                Vec p(m, 0.0);
                for (std::size_t v = 0; v <= m; ++v)
                    for (std::size_t j = 0; j < m; ++j) p[j] += (w[v] / sum) * vertices[v][j];
                rows.push_back(std::move(p));
            }
            break;
        }
    }

    auto [kept, dropped] = PointSet::dedup_rows(rows);
    if (!dropped.empty())
        log_warn("generate: dropped " + std::to_string(dropped.size()) +
                 " duplicate draws (kind=" + generator_kind_name(kind) + ")");
    return PointSet::from_rows(kept);
}

}  // namespace exhull
