#pragma once

// Driver for exact extreme-point identification: per query point, grow a
// reference set by projecting onto its hull and inserting the directional
// argmax of the residual until the distance reaches zero. Distances decrease
// strictly along the way; a non-decrease is a hard error, not a warning.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exhull/log.hpp"
#include "exhull/oracle.hpp"
#include "exhull/point_set.hpp"
#include "exhull/projection.hpp"
#include "exhull/seeding.hpp"

namespace exhull {

enum class InitStrategy {
    simplex,      ///< nearest-hyperplane + establish-simplex seeding
    single_seed,  ///< start from the nearest confirmed extreme point
};

/// Thrown when an iteration violates the guaranteed strict distance decrease
/// or re-selects a member it already holds; names the offending step.
class convergence_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TraceStep {
    std::size_t k = 0;             ///< solve index within this query (0 = initial)
    double distance = 0.0;         ///< d(x_l, R_l) after this solve
    std::optional<PointId> added;  ///< member appended because this distance was positive
    bool added_tied = false;       ///< the appended member came from a tied argmax
    std::size_t ref_size = 0;      ///< |R_l| at this solve
    Vec residual;                  ///< v* from this solve
    Vec projection;                ///< the projected point from this solve
};

struct IterationTrace {
    PointId point = 0;
    std::vector<TraceStep> steps;
    std::size_t qp_solves = 0;
    std::size_t refine_steps = 0;
};

struct HullResult {
    std::vector<PointId> extreme_ids;  ///< ascending
    std::vector<IterationTrace> traces;
    std::size_t total_qp_solves = 0;
    std::vector<std::pair<PointId, std::size_t>> e_prime_growth;  ///< (query, |E'| after)
    SeedState seeding;
    std::vector<PointId> tie_checked_extreme;   ///< tied picks confirmed extreme post-hoc
    std::vector<PointId> tie_checked_interior;  ///< tied picks rejected post-hoc
};

struct HullOptions {
    InitStrategy init = InitStrategy::simplex;
    std::vector<PointId> order;  ///< explicit processing order; empty = ascending index
};

/// Members eligible for the confirmed-extreme union after a finished query.
/// Under simplex seeding every member was selected by an argmax (or already
/// confirmed), so all of them qualify. Under single-seed setups with arbitrary
/// seeds, only argmax-discovered members and members carrying positive weight
/// qualify, which keeps a non-extreme seed out of the confirmed set.
inline std::vector<PointId> active(const ReferenceSet& r, const ProjectionResult& proj,
                                   InitStrategy strategy, const Tolerances& tol) {
    if (proj.lambda.size() != r.members.size())
        throw std::invalid_argument("active: projection does not match the reference set");
    if (strategy == InitStrategy::simplex) return r.members;
    std::vector<PointId> keep;
    for (std::size_t i = 0; i < r.members.size(); ++i) {
        const bool discovered = r.origins[i] == MemberOrigin::argmax_unique ||
                                r.origins[i] == MemberOrigin::argmax_tied;
        if (discovered || proj.lambda[i] > tol.eps_kkt) keep.push_back(r.members[i]);
    }
    return keep;
}

namespace detail {

inline double snapped_distance(const ProjectionResult& proj, const Tolerances& tol) {
    if (proj.dist_sq <= tol.eps_zero * tol.eps_zero) return 0.0;
    return std::sqrt(proj.dist_sq);
}

inline Vec projected_point(std::span<const double> z, const ProjectionResult& proj) {
    Vec p(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) p[j] = z[j] - proj.residual[j];
    return p;
}

}  // namespace detail

inline HullResult construct_hull(const PointSet& ps, const Tolerances& tol,
                                 const HullOptions& opts = {}) {
    tol.validate();
    const std::size_t n = ps.size();

    HullResult out;
    out.seeding = axis_extremes(ps, tol);

    std::vector<char> in_extreme(n, 0);
    std::vector<char> in_queue(n, 1);
    std::vector<char> is_pending(n, 0);
    std::vector<PointId> e_prime;

    auto add_extreme = [&](PointId id) {
        if (!in_extreme[id]) {
            in_extreme[id] = 1;
            in_queue[id] = 0;
            e_prime.push_back(id);
        }
    };

    for (PointId id : out.seeding.e_prime) add_extreme(id);

    if (e_prime.empty()) {
        // Every axis direction tied. Probe from the centroid toward the
        // lexicographically smallest point; a further tie means the input is
        // too degenerate to classify by direction scans.
        PointId lex = 0;
        for (PointId i = 1; i < n; ++i) {
            const auto a = ps.row(i);
            const auto b = ps.row(lex);
            if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) lex = i;
        }
        const Vec c = ps.centroid();
        Vec dir(ps.dim());
        for (std::size_t j = 0; j < ps.dim(); ++j) dir[j] = ps.at(lex, j) - c[j];
        if (detail::norm(dir) == 0.0)
            throw std::runtime_error("construct_hull: degenerate input, centroid fallback failed");
        const ArgmaxResult am = argmax_direction(ps, dir, tol);
        out.seeding.probes.push_back({dir, am.winner, am.unique});
        if (!am.unique)
            throw std::runtime_error(
                "construct_hull: degenerate input, all probe directions tied");
        out.seeding.add(am.winner);
        add_extreme(am.winner);
        log_info("axis seeding found no unique winners; centroid fallback seeded point " +
                 std::to_string(am.winner));
    }

    // Processing order: explicit ids first, remaining ids ascending.
    std::vector<PointId> order;
    {
        std::vector<char> listed(n, 0);
        for (PointId id : opts.order) {
            ps.check_id(id);
            if (listed[id])
                throw std::invalid_argument("construct_hull: duplicate id in processing order");
            listed[id] = 1;
            order.push_back(id);
        }
        for (PointId id = 0; id < n; ++id)
            if (!listed[id]) order.push_back(id);
    }

    for (PointId l : order) {
        if (!in_queue[l]) continue;

        IterationTrace trace;
        trace.point = l;

        ReferenceSet refs;
        if (opts.init == InitStrategy::simplex) {
            ReferenceSet start = nearest_hyperplane(ps, l, e_prime, tol);
            EstablishResult est = establish_simplex(ps, l, start, tol);
            refs = std::move(est.reference);
            trace.refine_steps = est.refinements;
            if (est.added) {
                if (est.tied)
                    is_pending[est.pick] = 1;
                else
                    add_extreme(est.pick);
            }
        } else {
            refs.owner = l;
            PointId seed = e_prime.front();
            double best = std::numeric_limits<double>::infinity();
            for (PointId e : e_prime) {
                Vec d(ps.dim());
                const auto a = ps.row(e);
                const auto b = ps.row(l);
                for (std::size_t j = 0; j < ps.dim(); ++j) d[j] = a[j] - b[j];
                const double dist = detail::norm_sq(d);
                if (dist < best || (dist == best && e < seed)) {
                    best = dist;
                    seed = e;
                }
            }
            refs.add(seed, MemberOrigin::known_extreme);
        }

        ProjectionResult proj = project(ps, ps.row(l), refs.members, tol);
        ++trace.qp_solves;
        double dist = detail::snapped_distance(proj, tol);
        std::size_t k = 0;
        trace.steps.push_back({k, dist, std::nullopt, false, refs.size(), proj.residual,
                               detail::projected_point(ps.row(l), proj)});

        while (dist > tol.eps_zero) {
            const ArgmaxResult am = argmax_direction(ps, proj.residual, tol);
            if (refs.contains(am.winner))
                throw convergence_error("construct_hull: point " + std::to_string(l) + " step " +
                                        std::to_string(k) + ": argmax re-selected member " +
                                        std::to_string(am.winner));
            trace.steps.back().added = am.winner;
            trace.steps.back().added_tied = !am.unique;
            if (am.unique)
                add_extreme(am.winner);
            else
                is_pending[am.winner] = 1;

            std::vector<double> warm = proj.lambda;
            warm.push_back(0.0);
            refs.add(am.winner, am.unique ? MemberOrigin::argmax_unique : MemberOrigin::argmax_tied);

            proj = project(ps, ps.row(l), refs.members, tol, warm);
            ++trace.qp_solves;
            const double next = detail::snapped_distance(proj, tol);
            ++k;
            if (next >= dist)
                throw convergence_error(
                    "construct_hull: point " + std::to_string(l) + " step " + std::to_string(k) +
                    ": distance failed to decrease (" + std::to_string(dist) + " -> " +
                    std::to_string(next) + ")");
            dist = next;
            trace.steps.push_back({k, dist, std::nullopt, false, refs.size(), proj.residual,
                                   detail::projected_point(ps.row(l), proj)});
        }

        in_queue[l] = 0;
        // Confirmed-extreme union for this query. Members from e_prime are
        // already confirmed and unique argmax winners were added on the way;
        // tied picks stay out until the post-pass below clears them.
        out.e_prime_growth.emplace_back(l, e_prime.size());
        out.total_qp_solves += trace.qp_solves;
        out.traces.push_back(std::move(trace));
    }

    // Tied argmax picks carry no extremeness guarantee; settle each one with
    // the independent per-point check.
    for (PointId id = 0; id < n; ++id) {
        if (!is_pending[id] || in_extreme[id]) continue;
        const ExtremenessVerdict v = verify_extreme(ps, id, tol);
        if (v.is_extreme) {
            add_extreme(id);
            out.tie_checked_extreme.push_back(id);
        } else {
            out.tie_checked_interior.push_back(id);
        }
        log_info("tied pick " + std::to_string(id) + " resolved: " +
                 (v.is_extreme ? "extreme" : "interior"));
    }

    out.extreme_ids = e_prime;
    std::sort(out.extreme_ids.begin(), out.extreme_ids.end());
    return out;
}

}  // namespace exhull
