#pragma once

// Seed machinery: directional argmax scans, axis-direction extreme
// initialization, and the two reference-set construction passes (nearest
// hyperplane, establishing simplex).

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "exhull/point_set.hpp"

namespace exhull {

struct ArgmaxResult {
    PointId winner = 0;
    bool unique = true;  ///< no other point within eps_tie (per unit direction) of the max
    double value = 0.0;  ///< the winning inner product
};

/// Index maximizing <x_i, v>. Ties break to the lowest index; `unique` is
/// false when the runner-up is within eps_tie * ||v|| of the winner, so the
/// flag is invariant under positive rescaling of v.
inline ArgmaxResult argmax_direction(const PointSet& ps, std::span<const double> v,
                                     const Tolerances& tol) {
    if (v.size() != ps.dim()) throw std::invalid_argument("argmax_direction: dimension mismatch");
    if (!detail::all_finite(v))
        throw std::invalid_argument("argmax_direction: non-finite direction");
    const double vnorm = detail::norm(v);
    if (vnorm == 0.0) throw std::invalid_argument("argmax_direction: zero direction");

    ArgmaxResult best;
    double second = -std::numeric_limits<double>::infinity();
    best.value = -std::numeric_limits<double>::infinity();
    for (PointId i = 0; i < ps.size(); ++i) {
        const double ip = detail::dot(ps.row(i), v);
        if (ip > best.value) {
            second = best.value;
            best.value = ip;
            best.winner = i;
        } else if (ip > second) {
            second = ip;
        }
    }
    best.unique = !(best.value - second <= tol.eps_tie * vnorm);
    return best;
}

struct DirectionProbe {
    Vec direction;
    PointId winner = 0;
    bool unique = true;
};

/// Confirmed extreme points accumulated so far plus the directional probes
/// that produced (or failed to produce) them.
struct SeedState {
    std::vector<PointId> e_prime;  // insertion order, duplicate-free
    std::vector<DirectionProbe> probes;

    bool contains(PointId id) const {
        return std::find(e_prime.begin(), e_prime.end(), id) != e_prime.end();
    }

    void add(PointId id) {
        if (!contains(id)) e_prime.push_back(id);
    }
};

/// Scans -I_c then +I_c for every coordinate axis c. Only strict unique
/// winners enter e_prime; tied directions are logged and contribute nothing.
inline SeedState axis_extremes(const PointSet& ps, const Tolerances& tol) {
    SeedState seed;
    for (std::size_t c = 0; c < ps.dim(); ++c) {
        for (double sign : {-1.0, 1.0}) {
            Vec dir(ps.dim(), 0.0);
            dir[c] = sign;
            const ArgmaxResult am = argmax_direction(ps, dir, tol);
            seed.probes.push_back({dir, am.winner, am.unique});
            if (am.unique) seed.add(am.winner);
        }
    }
    return seed;
}

/// Builds the starting reference set for query l from the confirmed extremes:
/// repeatedly takes the nearest remaining candidate (in coordinates centered
/// at x_l) and retires every candidate sharing its sign pattern, until m
/// members are collected or the pool is exhausted. Output members carry
/// pairwise-distinct sign patterns.
inline ReferenceSet nearest_hyperplane(const PointSet& ps, PointId l,
                                       std::span<const PointId> e_prime,
                                       const Tolerances& tol) {
    if (e_prime.empty()) throw std::invalid_argument("nearest_hyperplane: empty extreme set");
    ps.check_id(l);
    for (PointId id : e_prime) {
        ps.check_id(id);
        if (id == l)
            throw std::invalid_argument("nearest_hyperplane: query point " + std::to_string(l) +
                                        " must not be in the seed extreme set");
    }

    struct Candidate {
        PointId id;
        double dist;
        SignPattern pattern;
        bool alive = true;
    };
    std::vector<Candidate> pool;
    pool.reserve(e_prime.size());
    const std::vector<Vec> centered = transform_centered(ps, l, e_prime);
    for (std::size_t i = 0; i < e_prime.size(); ++i) {
        pool.push_back({e_prime[i], detail::norm(centered[i]),
                        sign_pattern(centered[i], tol.eps_sign), true});
    }

    ReferenceSet r;
    r.owner = l;
    while (r.size() < ps.dim()) {
        const Candidate* pick = nullptr;
        for (const Candidate& c : pool) {
            if (!c.alive) continue;
            if (pick == nullptr || c.dist < pick->dist ||
                (c.dist == pick->dist && c.id < pick->id))
                pick = &c;
        }
        if (pick == nullptr) break;  // pool exhausted before reaching m members
        for (Candidate& c : pool) {
            if (c.alive && c.pattern == pick->pattern) c.alive = false;
        }
        r.add(pick->id, MemberOrigin::known_extreme);
    }
    return r;
}

struct EstablishResult {
    ReferenceSet reference;          ///< input set plus at most one new member
    std::size_t refinements = 0;     ///< direction refinements spent (at most K)
    bool added = false;              ///< whether a new member was appended
    bool tied = false;               ///< tie flag of the final argmax pick
    PointId pick = 0;                ///< the final argmax winner
    std::vector<Vec> directions;     ///< v_0 .. v_k actually probed
};

/// Tries to extend the reference set with one more extreme point: probes the
/// direction from the duplicate-weighted centroid of the (centered) selection
/// list toward the query, re-weighting toward repeat winners for up to K
/// refinements. Failing to find a new point is a normal outcome.
inline EstablishResult establish_simplex(const PointSet& ps, PointId l, const ReferenceSet& r,
                                         const Tolerances& tol) {
    if (r.members.empty()) throw std::invalid_argument("establish_simplex: empty reference set");
    ps.check_id(l);
    const std::size_t refine_cap = tol.max_refine != 0 ? tol.max_refine : ps.dim();
    const std::size_t m = ps.dim();
    const auto origin = ps.row(l);

    std::vector<PointId> selection = r.members;  // duplicates allowed below
    auto centroid_direction = [&]() {
        Vec v(m, 0.0);
        for (PointId id : selection) {
            const auto row = ps.row(id);
            for (std::size_t j = 0; j < m; ++j) v[j] += row[j] - origin[j];
        }
        for (double& x : v) x = -x / static_cast<double>(selection.size());
        return v;
    };

    EstablishResult out;
    out.reference = r;

    Vec v = centroid_direction();
    out.directions.push_back(v);
    if (detail::norm(v) == 0.0) return out;  // centroid coincides with the query; nothing to probe

    ArgmaxResult am = argmax_direction(ps, v, tol);
    std::size_t k = 0;
    while (std::find(selection.begin(), selection.end(), am.winner) != selection.end() &&
           k < refine_cap) {
        ++k;
        selection.push_back(am.winner);
        v = centroid_direction();
        out.directions.push_back(v);
        if (detail::norm(v) == 0.0) break;
        am = argmax_direction(ps, v, tol);
    }

    out.refinements = k;
    out.pick = am.winner;
    out.tied = !am.unique;
    if (!out.reference.contains(am.winner)) {
        out.reference.add(am.winner,
                          am.unique ? MemberOrigin::argmax_unique : MemberOrigin::argmax_tied);
        out.added = true;
    }
    return out;
}

}  // namespace exhull
