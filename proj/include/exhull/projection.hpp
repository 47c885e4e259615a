#pragma once

// Euclidean projection of a query point onto the convex hull of a member
// subset: minimize ||z - sum_i lambda_i x_i||^2 over the probability simplex.
//
// Solved with an active-set nearest-point method. The support set is kept as
// a "corral": after every outer step the current iterate is the affine
// minimizer over its support with strictly positive weights, which makes the
// entering weight of a new vertex provably positive and the objective
// strictly decreasing per outer step. Ties and removals use lowest-index
// order, so identical inputs give identical results.

#include <Eigen/Dense>

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "exhull/point_set.hpp"

namespace exhull {

/// Raised when the active-set iteration exceeds its pivot budget or cannot
/// certify optimality; signals a numerical pathology rather than a result.
class solver_failure : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProjectionResult {
    std::vector<double> lambda;    ///< coefficients, one per input member, >= 0, summing to 1
    double dist_sq = 0.0;          ///< squared distance from z to the hull of the members
    Vec residual;                  ///< z - sum lambda_i x_i
    std::vector<PointId> support;  ///< member ids with lambda above eps_kkt
    double kkt_residual = 0.0;     ///< certificate: max optimality/feasibility violation
    std::size_t pivots = 0;        ///< active-set pivots spent (diagnostic)
};

namespace detail {

// Affine minimizer of ||z - Y w|| subject to sum(w) = 1, signs free.
// Columns of Y are the support points. Rank-deficient supports are handled by
// the rank-revealing QR, which picks a deterministic basic solution.
inline Eigen::VectorXd affine_weights(const Eigen::MatrixXd& y, const Eigen::VectorXd& z) {
    const Eigen::Index k = y.cols();
    Eigen::VectorXd w(k);
    if (k == 1) {
        w(0) = 1.0;
        return w;
    }
    Eigen::MatrixXd basis(y.rows(), k - 1);
    for (Eigen::Index c = 1; c < k; ++c) basis.col(c - 1) = y.col(c) - y.col(0);
    Eigen::VectorXd rhs = z - y.col(0);
    Eigen::VectorXd t = basis.colPivHouseholderQr().solve(rhs);
    w(0) = 1.0 - t.sum();
    w.tail(k - 1) = t;
    return w;
}

}  // namespace detail

/// Projects z onto the convex hull of the given members. warm_start, when
/// provided, must hold one coefficient per member (pad new members with 0);
/// it can shorten the solve but never changes the minimizer beyond tolerance.
inline ProjectionResult project(const PointSet& ps, std::span<const double> z,
                                std::span<const PointId> members, const Tolerances& tol,
                                std::span<const double> warm_start = {}) {
    const std::size_t m = ps.dim();
    const std::size_t s = members.size();
    if (s == 0) throw std::invalid_argument("project: member set is empty");
    if (z.size() != m) throw std::invalid_argument("project: query dimension mismatch");
    if (!detail::all_finite(z)) throw std::invalid_argument("project: non-finite query point");
    for (PointId id : members) ps.check_id(id);
    if (!warm_start.empty() && warm_start.size() != s)
        throw std::invalid_argument("project: warm start size must match the member count");

    Eigen::MatrixXd pts(m, s);
    for (std::size_t i = 0; i < s; ++i) {
        const auto r = ps.row(members[i]);
        for (std::size_t j = 0; j < m; ++j) pts(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = r[j];
    }
    Eigen::VectorXd query(m);
    for (std::size_t j = 0; j < m; ++j) query(static_cast<Eigen::Index>(j)) = z[j];

    // Active support (positions into `members`) and full coefficient vector.
    std::vector<std::size_t> support;
    std::vector<double> lambda(s, 0.0);

    if (!warm_start.empty()) {
        double sum = 0.0;
        for (std::size_t i = 0; i < s; ++i) {
            if (warm_start[i] > 0.0 && std::isfinite(warm_start[i])) sum += warm_start[i];
        }
        if (sum > 0.0) {
            for (std::size_t i = 0; i < s; ++i) {
                if (warm_start[i] > 0.0 && std::isfinite(warm_start[i])) {
                    lambda[i] = warm_start[i] / sum;
                    support.push_back(i);
                }
            }
        }
    }
    if (support.empty()) {
        std::size_t best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < s; ++i) {
            const double d = (pts.col(static_cast<Eigen::Index>(i)) - query).squaredNorm();
            if (d < best_d) {
                best_d = d;
                best = i;
            }
        }
        support.push_back(best);
        lambda[best] = 1.0;
    }

    const std::size_t max_pivots = 50 * s;
    std::size_t pivots = 0;

    auto support_matrix = [&]() {
        Eigen::MatrixXd y(m, support.size());
        for (std::size_t c = 0; c < support.size(); ++c)
            y.col(static_cast<Eigen::Index>(c)) = pts.col(static_cast<Eigen::Index>(support[c]));
        return y;
    };

    auto current_point = [&]() {
        Eigen::VectorXd p = Eigen::VectorXd::Zero(m);
        for (std::size_t c = 0; c < support.size(); ++c)
            p += lambda[support[c]] * pts.col(static_cast<Eigen::Index>(support[c]));
        return p;
    };

    // Restores the corral: walks the coefficients toward the affine minimizer
    // over the current support, dropping members whose weight reaches zero.
    auto restore_corral = [&]() {
        for (;;) {
            if (++pivots > max_pivots)
                throw solver_failure("project: pivot budget exceeded (" +
                                     std::to_string(max_pivots) + "); numerically degenerate input");
            Eigen::VectorXd w = detail::affine_weights(support_matrix(), query);
            double wmin = w.minCoeff();
            if (wmin >= -1e-12) {
                for (std::size_t c = 0; c < support.size(); ++c)
                    lambda[support[c]] = std::max(w(static_cast<Eigen::Index>(c)), 0.0);
                return;
            }
            double theta = std::numeric_limits<double>::infinity();
            for (std::size_t c = 0; c < support.size(); ++c) {
                const double wc = w(static_cast<Eigen::Index>(c));
                const double lc = lambda[support[c]];
                if (wc <= 0.0 && lc - wc > 0.0) theta = std::min(theta, lc / (lc - wc));
            }
            theta = std::clamp(theta, 0.0, 1.0);
            std::vector<std::size_t> next;
            next.reserve(support.size());
            for (std::size_t c = 0; c < support.size(); ++c) {
                const double wc = w(static_cast<Eigen::Index>(c));
                const double lc = lambda[support[c]];
                double nl = lc + theta * (wc - lc);
                const bool drop = wc <= 0.0 && nl <= 1e-14;
                if (drop) {
                    lambda[support[c]] = 0.0;
                } else {
                    lambda[support[c]] = std::max(nl, 0.0);
                    next.push_back(support[c]);
                }
            }
            if (next.size() == support.size()) {
                // No member hit zero (roundoff); force out the smallest ratio.
                std::size_t worst = 0;
                double worst_ratio = std::numeric_limits<double>::infinity();
                for (std::size_t c = 0; c < support.size(); ++c) {
                    const double wc = w(static_cast<Eigen::Index>(c));
                    const double lc = lambda[support[c]];
                    if (wc <= 0.0 && lc - wc > 0.0 && lc / (lc - wc) < worst_ratio) {
                        worst_ratio = lc / (lc - wc);
                        worst = c;
                    }
                }
                lambda[support[worst]] = 0.0;
                next.clear();
                for (std::size_t c = 0; c < support.size(); ++c)
                    if (c != worst) next.push_back(support[c]);
            }
            support = std::move(next);
            if (support.empty())
                throw solver_failure("project: support emptied during pivoting");
        }
    };

    // Warm starts may hand us an infeasible-for-optimality support; make the
    // iterate a proper corral before the first entering test.
    restore_corral();

    bool stalled = false;
    for (;;) {
        const Eigen::VectorXd p = current_point();
        const Eigen::VectorXd v = query - p;
        const double base = v.dot(p);
        std::size_t enter = 0;
        double best_ip = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < s; ++i) {
            const double ip = v.dot(pts.col(static_cast<Eigen::Index>(i)));
            if (ip > best_ip) {
                best_ip = ip;
                enter = i;
            }
        }
        if (best_ip - base <= tol.eps_kkt) break;
        if (std::find(support.begin(), support.end(), enter) != support.end()) {
            stalled = true;
            break;
        }
        support.push_back(enter);
        lambda[enter] = 0.0;
        restore_corral();
    }

    ProjectionResult out;
    double sum = 0.0;
    for (double l : lambda) sum += l;
    if (!(sum > 0.0)) throw solver_failure("project: coefficients degenerated to zero");
    for (double& l : lambda) l /= sum;
    out.lambda = std::move(lambda);

    Vec proj(m, 0.0);
    for (std::size_t i = 0; i < s; ++i) {
        if (out.lambda[i] == 0.0) continue;
        const auto r = ps.row(members[i]);
        for (std::size_t j = 0; j < m; ++j) proj[j] += out.lambda[i] * r[j];
    }
    out.residual.resize(m);
    for (std::size_t j = 0; j < m; ++j) out.residual[j] = z[j] - proj[j];
    out.dist_sq = std::max(detail::norm_sq(out.residual), 0.0);
    for (std::size_t i = 0; i < s; ++i)
        if (out.lambda[i] > tol.eps_kkt) out.support.push_back(members[i]);
    out.pivots = pivots;

    // Certificate from the final coefficients.
    const double vp = detail::dot(out.residual, proj);
    double violation = 0.0;
    double sum_check = 0.0;
    double min_l = std::numeric_limits<double>::infinity();
    for (double l : out.lambda) {
        sum_check += l;
        min_l = std::min(min_l, l);
    }
    const double feas = std::max(std::abs(sum_check - 1.0), std::max(0.0, -min_l));
    for (std::size_t i = 0; i < s; ++i) {
        const double ip = detail::dot(out.residual, ps.row(members[i]));
        violation = std::max(violation, ip - vp);
    }
    out.kkt_residual = std::max({0.0, violation, feas});

    if (stalled && out.kkt_residual > tol.eps_kkt)
        throw solver_failure("project: stalled with certificate residual " +
                             std::to_string(out.kkt_residual));
    return out;
}

/// Distance from z to the hull of the members; exact 0 at or below eps_zero.
inline double distance(const PointSet& ps, std::span<const double> z,
                       std::span<const PointId> members, const Tolerances& tol) {
    const double d2 = project(ps, z, members, tol).dist_sq;
    if (d2 <= tol.eps_zero * tol.eps_zero) return 0.0;
    return std::sqrt(d2);
}

/// Independent post-hoc optimality check: recomputes the projection point
/// from the reported coefficients with plain loops and returns the largest
/// violated condition (feasibility, sign, stationarity, distance identity).
inline double kkt_certificate(const PointSet& ps, std::span<const double> z,
                              std::span<const PointId> members, const ProjectionResult& r) {
    const std::size_t m = ps.dim();
    if (r.lambda.size() != members.size())
        throw std::invalid_argument("kkt_certificate: coefficient/member size mismatch");
    Vec proj(m, 0.0);
    double sum = 0.0;
    double min_l = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < members.size(); ++i) {
        const auto row = ps.row(members[i]);
        for (std::size_t j = 0; j < m; ++j) proj[j] += r.lambda[i] * row[j];
        sum += r.lambda[i];
        min_l = std::min(min_l, r.lambda[i]);
    }
    Vec v(m);
    for (std::size_t j = 0; j < m; ++j) v[j] = z[j] - proj[j];

    double worst = std::abs(sum - 1.0);
    worst = std::max(worst, -min_l);
    const double vp = detail::dot(v, proj);
    for (PointId id : members)
        worst = std::max(worst, detail::dot(v, ps.row(id)) - vp);
    worst = std::max(worst, std::abs(detail::norm_sq(v) - r.dist_sq));
    return std::max(worst, 0.0);
}

}  // namespace exhull
