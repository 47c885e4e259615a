#pragma once

// Point-set model shared by all algorithms: immutable dense storage with
// index identity, tolerance bundle, the query-centered coordinate transform,
// and the three-valued sign pattern.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace exhull {

using PointId = std::size_t;
using Vec = std::vector<double>;

namespace detail {

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
    return s;
}

inline double norm_sq(std::span<const double> v) { return dot(v, v); }

inline double norm(std::span<const double> v) { return std::sqrt(norm_sq(v)); }

inline bool all_finite(std::span<const double> v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

}  // namespace detail

/// Thresholds used across the solver and the classifiers. All values are
/// absolute; default_tolerances() derives scale-aware defaults from the data.
struct Tolerances {
    double eps_zero = 1e-8;  ///< distances at or below this are treated as zero
    double eps_kkt = 1e-10;  ///< optimality/feasibility residual bound for projections
    double eps_sign = 0.0;   ///< |coordinate| at or below this has sign 0
    double eps_tie = 1e-9;   ///< argmax gap per unit direction length treated as a tie
    std::size_t max_refine = 0;  ///< refinement cap K in simplex seeding; 0 means "use the dimension"

    void validate() const {
        if (!(eps_zero >= 0.0) || !(eps_kkt >= 0.0) || !(eps_sign >= 0.0) || !(eps_tie >= 0.0))
            throw std::invalid_argument("Tolerances: all thresholds must be non-negative");
        if (eps_zero < eps_kkt)
            throw std::invalid_argument("Tolerances: eps_zero must be at least eps_kkt");
    }
};

/// Immutable n x m point collection. Rows are pairwise distinct and finite;
/// ids are row indices, stable for the lifetime of the set.
class PointSet {
public:
    PointSet(std::size_t dim, std::vector<double> row_major)
        : m_(dim), data_(std::move(row_major)) {
        if (m_ == 0) throw std::invalid_argument("PointSet: dimension must be positive");
        if (data_.empty() || data_.size() % m_ != 0)
            throw std::invalid_argument("PointSet: row data does not match the dimension");
        n_ = data_.size() / m_;
        if (!detail::all_finite(data_))
            throw std::invalid_argument("PointSet: coordinates must be finite");
        check_distinct();
    }

    static PointSet from_rows(const std::vector<Vec>& rows) {
        if (rows.empty()) throw std::invalid_argument("PointSet: need at least one point");
        const std::size_t m = rows.front().size();
        std::vector<double> flat;
        flat.reserve(rows.size() * m);
        for (const Vec& r : rows) {
            if (r.size() != m) throw std::invalid_argument("PointSet: ragged rows");
            flat.insert(flat.end(), r.begin(), r.end());
        }
        return PointSet(m, std::move(flat));
    }

    /// Keep-first exact deduplication. Returns the surviving rows and the
    /// 0-based indices of dropped duplicates, in input order.
    static std::pair<std::vector<Vec>, std::vector<std::size_t>> dedup_rows(
        const std::vector<Vec>& rows) {
        std::vector<Vec> kept;
        std::vector<std::size_t> dropped;
        std::map<Vec, std::size_t> seen;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto [it, inserted] = seen.emplace(rows[i], i);
            if (inserted) {
                kept.push_back(rows[i]);
            } else {
                dropped.push_back(i);
            }
        }
        return {std::move(kept), std::move(dropped)};
    }

    std::size_t size() const { return n_; }
    std::size_t dim() const { return m_; }

    std::span<const double> row(PointId i) const {
        check_id(i);
        return {data_.data() + i * m_, m_};
    }

    double at(PointId i, std::size_t j) const {
        check_id(i);
        if (j >= m_) throw std::out_of_range("PointSet: coordinate index out of range");
        return data_[i * m_ + j];
    }

    void check_id(PointId i) const {
        if (i >= n_)
            throw std::out_of_range("PointSet: point id " + std::to_string(i) +
                                    " out of range [0, " + std::to_string(n_) + ")");
    }

    double max_abs_coord() const {
        double mx = 0.0;
        for (double x : data_) mx = std::max(mx, std::abs(x));
        return mx;
    }

    /// Diagonal of the bounding box; cheap upper-bound style diameter estimate.
    double bbox_diameter() const {
        double s = 0.0;
        for (std::size_t j = 0; j < m_; ++j) {
            double lo = std::numeric_limits<double>::infinity();
            double hi = -std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < n_; ++i) {
                lo = std::min(lo, data_[i * m_ + j]);
                hi = std::max(hi, data_[i * m_ + j]);
            }
            s += (hi - lo) * (hi - lo);
        }
        return std::sqrt(s);
    }

    Vec centroid() const {
        Vec c(m_, 0.0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < m_; ++j) c[j] += data_[i * m_ + j];
        for (double& x : c) x /= static_cast<double>(n_);
        return c;
    }

private:
    void check_distinct() const {
        std::vector<PointId> idx(n_);
        for (std::size_t i = 0; i < n_; ++i) idx[i] = i;
        auto less = [this](PointId a, PointId b) {
            return std::lexicographical_compare(data_.begin() + a * m_, data_.begin() + (a + 1) * m_,
                                                data_.begin() + b * m_, data_.begin() + (b + 1) * m_);
        };
        std::sort(idx.begin(), idx.end(), less);
        for (std::size_t i = 1; i < n_; ++i) {
            if (!less(idx[i - 1], idx[i]))
                throw std::invalid_argument(
                    "PointSet: duplicate rows " + std::to_string(idx[i - 1]) + " and " +
                    std::to_string(idx[i]) + "; deduplicate before construction");
        }
    }

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<double> data_;
};

/// Scale-aware defaults. eps_zero is raised to eps_kkt when the quadratic
/// coordinate term would otherwise exceed the linear diameter term.
inline Tolerances default_tolerances(const PointSet& ps) {
    const double mx = ps.max_abs_coord();
    const double diam = ps.bbox_diameter();
    Tolerances tol;
    tol.eps_kkt = 1e-10 * (1.0 + mx * mx);
    tol.eps_zero = std::max(1e-8 * (1.0 + diam), tol.eps_kkt);
    tol.eps_sign = 0.0;
    tol.eps_tie = 1e-9 * (1.0 + diam);
    tol.max_refine = ps.dim();
    return tol;
}

/// Coordinates of each subset member relative to the query point l, i.e.
/// x_i - x_l in subset order. The entry for i == l is exactly zero.
inline std::vector<Vec> transform_centered(const PointSet& ps, PointId l,
                                           std::span<const PointId> subset) {
    const auto origin = ps.row(l);
    std::vector<Vec> out;
    out.reserve(subset.size());
    for (PointId i : subset) {
        const auto r = ps.row(i);
        Vec v(ps.dim());
        for (std::size_t j = 0; j < ps.dim(); ++j) v[j] = r[j] - origin[j];
        out.push_back(std::move(v));
    }
    return out;
}

using SignPattern = std::vector<std::int8_t>;

/// Component-wise three-valued sign; magnitudes at or below eps_sign map to 0.
inline SignPattern sign_pattern(std::span<const double> v, double eps_sign) {
    if (!detail::all_finite(v)) throw std::invalid_argument("sign_pattern: non-finite input");
    SignPattern s(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (std::abs(v[j]) <= eps_sign)
            s[j] = 0;
        else
            s[j] = v[j] > 0.0 ? 1 : -1;
    }
    return s;
}

/// Where a reference-set member came from; drives which members may enter the
/// confirmed extreme set without further checks.
enum class MemberOrigin : std::uint8_t {
    known_extreme,  ///< taken from the current confirmed extreme set
    argmax_unique,  ///< strict unique maximizer of some direction
    argmax_tied,    ///< maximizer that tied within eps_tie; extremeness unproven
    custom_seed,    ///< caller-provided seed with no pedigree
};

/// Ordered working subset attached to one query point. The owner may appear
/// among the members (the growth loop can select the query itself).
struct ReferenceSet {
    PointId owner = 0;
    std::vector<PointId> members;        // insertion order preserved
    std::vector<MemberOrigin> origins;   // parallel to members

    bool contains(PointId id) const {
        return std::find(members.begin(), members.end(), id) != members.end();
    }

    /// Appends a member; returns false if it is already present.
    bool add(PointId id, MemberOrigin origin) {
        if (contains(id)) return false;
        members.push_back(id);
        origins.push_back(origin);
        return true;
    }

    std::size_t size() const { return members.size(); }
};

}  // namespace exhull
