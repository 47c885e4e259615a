#pragma once

// Run report assembly and serialization. The JSON document is key-sorted and
// byte-stable for a fixed configuration and input; wall-clock time is
// isolated in the single "wall_ms" field.

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exhull/hull.hpp"
#include "exhull/point_set.hpp"

namespace exhull {

struct RunConfig {
    std::string source;  ///< "file:<path>" or "generate:<kind>:n=..:m=..:seed=.."
    std::string init = "simplex";
    std::string order = "index";
    std::string verify = "none";
    bool center = false;
    bool trace = false;
    Tolerances tol;
};

struct VerificationOutcome {
    std::string mode;
    bool match = true;
    std::vector<PointId> only_in_hull;
    std::vector<PointId> only_in_oracle;
};

inline nlohmann::json build_report(const PointSet& ps, const RunConfig& config,
                                   const HullResult& hull,
                                   const std::optional<VerificationOutcome>& verification,
                                   const std::vector<std::size_t>& dropped_lines,
                                   double wall_ms) {
    nlohmann::json j;
    j["schema"] = 1;

    j["input"] = {
        {"n", ps.size()},
        {"m", ps.dim()},
        {"source", config.source},
        {"dropped_lines", dropped_lines},
    };

    j["config"] = {
        {"init", config.init},
        {"order", config.order},
        {"verify", config.verify},
        {"center", config.center},
        {"trace", config.trace},
        {"eps_zero", config.tol.eps_zero},
        {"eps_kkt", config.tol.eps_kkt},
        {"eps_sign", config.tol.eps_sign},
        {"eps_tie", config.tol.eps_tie},
        {"max_refine", config.tol.max_refine},
    };

    std::vector<std::size_t> one_based;
    for (PointId id : hull.extreme_ids) one_based.push_back(id + 1);
    j["extremes"] = {
        {"count", hull.extreme_ids.size()},
        {"zero_based", hull.extreme_ids},
        {"one_based", one_based},
    };

    nlohmann::json probes = nlohmann::json::array();
    for (const DirectionProbe& p : hull.seeding.probes)
        probes.push_back({{"direction", p.direction}, {"winner", p.winner}, {"unique", p.unique}});
    j["seeding"] = {
        {"e_prime", hull.seeding.e_prime},
        {"probes", probes},
    };

    nlohmann::json points = nlohmann::json::array();
    std::size_t growth_total = 0;
    for (const IterationTrace& t : hull.traces) {
        nlohmann::json entry = {
            {"id", t.point},
            {"one_based", t.point + 1},
            {"qp_solves", t.qp_solves},
            {"growth", t.qp_solves - 1},
            {"refines", t.refine_steps},
            {"final_ref_size", t.steps.empty() ? 0 : t.steps.back().ref_size},
            {"final_distance", t.steps.empty() ? 0.0 : t.steps.back().distance},
        };
        growth_total += t.qp_solves - 1;
        if (config.trace) {
            nlohmann::json steps = nlohmann::json::array();
            for (const TraceStep& s : t.steps) {
                nlohmann::json step = {
                    {"k", s.k},
                    {"distance", s.distance},
                    {"ref_size", s.ref_size},
                };
                if (s.added)
                    step["added"] = *s.added;
                else
                    step["added"] = nullptr;
                steps.push_back(std::move(step));
            }
            entry["trace"] = std::move(steps);
        }
        points.push_back(std::move(entry));
    }
    j["points"] = std::move(points);

    j["totals"] = {
        {"qp_solves", hull.total_qp_solves},
        {"growth_steps", growth_total},
        {"tie_checked_extreme", hull.tie_checked_extreme},
        {"tie_checked_interior", hull.tie_checked_interior},
    };

    if (verification) {
        j["verification"] = {
            {"mode", verification->mode},
            {"match", verification->match},
            {"only_in_hull", verification->only_in_hull},
            {"only_in_oracle", verification->only_in_oracle},
        };
    } else {
        j["verification"] = nullptr;
    }

    j["wall_ms"] = wall_ms;
    return j;
}

/// Writes via a sibling temp file and an atomic rename.
inline void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write to " + tmp);
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
    }
}

}  // namespace exhull
