#pragma once

// Command-line front end. Kept header-level so the test suite can drive the
// exact argv paths the binary exposes.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "exhull/csv.hpp"
#include "exhull/generate.hpp"
#include "exhull/hull.hpp"
#include "exhull/log.hpp"
#include "exhull/oracle.hpp"
#include "exhull/point_set.hpp"
#include "exhull/report.hpp"
#include "exhull/svg.hpp"

namespace exhull {

namespace detail {

inline std::vector<PointId> read_order_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open order file: " + path);
    std::vector<PointId> order;
    long long v;
    while (in >> v) {
        if (v < 0) throw std::runtime_error("order file: negative id " + std::to_string(v));
        order.push_back(static_cast<PointId>(v));
    }
    if (!in.eof()) throw std::runtime_error("order file: non-numeric token in " + path);
    return order;
}

inline PointSet centered_copy(const PointSet& ps) {
    const Vec c = ps.centroid();
    std::vector<Vec> rows;
    rows.reserve(ps.size());
    for (PointId i = 0; i < ps.size(); ++i) {
        Vec row(ps.dim());
        for (std::size_t j = 0; j < ps.dim(); ++j) row[j] = ps.at(i, j) - c[j];
        rows.push_back(std::move(row));
    }
    return PointSet::from_rows(rows);
}

inline std::string id_set_to_string(const std::vector<PointId>& ids, bool one_based) {
    std::ostringstream s;
    s << '{';
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s << ", ";
        s << ids[i] + (one_based ? 1 : 0);
    }
    s << '}';
    return s.str();
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"exhull: exact extreme points of a finite point set"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "compute the extreme point set of the input");

    std::string input_path;
    std::string generate_kind;
    std::size_t gen_n = 0, gen_m = 0;
    std::uint64_t gen_seed = 0;
    std::string init = "simplex";
    std::string order_mode = "index";
    std::string order_file;
    std::string verify = "none";
    std::string report_path, svg_path;
    double eps_zero = -1.0;
    bool trace = false, center = false;

    run->add_option("--input", input_path, "CSV file of points, one row per point");
    run->add_option("--generate", generate_kind,
                    "synthetic corpus: cube|gaussian|sphere|simplex-interior");
    run->add_option("--n", gen_n, "number of points to generate");
    run->add_option("--m", gen_m, "dimension of generated points");
    run->add_option("--seed", gen_seed, "generator seed");
    run->add_option("--init", init, "reference-set initialization: simplex|single-seed")
        ->check(CLI::IsMember({"simplex", "single-seed"}));
    run->add_option("--eps-zero", eps_zero, "override the zero-distance threshold");
    run->add_option("--order", order_mode, "processing order: index|file")
        ->check(CLI::IsMember({"index", "file"}));
    run->add_option("--order-file", order_file, "file of 0-based ids (used with --order file)");
    run->add_option("--verify", verify, "independent check: none|oracle|2d")
        ->check(CLI::IsMember({"none", "oracle", "2d"}));
    run->add_option("--report", report_path, "write a JSON run report to this path");
    run->add_option("--svg", svg_path, "write an SVG figure to this path (2-d inputs only)");
    run->add_flag("--trace", trace, "include per-iteration distances in the report");
    run->add_flag("--center", center, "subtract the centroid before processing");

    try {
        std::vector<std::string> argv(args.rbegin(), args.rend());
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (input_path.empty() == generate_kind.empty()) {
            log_error("exactly one of --input and --generate is required");
            return 1;
        }
        if (order_mode == "file" && order_file.empty()) {
            log_error("--order file requires --order-file PATH");
            return 1;
        }

        RunConfig config;
        config.init = init;
        config.order = order_mode;
        config.verify = verify;
        config.center = center;
        config.trace = trace;

        std::vector<std::size_t> dropped_lines;
        std::optional<PointSet> points;
        if (!input_path.empty()) {
            IngestResult ing = ingest_csv(input_path);
            dropped_lines = ing.dropped_lines;
            points.emplace(std::move(ing.points));
            config.source = "file:" + input_path;
        } else {
            const GeneratorKind kind = parse_generator_kind(generate_kind);
            if (gen_n == 0 || gen_m == 0) {
                log_error("--generate requires positive --n and --m");
                return 1;
            }
            points.emplace(generate(kind, gen_n, gen_m, gen_seed));
            config.source = "generate:" + generate_kind + ":n=" + std::to_string(gen_n) +
                            ":m=" + std::to_string(gen_m) + ":seed=" + std::to_string(gen_seed);
        }
        if (center) points.emplace(detail::centered_copy(*points));
        const PointSet& ps = *points;

        if (!svg_path.empty() && ps.dim() != 2) {
            log_error("--svg requires two-dimensional input (m=" + std::to_string(ps.dim()) + ")");
            return 1;
        }
        if (verify == "2d" && ps.dim() != 2) {
            log_error("--verify 2d requires two-dimensional input");
            return 1;
        }

        Tolerances tol = default_tolerances(ps);
        if (eps_zero >= 0.0) {
            tol.eps_zero = eps_zero;
            tol.eps_kkt = std::min(tol.eps_kkt, eps_zero);
        }
        config.tol = tol;

        HullOptions opts;
        opts.init = init == "simplex" ? InitStrategy::simplex : InitStrategy::single_seed;
        if (order_mode == "file") opts.order = detail::read_order_file(order_file);

        const auto t0 = std::chrono::steady_clock::now();
        const HullResult hull = construct_hull(ps, tol, opts);
        const auto t1 = std::chrono::steady_clock::now();
        const double wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

        std::optional<VerificationOutcome> outcome;
        if (verify != "none") {
            const std::vector<PointId> reference =
                verify == "2d" ? hull_2d(ps, tol) : classify_all_bruteforce(ps, tol);
            VerificationOutcome v;
            v.mode = verify;
            std::set_difference(hull.extreme_ids.begin(), hull.extreme_ids.end(),
                                reference.begin(), reference.end(),
                                std::back_inserter(v.only_in_hull));
            std::set_difference(reference.begin(), reference.end(), hull.extreme_ids.begin(),
                                hull.extreme_ids.end(), std::back_inserter(v.only_in_oracle));
            v.match = v.only_in_hull.empty() && v.only_in_oracle.empty();
            outcome = std::move(v);
        }

        std::cout << "exhull: n=" << ps.size() << " m=" << ps.dim() << " source=" << config.source
                  << "\n";
        std::cout << "extremes (1-based): " << detail::id_set_to_string(hull.extreme_ids, true)
                  << "\n";
        std::cout << "extremes (0-based): " << detail::id_set_to_string(hull.extreme_ids, false)
                  << "\n";
        std::cout << "count: " << hull.extreme_ids.size() << "  qp solves: "
                  << hull.total_qp_solves << "  wall: " << wall_ms << " ms\n";

        if (!report_path.empty()) {
            const nlohmann::json rep =
                build_report(ps, config, hull, outcome, dropped_lines, wall_ms);
            write_file_atomic(report_path, rep.dump(2) + "\n");
            log_info("report written to " + report_path);
        }
        if (!svg_path.empty()) {
            write_svg(svg_path, ps, hull, tol, trace);
            log_info("figure written to " + svg_path);
        }

        if (outcome) {
            if (outcome->match) {
                std::cout << "verification (" << outcome->mode << "): match\n";
            } else {
                std::cout << "verification (" << outcome->mode << "): MISMATCH\n";
                std::cout << "  only in hull:   "
                          << detail::id_set_to_string(outcome->only_in_hull, true) << "\n";
                std::cout << "  only in oracle: "
                          << detail::id_set_to_string(outcome->only_in_oracle, true) << "\n";
                return 2;
            }
        }
        return 0;
    } catch (const parse_error& e) {
        log_error(std::string("input error: ") + e.what());
        return 1;
    } catch (const std::exception& e) {
        log_error(e.what());
        return 1;
    }
}

}  // namespace exhull
