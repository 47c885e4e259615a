#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "exhull/csv.hpp"
#include "exhull/hull.hpp"
#include "exhull/report.hpp"
#include "exhull/svg.hpp"
#include "support/fixtures.hpp"

using exhull::ingest_csv;
using exhull::parse_error;
using exhull::PointId;
using exhull::PointSet;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name, const std::string& content = "") {
        path = std::filesystem::temp_directory_path() / name;
        if (!content.empty()) {
            std::ofstream out(path, std::ios::binary);
            out << content;
        }
    }
    ~TempFile() { std::filesystem::remove(path); }
    std::string str() const { return path.string(); }
};

const std::string kTableCsv =
    "10,26\n72,20\n40,1\n46,76\n32,72\n71,36\n34,66\n40,38\n62,69\n";

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("csv ingestion of the worked instance") {
    TempFile f("exhull_table1.csv", kTableCsv);
    const auto result = ingest_csv(f.str());
    CHECK(result.points.size() == 9);
    CHECK(result.points.dim() == 2);
    CHECK(!result.header_skipped);
    CHECK(result.dropped_lines.empty());
    CHECK(result.points.at(0, 0) == 10.0);
    CHECK(result.points.at(8, 1) == 69.0);
}

TEST_CASE("header rows are detected and skipped") {
    TempFile f("exhull_header.csv", "x1,x2\n" + kTableCsv);
    const auto result = ingest_csv(f.str());
    CHECK(result.header_skipped);
    CHECK(result.points.size() == 9);
    CHECK(result.points.at(0, 1) == 26.0);
}

TEST_CASE("crlf and surrounding spaces are tolerated") {
    TempFile f("exhull_crlf.csv", "1 , 2\r\n3,4\r\n");
    const auto result = ingest_csv(f.str());
    CHECK(result.points.size() == 2);
    CHECK(result.points.at(0, 0) == 1.0);
    CHECK(result.points.at(0, 1) == 2.0);
}

TEST_CASE("parse failures carry the offending line number") {
    TempFile ragged("exhull_ragged.csv", "1,2\n3,4,5\n");
    try {
        ingest_csv(ragged.str());
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
    }

    TempFile bad("exhull_bad.csv", "1,2\nabc,4\n");
    try {
        ingest_csv(bad.str());
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("abc") != std::string::npos);
    }

    TempFile empty("exhull_empty.csv", "");
    CHECK_THROWS_AS(ingest_csv(empty.str()), parse_error);

    TempFile headeronly("exhull_headeronly.csv", "x,y\n");
    CHECK_THROWS_AS(ingest_csv(headeronly.str()), parse_error);

    CHECK_THROWS_AS(ingest_csv("/nonexistent/exhull.csv"), parse_error);
}

TEST_CASE("duplicate rows are dropped with their line numbers") {
    TempFile f("exhull_dupe.csv", "1,2\n3,4\n1,2\n5,6\n");
    const auto result = ingest_csv(f.str());
    CHECK(result.points.size() == 3);
    CHECK(result.dropped_lines == std::vector<std::size_t>{3});
}

TEST_CASE("reports are byte-stable apart from the wall-clock field") {
    const PointSet ps = testsupport::nine_point_instance();
    const exhull::Tolerances tol = exhull::default_tolerances(ps);
    const exhull::HullResult hull = exhull::construct_hull(ps, tol);

    exhull::RunConfig config;
    config.source = "file:table1.csv";
    config.trace = true;
    config.tol = tol;

    nlohmann::json a = exhull::build_report(ps, config, hull, std::nullopt, {}, 12.5);
    nlohmann::json b = exhull::build_report(ps, config, hull, std::nullopt, {}, 99.0);
    CHECK(a != b);
    a.erase("wall_ms");
    b.erase("wall_ms");
    CHECK(a.dump() == b.dump());

    CHECK(a["schema"] == 1);
    CHECK(a["extremes"]["one_based"] == nlohmann::json({1, 2, 3, 4, 5, 6, 9}));
    CHECK(a["extremes"]["zero_based"] == nlohmann::json({0, 1, 2, 3, 4, 5, 8}));
    CHECK(a["input"]["n"] == 9);
    CHECK(a["totals"]["qp_solves"] == hull.total_qp_solves);

    // rebuilt from a fresh run: identical document
    const exhull::HullResult hull2 = exhull::construct_hull(ps, tol);
    nlohmann::json c = exhull::build_report(ps, config, hull2, std::nullopt, {}, 0.0);
    c.erase("wall_ms");
    CHECK(a.dump() == c.dump());
}

TEST_CASE("atomic writes land complete files") {
    TempFile f("exhull_atomic.json");
    exhull::write_file_atomic(f.str(), "{\"ok\": true}\n");
    CHECK(slurp(f.str()) == "{\"ok\": true}\n");
    CHECK(!std::filesystem::exists(f.str() + ".tmp"));

    // overwrite keeps the new content
    exhull::write_file_atomic(f.str(), "second\n");
    CHECK(slurp(f.str()) == "second\n");
}

TEST_CASE("svg rendering covers points, polygon, and trace arrows") {
    const PointSet ps = testsupport::nine_point_instance();
    const exhull::Tolerances tol = exhull::default_tolerances(ps);
    exhull::HullOptions opts;
    opts.init = exhull::InitStrategy::single_seed;
    const exhull::HullResult hull = exhull::construct_hull(ps, tol, opts);

    const std::string svg = exhull::render_svg(ps, hull, tol, true);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("<polygon") != std::string::npos);
    std::size_t circles = 0;
    for (std::size_t pos = svg.find("<circle"); pos != std::string::npos;
         pos = svg.find("<circle", pos + 1))
        ++circles;
    CHECK(circles == ps.size());
    CHECK(svg.find("<line") != std::string::npos);  // at least one growth arrow

    const PointSet hi = PointSet::from_rows({{0, 0, 0}, {1, 1, 1}});
    const exhull::HullResult h2 = exhull::construct_hull(hi, exhull::default_tolerances(hi));
    CHECK_THROWS_AS(exhull::render_svg(hi, h2, tol, false), std::invalid_argument);
}
