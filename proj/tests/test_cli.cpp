#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "exhull/cli.hpp"

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

int run(std::vector<std::string> args) { return exhull::run_cli(args); }

}  // namespace

TEST_CASE("cli verifies the worked instance against the planar oracle") {
    TempFile csv("exhull_cli_table1.csv", kTableCsv);
    TempFile report("exhull_cli_report.json");
    CHECK(run({"run", "--input", csv.str(), "--verify", "2d", "--report", report.str(),
               "--trace"}) == 0);

    std::ifstream in(report.str());
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    CHECK(j["extremes"]["one_based"] == nlohmann::json({1, 2, 3, 4, 5, 6, 9}));
    CHECK(j["verification"]["match"] == true);
    CHECK(j["schema"] == 1);
    REQUIRE(j["points"].is_array());
    CHECK(j["points"][0].contains("trace"));
}

TEST_CASE("cli runs generated corpora with the brute-force oracle") {
    CHECK(run({"run", "--generate", "sphere", "--n", "50", "--m", "4", "--seed", "11",
               "--verify", "oracle"}) == 0);
    CHECK(run({"run", "--generate", "simplex-interior", "--n", "30", "--m", "3", "--seed", "5",
               "--verify", "oracle", "--init", "single-seed"}) == 0);
}

TEST_CASE("cli writes figures for planar inputs only") {
    TempFile csv("exhull_cli_svg.csv", kTableCsv);
    TempFile svg("exhull_cli_out.svg");
    CHECK(run({"run", "--input", csv.str(), "--svg", svg.str()}) == 0);
    std::ifstream in(svg.str());
    std::ostringstream body;
    body << in.rdbuf();
    CHECK(body.str().find("<polygon") != std::string::npos);

    CHECK(run({"run", "--generate", "gaussian", "--n", "20", "--m", "3", "--seed", "1",
               "--svg", svg.str()}) == 1);
}

TEST_CASE("cli usage errors exit with code 1") {
    CHECK(run({"run"}) == 1);                                        // no input at all
    CHECK(run({"run", "--generate", "cube"}) == 1);                  // missing sizes
    CHECK(run({"run", "--generate", "cube", "--n", "0", "--m", "2"}) == 1);
    CHECK(run({"run", "--input", "/nonexistent/points.csv"}) == 1);
    CHECK(run({"run", "--generate", "gaussian", "--n", "10", "--m", "3", "--seed", "1",
               "--verify", "2d"}) == 1);                             // 2d check needs m=2
    TempFile csv("exhull_cli_order.csv", kTableCsv);
    CHECK(run({"run", "--input", csv.str(), "--order", "file"}) == 1);  // missing order file
}

TEST_CASE("cli honors explicit processing orders and centering") {
    TempFile csv("exhull_cli_order2.csv", kTableCsv);
    TempFile order("exhull_cli_order2.txt", "7\n6\n5\n");
    CHECK(run({"run", "--input", csv.str(), "--order", "file", "--order-file", order.str(),
               "--verify", "2d"}) == 0);
    CHECK(run({"run", "--input", csv.str(), "--center", "--verify", "2d"}) == 0);
}

TEST_CASE("cli reports are reproducible across runs") {
    TempFile csv("exhull_cli_repro.csv", kTableCsv);
    TempFile r1("exhull_cli_r1.json");
    TempFile r2("exhull_cli_r2.json");
    CHECK(run({"run", "--input", csv.str(), "--report", r1.str()}) == 0);
    CHECK(run({"run", "--input", csv.str(), "--report", r2.str()}) == 0);

    nlohmann::json a, b;
    std::ifstream(r1.str()) >> a;
    std::ifstream(r2.str()) >> b;
    a.erase("wall_ms");
    b.erase("wall_ms");
    CHECK(a.dump() == b.dump());
}
