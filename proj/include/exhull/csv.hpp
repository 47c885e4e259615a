#pragma once

// CSV ingestion: comma-separated numeric rows, UTF-8, LF or CRLF, optional
// single header row (detected by any non-numeric field in the first row).
// Exact duplicate rows are dropped with a warning naming the file lines.

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "exhull/log.hpp"
#include "exhull/point_set.hpp"

namespace exhull {

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_ = 0;
};

struct IngestResult {
    PointSet points;
    std::vector<std::size_t> dropped_lines;  ///< 1-based file lines removed as duplicates
    bool header_skipped = false;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

inline bool parse_field(const std::string& field, double& out) {
    const std::string t = trim(field);
    if (t.empty()) return false;
    const char* begin = t.data();
    const char* end = begin + t.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end && std::isfinite(out);
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace detail

inline IngestResult ingest_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error(0, "cannot open file: " + path);

    std::vector<std::pair<std::size_t, std::string>> lines;  // (1-based line, content)
    {
        std::string line;
        std::size_t no = 0;
        while (std::getline(in, line)) {
            ++no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (no == 1 && line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF &&
                static_cast<unsigned char>(line[1]) == 0xBB &&
                static_cast<unsigned char>(line[2]) == 0xBF)
                line.erase(0, 3);
            if (detail::trim(line).empty()) continue;
            lines.emplace_back(no, line);
        }
    }
    if (lines.empty()) throw parse_error(1, "empty file");

    bool header_skipped = false;
    std::size_t first = 0;
    {
        const auto fields = detail::split_csv_line(lines[0].second);
        double v;
        for (const std::string& f : fields) {
            if (!detail::parse_field(f, v)) {
                header_skipped = true;
                first = 1;
                break;
            }
        }
    }
    if (first >= lines.size()) throw parse_error(lines[0].first, "no data rows after header");

    std::vector<Vec> rows;
    std::vector<std::size_t> row_lines;
    std::size_t width = 0;
    for (std::size_t i = first; i < lines.size(); ++i) {
        const auto& [line_no, text] = lines[i];
        const auto fields = detail::split_csv_line(text);
        if (width == 0) width = fields.size();
        if (fields.size() != width)
            throw parse_error(line_no, "expected " + std::to_string(width) + " fields, got " +
                                           std::to_string(fields.size()));
        Vec row(width);
        for (std::size_t j = 0; j < width; ++j) {
            if (!detail::parse_field(fields[j], row[j]))
                throw parse_error(line_no, "field " + std::to_string(j + 1) +
                                               " is not a finite number: '" +
                                               detail::trim(fields[j]) + "'");
        }
        rows.push_back(std::move(row));
        row_lines.push_back(line_no);
    }

    auto [kept, dropped_idx] = PointSet::dedup_rows(rows);
    std::vector<std::size_t> dropped_lines;
    for (std::size_t idx : dropped_idx) dropped_lines.push_back(row_lines[idx]);
    if (!dropped_lines.empty()) {
        std::ostringstream msg;
        msg << "dropped " << dropped_lines.size() << " duplicate row(s) at file line(s)";
        for (std::size_t ln : dropped_lines) msg << ' ' << ln;
        log_warn(msg.str());
    }

    return {PointSet::from_rows(kept), std::move(dropped_lines), header_skipped};
}

}  // namespace exhull
