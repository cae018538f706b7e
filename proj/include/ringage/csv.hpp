#pragma once

// CSV emission and parsing for sweep records. Doubles are written with
// std::to_chars (shortest round-trip form), so re-parsing reproduces the exact
// values and identical runs produce byte-identical files.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "ringage/sweep.hpp"

namespace ringage {

inline constexpr const char* kRecordCsvHeader =
    "n,n_jammers,alpha,placement,model,engine,system_age,ci_halfwidth";

inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string to_csv_line(const ScalingRecord& r) {
    std::string line;
    line += std::to_string(r.n);
    line += ',';
    line += std::to_string(r.n_jammers);
    line += ',';
    line += format_double(r.alpha);
    line += ',';
    line += to_string(r.placement);
    line += ',';
    line += to_string(r.model);
    line += ',';
    line += to_string(r.engine);
    line += ',';
    line += format_double(r.system_age);
    line += ',';
    line += format_double(r.ci_halfwidth);
    return line;
}

inline void write_records_csv(const std::string& path, const std::vector<ScalingRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << kRecordCsvHeader << '\n';
    for (const auto& r : records) out << to_csv_line(r) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

namespace detail {

inline std::vector<std::string> split_csv_fields(const std::string& line) {
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

inline double parse_double(const std::string& s, const std::string& what) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::runtime_error("bad " + what + " value: '" + s + "'");
    return v;
}

inline std::int64_t parse_int(const std::string& s, const std::string& what) {
    std::int64_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::runtime_error("bad " + what + " value: '" + s + "'");
    return v;
}

}  // namespace detail

inline std::vector<ScalingRecord> read_records_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty csv: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kRecordCsvHeader)
        throw std::runtime_error("unexpected csv header in " + path + ": '" + line + "'");
    std::vector<ScalingRecord> records;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = detail::split_csv_fields(line);
        if (fields.size() != 8)
            throw std::runtime_error("expected 8 fields, got " + std::to_string(fields.size()) +
                                     ": '" + line + "'");
        ScalingRecord r;
        r.n = detail::parse_int(fields[0], "n");
        r.n_jammers = detail::parse_int(fields[1], "n_jammers");
        r.alpha = detail::parse_double(fields[2], "alpha");
        r.placement = strategy_from_string(fields[3]);
        r.model = model_from_string(fields[4]);
        r.engine = engine_from_string(fields[5]);
        r.system_age = detail::parse_double(fields[6], "system_age");
        r.ci_halfwidth = detail::parse_double(fields[7], "ci_halfwidth");
        records.push_back(r);
    }
    return records;
}

}  // namespace ringage
