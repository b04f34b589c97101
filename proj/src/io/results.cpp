// Copyright 2026 The ote-otto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "ote/errors.hpp"
#include "ote/io/results.hpp"

#ifndef OTE_VERSION
#define OTE_VERSION "0.0.0"
#endif

namespace ote::io {

namespace {

std::string format_number(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

double parse_number(const std::string& s) {
    const char* b = s.c_str();
    char* e = nullptr;
    errno = 0;
    const double v = std::strtod(b, &e);
    if (e == b || *e != '\0') throw IoError("not a number: '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

void ResultTable::add_row(std::vector<double> row) {
    if (row.size() != columns.size())
        throw DimensionError("result row has " + std::to_string(row.size()) + " values for " +
                             std::to_string(columns.size()) + " columns");
    rows.push_back(std::move(row));
}

std::size_t ResultTable::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i].name == name) return i;
    throw DimensionError("no column named '" + name + "'");
}

double ResultTable::at(std::size_t row, const std::string& name) const { return rows.at(row).at(column_index(name)); }

void ResultTable::set_metadata(const std::string& key, const std::string& value) {
    for (auto& kv : metadata)
        if (kv.first == key) {
            kv.second = value;
            return;
        }
    metadata.emplace_back(key, value);
}

const std::string* ResultTable::find_metadata(const std::string& key) const {
    for (const auto& kv : metadata)
        if (kv.first == key) return &kv.second;
    return nullptr;
}

void write_csv(const ResultTable& t, std::ostream& out, int precision, bool metadata) {
    if (metadata)
        for (const auto& [k, v] : t.metadata) out << "# " << k << ": " << v << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << (i ? "," : "") << t.columns[i].name << '[' << t.columns[i].unit << ']';
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i], precision);
        out << '\n';
    }
}

void write_json(const ResultTable& t, std::ostream& out, int precision, bool metadata) {
    // built by hand so numbers keep the requested precision
    auto quote = [](const std::string& s) { return nlohmann::json(s).dump(); };
    out << "{\n  \"metadata\": {";
    if (metadata)
        for (std::size_t i = 0; i < t.metadata.size(); ++i)
            out << (i ? ",\n    " : "\n    ") << quote(t.metadata[i].first) << ": " << quote(t.metadata[i].second);
    out << (metadata && !t.metadata.empty() ? "\n  },\n" : "},\n");
    out << "  \"columns\": [";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << (i ? ", " : "") << "{\"name\": " << quote(t.columns[i].name) << ", \"unit\": " << quote(t.columns[i].unit)
            << "}";
    out << "],\n  \"rows\": [";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out << (r ? ",\n    [" : "\n    [");
        for (std::size_t i = 0; i < t.rows[r].size(); ++i) {
            const double v = t.rows[r][i];
            out << (i ? ", " : "") << (std::isfinite(v) ? format_number(v, precision) : quote(format_number(v, precision)));
        }
        out << ']';
    }
    out << (t.rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

void write_results(const ResultTable& table, Format format, const std::string& path, int precision, bool metadata) {
    if (path.empty() || path == "-") {
        format == Format::csv ? write_csv(table, std::cout, precision, metadata)
                              : write_json(table, std::cout, precision, metadata);
        std::cout.flush();
        if (!std::cout) throw IoError("writing to stdout failed");
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing: " + std::strerror(errno));
    format == Format::csv ? write_csv(table, out, precision, metadata) : write_json(table, out, precision, metadata);
    out.close();
    if (!out) throw IoError("writing '" + path + "' failed: " + std::strerror(errno));
}

ResultTable read_csv(std::istream& in) {
    ResultTable t;
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind("# ", 0) == 0 && !header) {
            const auto colon = line.find(": ", 2);
            if (colon != std::string::npos) t.metadata.emplace_back(line.substr(2, colon - 2), line.substr(colon + 2));
            continue;
        }
        if (!header) {
            for (const auto& cell : split(line, ',')) {
                const auto open = cell.rfind('[');
                if (open == std::string::npos || cell.back() != ']') throw IoError("malformed CSV header cell '" + cell + "'");
                t.columns.push_back({cell.substr(0, open), cell.substr(open + 1, cell.size() - open - 2)});
            }
            header = true;
            continue;
        }
        if (line.empty()) continue;
        std::vector<double> row;
        for (const auto& cell : split(line, ',')) row.push_back(parse_number(cell));
        t.add_row(std::move(row));
    }
    if (!header) throw IoError("CSV has no header line");
    return t;
}

ResultTable read_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("malformed JSON results: ") + e.what());
    }
    ResultTable t;
    for (auto it = j["metadata"].begin(); it != j["metadata"].end(); ++it)
        t.metadata.emplace_back(it.key(), it.value().get<std::string>());
    for (const auto& c : j["columns"]) t.columns.push_back({c["name"].get<std::string>(), c["unit"].get<std::string>()});
    for (const auto& r : j["rows"]) {
        std::vector<double> row;
        for (const auto& v : r) row.push_back(v.is_string() ? parse_number(v.get<std::string>()) : v.get<double>());
        t.add_row(std::move(row));
    }
    return t;
}

void stamp_metadata(ResultTable& table, const RunConfig& config, const std::string& command) {
    table.set_metadata("command", command);
    table.set_metadata("code_version", OTE_VERSION);
    table.set_metadata("config_digest", config_digest(config));
    table.set_metadata("config", canonical_dump(config));
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    table.set_metadata("timestamp", buf);
}

} // namespace ote::io
