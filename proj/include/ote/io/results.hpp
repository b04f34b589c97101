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

// results.hpp - tabular results with units and run metadata

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ote/io/config.hpp"

namespace ote::io {

struct Column {
    std::string name;
    std::string unit;
};

struct ResultTable {
    std::vector<Column> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> metadata; // written in order

    /// Throws DimensionError when the row length differs from the column count.
    void add_row(std::vector<double> row);
    std::size_t column_index(const std::string& name) const;
    double at(std::size_t row, const std::string& name) const;
    void set_metadata(const std::string& key, const std::string& value);
    const std::string* find_metadata(const std::string& key) const;
};

/// CSV: "# key: value" metadata lines, one "name[unit]" header line, %.<precision>g values.
void write_csv(const ResultTable& table, std::ostream& out, int precision = 17, bool metadata = true);
/// JSON: {"metadata": {...}, "columns": [{"name", "unit"}], "rows": [[...]]}; non-finite values as strings.
void write_json(const ResultTable& table, std::ostream& out, int precision = 17, bool metadata = true);

/// Writes to path, or stdout for an empty path. Throws IoError with the OS reason.
void write_results(const ResultTable& table, Format format, const std::string& path, int precision = 17,
                   bool metadata = true);

ResultTable read_csv(std::istream& in);
ResultTable read_json(std::istream& in);

/// Common metadata: code version, config digest, canonical config, timestamp.
void stamp_metadata(ResultTable& table, const RunConfig& config, const std::string& command);

} // namespace ote::io
