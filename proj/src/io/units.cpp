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

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "ote/errors.hpp"
#include "ote/io/units.hpp"

namespace ote::io {

namespace {

struct UnitDef {
    std::string_view name;
    Dimension dimension;
    double scale;
};

constexpr double debye = 3.33564095198152e-30; // C m

constexpr std::array<UnitDef, 19> units{{
    {"m", Dimension::length, 1.0},
    {"cm", Dimension::length, 1e-2},
    {"mm", Dimension::length, 1e-3},
    {"um", Dimension::length, 1e-6},
    {"µm", Dimension::length, 1e-6},
    {"nm", Dimension::length, 1e-9},
    {"K", Dimension::temperature, 1.0},
    {"rad/s", Dimension::angular_frequency, 1.0},
    {"Trad/s", Dimension::angular_frequency, 1e12},
    {"Grad/s", Dimension::angular_frequency, 1e9},
    {"1/s", Dimension::rate, 1.0},
    {"s^-1", Dimension::rate, 1.0},
    {"/s", Dimension::rate, 1.0},
    {"C m", Dimension::dipole_moment, 1.0},
    {"C*m", Dimension::dipole_moment, 1.0},
    {"Cm", Dimension::dipole_moment, 1.0},
    {"D", Dimension::dipole_moment, debye},
    {"debye", Dimension::dipole_moment, debye},
    {"1", Dimension::dimensionless, 1.0},
}};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

std::string_view to_string(Dimension d) {
    switch (d) {
    case Dimension::dimensionless: return "dimensionless";
    case Dimension::length: return "length";
    case Dimension::temperature: return "temperature";
    case Dimension::angular_frequency: return "angular frequency";
    case Dimension::rate: return "rate";
    case Dimension::dipole_moment: return "dipole moment";
    }
    return "unknown";
}

std::string_view si_unit(Dimension d) {
    switch (d) {
    case Dimension::dimensionless: return "1";
    case Dimension::length: return "m";
    case Dimension::temperature: return "K";
    case Dimension::angular_frequency: return "rad/s";
    case Dimension::rate: return "1/s";
    case Dimension::dipole_moment: return "C m";
    }
    return "";
}

double parse_quantity(std::string_view text, Dimension expected) {
    const std::string_view s = trim(text);
    if (s.empty()) throw ConfigError("empty quantity");
    // number prefix
    std::size_t end = 0;
    double value = 0.0;
    std::string_view rest;
    if (s.substr(0, 3) == "inf" || s.substr(0, 4) == "+inf" || s.substr(0, 4) == ".inf") {
        value = std::numeric_limits<double>::infinity();
        end = s.front() == 'i' ? 3 : 4;
    } else {
        const char* first = s.data();
        if (*first == '+') ++first;
        const auto res = std::from_chars(first, s.data() + s.size(), value);
        if (res.ec != std::errc()) throw ConfigError("cannot read a number from '" + std::string(s) + "'");
        end = static_cast<std::size_t>(res.ptr - s.data());
    }
    rest = trim(s.substr(end));
    if (rest.empty()) return value;
    if (rest == "Hz" || rest == "THz" || rest == "GHz")
        throw ConfigError("unit violation: '" + std::string(rest) +
                          "' is ambiguous by 2 pi; give angular frequencies in rad/s");
    for (const auto& u : units) {
        if (u.name != rest) continue;
        if (u.dimension != expected)
            throw ConfigError("unit violation: '" + std::string(rest) + "' is a " + std::string(to_string(u.dimension)) +
                              " unit, expected " + std::string(to_string(expected)) + " (" +
                              std::string(si_unit(expected)) + ")");
        return value * u.scale;
    }
    throw ConfigError("unit violation: unknown unit '" + std::string(rest) + "' (expected " +
                      std::string(to_string(expected)) + ", SI unit " + std::string(si_unit(expected)) + ")");
}

} // namespace ote::io
