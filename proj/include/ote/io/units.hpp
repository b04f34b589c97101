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

// units.hpp - SI quantities written as "<number> [unit]"

#pragma once

#include <string>
#include <string_view>

namespace ote::io {

enum class Dimension { dimensionless, length, temperature, angular_frequency, rate, dipole_moment };

std::string_view to_string(Dimension d);

/// SI unit written in table headers and canonical dumps.
std::string_view si_unit(Dimension d);

/// Parses "1.5", "26 um", "700 K", "1 D", "inf". A bare number is taken as SI.
/// Throws ConfigError for unknown units or units of the wrong dimension.
double parse_quantity(std::string_view text, Dimension expected);

} // namespace ote::io
