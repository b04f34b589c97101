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

// constants.hpp - SI physical constants (CODATA 2018)

#pragma once

namespace ote::constants {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double k_B = 1.380649e-23;           // J / K
inline constexpr double c = 299792458.0;              // m / s
inline constexpr double epsilon_0 = 8.8541878128e-12; // F / m

} // namespace ote::constants
