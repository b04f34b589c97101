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

// config.hpp - run configuration (YAML) with defaults, validation and canonical echo

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "ote/cycle/otto.hpp"
#include "ote/em/environment.hpp"
#include "ote/lindblad/network.hpp"

namespace ote::io {

enum class Format { csv, json };

struct EmittersConfig {
    std::optional<double> omega_a;   // rad/s; when absent omega_a_ratio * omega_s
    double omega_a_ratio = 0.1;
    std::optional<double> omega_s;   // rad/s, auxiliary |0>-|2>; defaults to the material resonance
    double z = 26e-6;                // m, height of both emitters
    double separation = 1e-6;        // m, auxiliary sits at (0, separation, z)
    double dipole = 1e-29;           // C m, default for every transition
    Eigen::Vector3d orientation = Eigen::Vector3d::UnitX();
    std::optional<double> dipole_working_fluid, dipole_high, dipole_resonant, dipole_low;
    bool auxiliary = true;
    std::optional<double> lambda;    // rad/s, replaces the computed coupling
};

enum class SweepOver { k, alpha };

struct CycleConfig {
    cycle::CycleMode mode = cycle::CycleMode::ote_ideal;
    double k = 0.5;
    std::vector<double> k_grid;         // empty: 200 uniform points in (0, 1]
    double alpha = cycle::infinite_alpha;
    std::vector<double> alpha_grid;     // used by alpha sweeps and figure presets
    SweepOver sweep = SweepOver::k;
    double tol = 1e-9;
    int rate_points = 64;
    double omega_min_ratio = 1e-3;
};

struct RatesConfig {
    double from_ratio = 0.05; // of omega_s
    double to_ratio = 2.0;
    int points = 100;
    bool logarithmic = true;
};

struct OutputConfig {
    std::string path;  // empty: stdout
    Format format = Format::csv;
    int precision = 17;
    bool metadata = true;
};

struct RunConfig {
    std::string material_name; // preset name, or "custom"
    em::OteEnvironment environment;
    double material_resonance = 0.0; // rad/s
    EmittersConfig emitters;
    CycleConfig cycle;
    RatesConfig rates;
    OutputConfig output;

    double omega_s() const;
    double omega_a() const;
    std::vector<double> k_grid() const;
};

struct ParseOptions {
    std::string preset_dir; // empty: compiled-in default or $OTE_OTTO_PRESETS
};

/// Throws ConfigError naming the key and line of unknown keys, unit violations and
/// violated constraints.
RunConfig parse_config(std::string_view text, const ParseOptions& options = {});
RunConfig load_config(const std::string& path, const ParseOptions& options = {});

std::string default_preset_dir();

/// Fully resolved configuration in SI units, one line (YAML flow style).
std::string canonical_dump(const RunConfig& config);

/// FNV-1a 64 of the canonical dump, as 16 hex digits.
std::string config_digest(const RunConfig& config);

/// Working fluid at (0, 0, z) and, when enabled, the auxiliary at (0, separation, z).
lindblad::EmitterNetwork build_network(const RunConfig& config);

cycle::ContextOptions context_options(const RunConfig& config);

} // namespace ote::io
