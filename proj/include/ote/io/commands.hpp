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

// commands.hpp - the CLI commands as library calls returning result tables

#pragma once

#include <string>

#include "ote/io/config.hpp"
#include "ote/io/results.hpp"

namespace ote::io {

enum class Command { rates, steady, cycle, sweep, reproduce };

Command parse_command(const std::string& name);
std::string to_string(Command c);

struct RunOptions {
    int threads = 1;
};

/// rates | steady | cycle | sweep. Numerical failures of the whole command propagate; sweep
/// points that fail are flagged in the `failed` column and described in the metadata.
ResultTable run(Command command, const RunConfig& config, const RunOptions& options = {});

/// fig5 | fig6 | fig7 | sec4 on the given configuration (normally the shipped preset).
ResultTable reproduce(const std::string& target, const RunConfig& config, const RunOptions& options = {});

/// Path of the shipped preset for a reproduce target.
std::string preset_path(const std::string& target, const std::string& preset_dir = {});

} // namespace ote::io
