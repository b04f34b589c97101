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

// ote-otto - command-line front end

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <yaml-cpp/exceptions.h>

#include "ote/errors.hpp"
#include "ote/io/commands.hpp"

namespace {

int exit_code(ote::ErrorKind k) { return static_cast<int>(k); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Otto cycles in an out-of-equilibrium electromagnetic field", "ote-otto"};
    app.set_version_flag("--version", OTE_VERSION);
    std::string command, target, config_path, out_path, format;
    int threads = 0;
    app.add_option("command", command, "rates | steady | cycle | sweep | reproduce")->required();
    app.add_option("target", target, "reproduce target: fig5 | fig6 | fig7 | sec4");
    app.add_option("--config,-c", config_path, "YAML run configuration");
    app.add_option("--out,-o", out_path, "output file (default: stdout, or output.path of the config)");
    app.add_option("--format,-f", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    auto* threads_opt = app.add_option("--threads,-j", threads, "worker threads for sweeps")->check(CLI::PositiveNumber);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_code(ote::ErrorKind::config);
    }

    try {
        const auto cmd = ote::io::parse_command(command);
        if (cmd != ote::io::Command::reproduce && !target.empty())
            throw ote::ConfigError("unexpected argument '" + target + "' for command " + command);
        if (cmd == ote::io::Command::reproduce && target.empty())
            throw ote::ConfigError("reproduce needs a target (fig5, fig6, fig7 or sec4)");
        if (cmd != ote::io::Command::reproduce && config_path.empty())
            throw ote::ConfigError("command " + command + " needs --config <path>");

        const std::string path = !config_path.empty() ? config_path : ote::io::preset_path(target);
        const auto config = ote::io::load_config(path);

        ote::io::RunOptions options;
        if (threads_opt->count() > 0) {
            options.threads = threads;
        } else if (const char* env = std::getenv("OTE_OTTO_THREADS"); env && *env) {
            try {
                options.threads = std::stoi(env);
            } catch (const std::exception&) {
                throw ote::ConfigError(std::string("OTE_OTTO_THREADS is not an integer: '") + env + "'");
            }
            if (options.threads < 1) throw ote::ConfigError("OTE_OTTO_THREADS must be >= 1");
        }

        const auto table = cmd == ote::io::Command::reproduce ? ote::io::reproduce(target, config, options)
                                                              : ote::io::run(cmd, config, options);
        auto fmt = config.output.format;
        if (!format.empty()) fmt = format == "json" ? ote::io::Format::json : ote::io::Format::csv;
        const std::string dest = !out_path.empty() ? out_path : config.output.path;
        ote::io::write_results(table, fmt, dest, config.output.precision, config.output.metadata);
        return 0;
    } catch (const ote::Error& e) {
        std::cerr << "ote-otto: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const YAML::Exception& e) {
        std::cerr << "ote-otto: configuration: " << e.what() << '\n';
        return exit_code(ote::ErrorKind::config);
    } catch (const std::exception& e) {
        std::cerr << "ote-otto: numerical failure: " << e.what() << '\n';
        return exit_code(ote::ErrorKind::numerical);
    }
}
