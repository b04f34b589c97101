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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "ote/cycle/sweep.hpp"
#include "ote/errors.hpp"
#include "ote/io/config.hpp"
#include "ote/io/units.hpp"

#ifndef OTE_PRESET_DIR
#define OTE_PRESET_DIR "presets"
#endif

namespace ote::io {

namespace {

int line_of(const YAML::Node& n) { return n.Mark().line + 1; }

[[noreturn]] void fail(const std::string& key, const YAML::Node& n, const std::string& what) {
    std::ostringstream msg;
    msg << "config key '" << key << "'";
    if (n.IsDefined() && n.Mark().line >= 0) msg << " (line " << line_of(n) << ")";
    msg << ": " << what;
    throw ConfigError(msg.str());
}

void check_keys(const YAML::Node& node, const std::string& block, const std::set<std::string>& allowed) {
    if (!node.IsMap()) fail(block, node, "expected a mapping");
    for (const auto& kv : node) {
        const auto key = kv.first.as<std::string>();
        if (!allowed.count(key)) {
            std::string list;
            for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
            fail(block.empty() ? key : block + "." + key, kv.first, "unknown key (allowed: " + list + ")");
        }
    }
}

double quantity(const YAML::Node& n, const std::string& key, Dimension d) {
    if (!n.IsScalar()) fail(key, n, "expected a scalar quantity");
    try {
        return parse_quantity(n.Scalar(), d);
    } catch (const ConfigError& e) {
        fail(key, n, e.what());
    }
}

int integer(const YAML::Node& n, const std::string& key) {
    if (!n.IsScalar()) fail(key, n, "expected an integer");
    try {
        return n.as<int>();
    } catch (const YAML::Exception&) {
        fail(key, n, "expected an integer, got '" + n.Scalar() + "'");
    }
}

bool boolean(const YAML::Node& n, const std::string& key) {
    try {
        return n.as<bool>();
    } catch (const YAML::Exception&) {
        fail(key, n, "expected true or false");
    }
}

std::string text(const YAML::Node& n, const std::string& key) {
    if (!n.IsScalar()) fail(key, n, "expected a string");
    return n.Scalar();
}

std::vector<double> quantity_list(const YAML::Node& n, const std::string& key, Dimension d) {
    std::vector<double> out;
    for (std::size_t i = 0; i < n.size(); ++i) out.push_back(quantity(n[i], key + "[" + std::to_string(i) + "]", d));
    return out;
}

em::PermittivityModel material_from_map(const YAML::Node& n, const std::string& key, double& resonance) {
    check_keys(n, key, {"model", "eps_inf", "omega_L", "omega_T", "gamma", "resonance", "omega", "real", "imag"});
    if (!n["model"]) fail(key + ".model", n, "missing (vacuum, drude_lorentz or tabulated)");
    const std::string model = text(n["model"], key + ".model");
    if (n["resonance"]) resonance = quantity(n["resonance"], key + ".resonance", Dimension::angular_frequency);
    if (model == "vacuum") return em::Vacuum{};
    if (model == "drude_lorentz") {
        em::DrudeLorentz dl;
        for (const char* k : {"eps_inf", "omega_L", "omega_T", "gamma"})
            if (!n[k]) fail(key + "." + k, n, "missing for a drude_lorentz material");
        dl.eps_inf = quantity(n["eps_inf"], key + ".eps_inf", Dimension::dimensionless);
        dl.omega_L = quantity(n["omega_L"], key + ".omega_L", Dimension::angular_frequency);
        dl.omega_T = quantity(n["omega_T"], key + ".omega_T", Dimension::angular_frequency);
        dl.gamma = quantity(n["gamma"], key + ".gamma", Dimension::angular_frequency);
        if (!n["resonance"]) resonance = dl.omega_T;
        return dl;
    }
    if (model == "tabulated") {
        for (const char* k : {"omega", "real", "imag"})
            if (!n[k] || !n[k].IsSequence()) fail(key + "." + k, n, "list required for a tabulated material");
        em::Tabulated t;
        t.omega = quantity_list(n["omega"], key + ".omega", Dimension::angular_frequency);
        const auto re = quantity_list(n["real"], key + ".real", Dimension::dimensionless);
        const auto im = quantity_list(n["imag"], key + ".imag", Dimension::dimensionless);
        if (re.size() != t.omega.size() || im.size() != t.omega.size())
            fail(key, n, "omega, real and imag must have equal lengths");
        for (std::size_t i = 0; i < re.size(); ++i) t.values.emplace_back(re[i], im[i]);
        return t;
    }
    fail(key + ".model", n["model"], "unknown material model '" + model + "'");
}

em::PermittivityModel load_material_preset(const std::string& name, const std::string& dir, double& resonance) {
    const auto path = std::filesystem::path(dir) / "materials.yaml";
    YAML::Node root;
    try {
        root = YAML::LoadFile(path.string());
    } catch (const YAML::BadFile&) {
        throw ConfigError("material preset '" + name + "': cannot open " + path.string());
    }
    if (!root[name]) throw ConfigError("unknown material preset '" + name + "' (not in " + path.string() + ")");
    return material_from_map(root[name], "materials." + name, resonance);
}

void parse_environment(const YAML::Node& n, RunConfig& c, const std::string& preset_dir) {
    check_keys(n, "environment",
               {"material", "thickness", "slab_temperature", "blackbody_temperature", "quadrature"});
    auto& env = c.environment;
    if (n["material"]) {
        const auto& m = n["material"];
        if (m.IsScalar()) {
            c.material_name = m.Scalar();
            if (c.material_name == "vacuum") {
                env.material = em::Vacuum{};
            } else {
                try {
                    env.material = load_material_preset(c.material_name, preset_dir, c.material_resonance);
                } catch (const ConfigError& e) {
                    fail("environment.material", m, e.what());
                }
            }
        } else {
            c.material_name = "custom";
            env.material = material_from_map(m, "environment.material", c.material_resonance);
        }
    }
    if (n["thickness"]) env.slab.thickness = quantity(n["thickness"], "environment.thickness", Dimension::length);
    if (n["slab_temperature"])
        env.slab.temperature = quantity(n["slab_temperature"], "environment.slab_temperature", Dimension::temperature);
    if (n["blackbody_temperature"])
        env.blackbody_temperature =
            quantity(n["blackbody_temperature"], "environment.blackbody_temperature", Dimension::temperature);
    if (const auto& q = n["quadrature"]) {
        check_keys(q, "environment.quadrature",
                   {"rel_tol", "max_subdivisions", "cutoff_multiplier", "decay_efolds", "angular"});
        auto& qc = env.quadrature;
        if (q["rel_tol"]) qc.rel_tol = quantity(q["rel_tol"], "environment.quadrature.rel_tol", Dimension::dimensionless);
        if (q["max_subdivisions"]) qc.max_subdivisions = integer(q["max_subdivisions"], "environment.quadrature.max_subdivisions");
        if (q["cutoff_multiplier"])
            qc.cutoff_multiplier =
                quantity(q["cutoff_multiplier"], "environment.quadrature.cutoff_multiplier", Dimension::dimensionless);
        if (q["decay_efolds"])
            qc.decay_efolds = quantity(q["decay_efolds"], "environment.quadrature.decay_efolds", Dimension::dimensionless);
        if (q["angular"]) {
            const auto a = text(q["angular"], "environment.quadrature.angular");
            if (a == "quadrature") qc.angular = em::AngularMode::quadrature;
            else if (a == "bessel") qc.angular = em::AngularMode::bessel;
            else fail("environment.quadrature.angular", q["angular"], "expected quadrature or bessel");
        }
    }
    try {
        em::validate(env);
    } catch (const ConfigError& e) {
        fail("environment", n, e.what());
    }
}

void parse_emitters(const YAML::Node& n, RunConfig& c) {
    check_keys(n, "emitters",
               {"omega_a", "omega_a_ratio", "omega_s", "z", "separation", "dipole", "orientation", "dipoles",
                "auxiliary", "lambda"});
    auto& e = c.emitters;
    if (n["omega_a"]) e.omega_a = quantity(n["omega_a"], "emitters.omega_a", Dimension::angular_frequency);
    if (n["omega_a_ratio"]) e.omega_a_ratio = quantity(n["omega_a_ratio"], "emitters.omega_a_ratio", Dimension::dimensionless);
    if (n["omega_s"]) e.omega_s = quantity(n["omega_s"], "emitters.omega_s", Dimension::angular_frequency);
    if (n["z"]) e.z = quantity(n["z"], "emitters.z", Dimension::length);
    if (n["separation"]) e.separation = quantity(n["separation"], "emitters.separation", Dimension::length);
    if (n["dipole"]) e.dipole = quantity(n["dipole"], "emitters.dipole", Dimension::dipole_moment);
    if (const auto& o = n["orientation"]) {
        if (!o.IsSequence() || o.size() != 3) fail("emitters.orientation", o, "expected a list of three numbers");
        const auto v = quantity_list(o, "emitters.orientation", Dimension::dimensionless);
        e.orientation = Eigen::Vector3d(v[0], v[1], v[2]);
        if (!(e.orientation.norm() > 0.0)) fail("emitters.orientation", o, "orientation must be non-zero");
        e.orientation.normalize();
    }
    if (const auto& d = n["dipoles"]) {
        check_keys(d, "emitters.dipoles", {"working_fluid", "aux_high", "aux_resonant", "aux_low"});
        auto get = [&](const char* k, std::optional<double>& out) {
            if (d[k]) out = quantity(d[k], std::string("emitters.dipoles.") + k, Dimension::dipole_moment);
        };
        get("working_fluid", e.dipole_working_fluid);
        get("aux_high", e.dipole_high);
        get("aux_resonant", e.dipole_resonant);
        get("aux_low", e.dipole_low);
    }
    if (n["auxiliary"]) e.auxiliary = boolean(n["auxiliary"], "emitters.auxiliary");
    if (n["lambda"]) e.lambda = quantity(n["lambda"], "emitters.lambda", Dimension::angular_frequency);

    if (!(e.z > 0.0)) fail("emitters.z", n["z"], "emitters must sit above the slab (z > 0)");
    if (!(e.separation >= 0.0)) fail("emitters.separation", n["separation"], "separation must be >= 0");
    if (!(e.dipole >= 0.0)) fail("emitters.dipole", n["dipole"], "dipole magnitude must be >= 0");
    if (!e.omega_a && !(e.omega_a_ratio > 0.0 && e.omega_a_ratio < 1.0))
        fail("emitters.omega_a_ratio", n["omega_a_ratio"], "ratio must lie in (0, 1)");
}

void parse_cycle(const YAML::Node& n, RunConfig& c) {
    check_keys(n, "cycle", {"mode", "k", "k_grid", "alpha", "alpha_grid", "sweep", "tol", "rate_points", "omega_min_ratio"});
    auto& cc = c.cycle;
    if (n["mode"]) {
        const auto m = text(n["mode"], "cycle.mode");
        if (m == "standard") cc.mode = cycle::CycleMode::standard;
        else if (m == "ote_ideal") cc.mode = cycle::CycleMode::ote_ideal;
        else if (m == "ote_finite") cc.mode = cycle::CycleMode::ote_finite;
        else fail("cycle.mode", n["mode"], "expected standard, ote_ideal or ote_finite");
    }
    if (n["k"]) cc.k = quantity(n["k"], "cycle.k", Dimension::dimensionless);
    if (const auto& g = n["k_grid"]) {
        if (g.IsSequence()) {
            cc.k_grid = quantity_list(g, "cycle.k_grid", Dimension::dimensionless);
        } else {
            check_keys(g, "cycle.k_grid", {"points", "from", "to"});
            const int pts = g["points"] ? integer(g["points"], "cycle.k_grid.points") : 200;
            if (pts < 1) fail("cycle.k_grid.points", g["points"], "need at least one point");
            if (g["from"] || g["to"]) {
                const double lo = g["from"] ? quantity(g["from"], "cycle.k_grid.from", Dimension::dimensionless) : 1.0 / pts;
                const double hi = g["to"] ? quantity(g["to"], "cycle.k_grid.to", Dimension::dimensionless) : 1.0;
                for (int i = 0; i < pts; ++i) cc.k_grid.push_back(pts == 1 ? lo : lo + (hi - lo) * i / (pts - 1));
            } else {
                cc.k_grid = cycle::uniform_k_grid(pts);
            }
        }
        for (double k : cc.k_grid)
            if (!(k >= 0.0 && k <= 1.0)) fail("cycle.k_grid", g, "k values must lie in [0, 1]");
    }
    if (n["alpha"]) cc.alpha = quantity(n["alpha"], "cycle.alpha", Dimension::rate);
    if (const auto& g = n["alpha_grid"]) {
        if (g.IsSequence()) {
            cc.alpha_grid = quantity_list(g, "cycle.alpha_grid", Dimension::rate);
        } else {
            check_keys(g, "cycle.alpha_grid", {"from", "to", "points"});
            for (const char* k : {"from", "to", "points"})
                if (!g[k]) fail(std::string("cycle.alpha_grid.") + k, g, "missing");
            try {
                cc.alpha_grid = cycle::geometric_grid(quantity(g["from"], "cycle.alpha_grid.from", Dimension::rate),
                                                      quantity(g["to"], "cycle.alpha_grid.to", Dimension::rate),
                                                      integer(g["points"], "cycle.alpha_grid.points"));
            } catch (const ConfigError& e) {
                fail("cycle.alpha_grid", g, e.what());
            }
        }
        for (double a : cc.alpha_grid)
            if (!(a > 0.0)) fail("cycle.alpha_grid", g, "alpha values must be > 0");
    }
    if (n["sweep"]) {
        const auto s = text(n["sweep"], "cycle.sweep");
        if (s == "k") cc.sweep = SweepOver::k;
        else if (s == "alpha") cc.sweep = SweepOver::alpha;
        else fail("cycle.sweep", n["sweep"], "expected k or alpha");
    }
    if (n["tol"]) cc.tol = quantity(n["tol"], "cycle.tol", Dimension::dimensionless);
    if (n["rate_points"]) cc.rate_points = integer(n["rate_points"], "cycle.rate_points");
    if (n["omega_min_ratio"])
        cc.omega_min_ratio = quantity(n["omega_min_ratio"], "cycle.omega_min_ratio", Dimension::dimensionless);

    if (!(cc.k >= 0.0 && cc.k <= 1.0)) fail("cycle.k", n["k"], "k = omega_b/omega_a must lie in [0, 1]");
    if (!(cc.alpha > 0.0)) fail("cycle.alpha", n["alpha"], "alpha must be > 0 (inf for ideal strokes)");
    if (!(cc.tol > 0.0 && cc.tol < 1.0)) fail("cycle.tol", n["tol"], "tolerance must lie in (0, 1)");
    if (cc.rate_points < 2) fail("cycle.rate_points", n["rate_points"], "need at least two points");
    if (!(cc.omega_min_ratio > 0.0 && cc.omega_min_ratio < 1.0))
        fail("cycle.omega_min_ratio", n["omega_min_ratio"], "ratio must lie in (0, 1)");
}

void parse_rates(const YAML::Node& n, RunConfig& c) {
    check_keys(n, "rates", {"from_ratio", "to_ratio", "points", "spacing"});
    auto& r = c.rates;
    if (n["from_ratio"]) r.from_ratio = quantity(n["from_ratio"], "rates.from_ratio", Dimension::dimensionless);
    if (n["to_ratio"]) r.to_ratio = quantity(n["to_ratio"], "rates.to_ratio", Dimension::dimensionless);
    if (n["points"]) r.points = integer(n["points"], "rates.points");
    if (n["spacing"]) {
        const auto s = text(n["spacing"], "rates.spacing");
        if (s == "log") r.logarithmic = true;
        else if (s == "linear") r.logarithmic = false;
        else fail("rates.spacing", n["spacing"], "expected log or linear");
    }
    if (!(r.from_ratio > 0.0) || !(r.to_ratio >= r.from_ratio))
        fail("rates", n, "need 0 < from_ratio <= to_ratio");
    if (r.points < 1) fail("rates.points", n["points"], "need at least one point");
}

void parse_output(const YAML::Node& n, RunConfig& c) {
    check_keys(n, "output", {"path", "format", "precision", "metadata"});
    auto& o = c.output;
    if (n["path"]) o.path = text(n["path"], "output.path");
    if (n["format"]) {
        const auto f = text(n["format"], "output.format");
        if (f == "csv") o.format = Format::csv;
        else if (f == "json") o.format = Format::json;
        else fail("output.format", n["format"], "expected csv or json");
    }
    if (n["precision"]) o.precision = integer(n["precision"], "output.precision");
    if (n["metadata"]) o.metadata = boolean(n["metadata"], "output.metadata");
    if (o.precision < 1 || o.precision > 17) fail("output.precision", n["precision"], "precision must lie in [1, 17]");
}

void emit_optional(YAML::Emitter& out, const std::optional<double>& v) {
    if (v)
        out << *v;
    else
        out << YAML::Null;
}

} // namespace

double RunConfig::omega_s() const {
    if (emitters.omega_s) return *emitters.omega_s;
    if (material_resonance > 0.0) return material_resonance;
    throw ConfigError("emitters.omega_s is required when the material has no resonance");
}

double RunConfig::omega_a() const { return emitters.omega_a ? *emitters.omega_a : emitters.omega_a_ratio * omega_s(); }

std::vector<double> RunConfig::k_grid() const { return cycle.k_grid.empty() ? cycle::uniform_k_grid(200) : cycle.k_grid; }

std::string default_preset_dir() {
    if (const char* env = std::getenv("OTE_OTTO_PRESETS"); env && *env) return env;
    return OTE_PRESET_DIR;
}

RunConfig parse_config(std::string_view text_in, const ParseOptions& options) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text_in));
    } catch (const YAML::ParserException& e) {
        std::ostringstream msg;
        msg << "config is not valid YAML (line " << e.mark.line + 1 << "): " << e.msg;
        throw ConfigError(msg.str());
    }
    RunConfig c;
    c.material_name = "SiC";
    const std::string dir = options.preset_dir.empty() ? default_preset_dir() : options.preset_dir;
    if (root.IsNull()) root = YAML::Node(YAML::NodeType::Map);
    check_keys(root, "", {"environment", "emitters", "cycle", "rates", "output"});

    // defaults: the SiC preset
    YAML::Node env = root["environment"] ? root["environment"] : YAML::Node(YAML::NodeType::Map);
    if (!env.IsMap()) fail("environment", env, "expected a mapping");
    if (!env["material"]) {
        try {
            c.environment.material = load_material_preset("SiC", dir, c.material_resonance);
        } catch (const ConfigError& e) {
            fail("environment.material", env, std::string("default material unavailable: ") + e.what());
        }
    }
    parse_environment(env, c, dir);
    if (root["emitters"]) parse_emitters(root["emitters"], c);
    if (root["cycle"]) parse_cycle(root["cycle"], c);
    if (root["rates"]) parse_rates(root["rates"], c);
    if (root["output"]) parse_output(root["output"], c);

    // consistency of the emitter frequencies
    const double ws = c.omega_s();
    const double wa = c.omega_a();
    if (!(wa > 0.0)) throw ConfigError("config key 'emitters.omega_a': must be > 0");
    if (c.emitters.auxiliary && !(ws > wa))
        throw ConfigError("config key 'emitters.omega_s': auxiliary |0>-|2> frequency must exceed omega_a");
    return c;
}

RunConfig load_config(const std::string& path, const ParseOptions& options) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_config(ss.str(), options);
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

std::string canonical_dump(const RunConfig& c) {
    YAML::Emitter out;
    out.SetDoublePrecision(17);
    out << YAML::Flow << YAML::BeginMap;
    const auto& env = c.environment;
    out << YAML::Key << "environment" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "material" << YAML::Value << c.material_name;
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, em::Vacuum>) {
                out << YAML::Key << "model" << YAML::Value << "vacuum";
            } else if constexpr (std::is_same_v<T, em::DrudeLorentz>) {
                out << YAML::Key << "model" << YAML::Value << "drude_lorentz";
                out << YAML::Key << "eps_inf" << YAML::Value << m.eps_inf;
                out << YAML::Key << "omega_L" << YAML::Value << m.omega_L;
                out << YAML::Key << "omega_T" << YAML::Value << m.omega_T;
                out << YAML::Key << "gamma" << YAML::Value << m.gamma;
            } else {
                out << YAML::Key << "model" << YAML::Value << "tabulated";
                out << YAML::Key << "samples" << YAML::Value << m.omega.size();
            }
        },
        env.material);
    out << YAML::Key << "resonance" << YAML::Value << c.material_resonance;
    out << YAML::Key << "thickness" << YAML::Value << env.slab.thickness;
    out << YAML::Key << "slab_temperature" << YAML::Value << env.slab.temperature;
    out << YAML::Key << "blackbody_temperature" << YAML::Value << env.blackbody_temperature;
    out << YAML::Key << "quadrature" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "rel_tol" << YAML::Value << env.quadrature.rel_tol;
    out << YAML::Key << "max_subdivisions" << YAML::Value << env.quadrature.max_subdivisions;
    out << YAML::Key << "cutoff_multiplier" << YAML::Value << env.quadrature.cutoff_multiplier;
    out << YAML::Key << "decay_efolds" << YAML::Value << env.quadrature.decay_efolds;
    out << YAML::Key << "angular" << YAML::Value
        << (env.quadrature.angular == em::AngularMode::bessel ? "bessel" : "quadrature");
    out << YAML::EndMap << YAML::EndMap;

    const auto& e = c.emitters;
    out << YAML::Key << "emitters" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "omega_a" << YAML::Value << c.omega_a();
    out << YAML::Key << "omega_s" << YAML::Value << c.omega_s();
    out << YAML::Key << "z" << YAML::Value << e.z;
    out << YAML::Key << "separation" << YAML::Value << e.separation;
    out << YAML::Key << "dipole" << YAML::Value << e.dipole;
    out << YAML::Key << "orientation" << YAML::Value << YAML::BeginSeq << e.orientation.x() << e.orientation.y()
        << e.orientation.z() << YAML::EndSeq;
    out << YAML::Key << "dipoles" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "working_fluid" << YAML::Value;
    emit_optional(out, e.dipole_working_fluid);
    out << YAML::Key << "aux_high" << YAML::Value;
    emit_optional(out, e.dipole_high);
    out << YAML::Key << "aux_resonant" << YAML::Value;
    emit_optional(out, e.dipole_resonant);
    out << YAML::Key << "aux_low" << YAML::Value;
    emit_optional(out, e.dipole_low);
    out << YAML::EndMap;
    out << YAML::Key << "auxiliary" << YAML::Value << e.auxiliary;
    out << YAML::Key << "lambda" << YAML::Value;
    emit_optional(out, e.lambda);
    out << YAML::EndMap;

    const auto& cc = c.cycle;
    out << YAML::Key << "cycle" << YAML::Value << YAML::BeginMap;
    const char* mode = cc.mode == cycle::CycleMode::standard ? "standard"
                       : cc.mode == cycle::CycleMode::ote_ideal ? "ote_ideal"
                                                                : "ote_finite";
    out << YAML::Key << "mode" << YAML::Value << mode;
    out << YAML::Key << "k" << YAML::Value << cc.k;
    out << YAML::Key << "k_grid" << YAML::Value << YAML::BeginSeq;
    for (double k : c.k_grid()) out << k;
    out << YAML::EndSeq;
    out << YAML::Key << "alpha" << YAML::Value << cc.alpha;
    out << YAML::Key << "alpha_grid" << YAML::Value << YAML::BeginSeq;
    for (double a : cc.alpha_grid) out << a;
    out << YAML::EndSeq;
    out << YAML::Key << "sweep" << YAML::Value << (cc.sweep == SweepOver::k ? "k" : "alpha");
    out << YAML::Key << "tol" << YAML::Value << cc.tol;
    out << YAML::Key << "rate_points" << YAML::Value << cc.rate_points;
    out << YAML::Key << "omega_min_ratio" << YAML::Value << cc.omega_min_ratio;
    out << YAML::EndMap;

    out << YAML::Key << "rates" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "from_ratio" << YAML::Value << c.rates.from_ratio;
    out << YAML::Key << "to_ratio" << YAML::Value << c.rates.to_ratio;
    out << YAML::Key << "points" << YAML::Value << c.rates.points;
    out << YAML::Key << "spacing" << YAML::Value << (c.rates.logarithmic ? "log" : "linear");
    out << YAML::EndMap;

    out << YAML::Key << "output" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "format" << YAML::Value << (c.output.format == Format::csv ? "csv" : "json");
    out << YAML::Key << "precision" << YAML::Value << c.output.precision;
    out << YAML::EndMap;
    out << YAML::EndMap;
    return out.c_str();
}

std::string config_digest(const RunConfig& c) {
    const std::string s = canonical_dump(c);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

lindblad::EmitterNetwork build_network(const RunConfig& c) {
    const auto& e = c.emitters;
    const Eigen::Vector3d u = e.orientation;
    lindblad::EmitterNetwork net;
    net.working_fluid.omega = c.omega_a();
    net.working_fluid.dipole = e.dipole_working_fluid.value_or(e.dipole) * u;
    net.working_fluid.position = {0.0, 0.0, e.z};
    if (e.auxiliary) {
        lindblad::ThreeLevelEmitter m;
        m.omega_high = c.omega_s();
        m.omega_resonant = c.omega_a();
        m.dipole_high = e.dipole_high.value_or(e.dipole) * u;
        m.dipole_resonant = e.dipole_resonant.value_or(e.dipole) * u;
        m.dipole_low = e.dipole_low.value_or(e.dipole) * u;
        m.position = {0.0, e.separation, e.z};
        net.auxiliary = m;
    }
    return net;
}

cycle::ContextOptions context_options(const RunConfig& c) {
    cycle::ContextOptions o;
    o.model.lambda_override = c.emitters.lambda;
    o.rate_points = c.cycle.rate_points;
    o.omega_min_ratio = c.cycle.omega_min_ratio;
    o.build_rate_table = c.cycle.mode == cycle::CycleMode::ote_finite;
    return o;
}

} // namespace ote::io
