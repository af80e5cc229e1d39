#include "evac/config.hpp"

#include <fstream>

#include "evac/common.hpp"

namespace evac {

namespace {

using nlohmann::json;

double num(const json& v, const std::string& key) {
    require_config(v.is_number(), "config key \"" + key + "\" must be a number");
    return v.get<double>();
}

int integer(const json& v, const std::string& key) {
    require_config(v.is_number_integer(),
                   "config key \"" + key + "\" must be an integer");
    return v.get<int>();
}

std::uint64_t u64(const json& v, const std::string& key) {
    require_config(v.is_number_unsigned() || v.is_number_integer(),
                   "config key \"" + key + "\" must be a non-negative integer");
    require_config(!v.is_number_integer() || v.get<long long>() >= 0,
                   "config key \"" + key + "\" must be a non-negative integer");
    return v.get<std::uint64_t>();
}

bool boolean(const json& v, const std::string& key) {
    require_config(v.is_boolean(),
                   "config key \"" + key + "\" must be a boolean");
    return v.get<bool>();
}

std::string str(const json& v, const std::string& key) {
    require_config(v.is_string(), "config key \"" + key + "\" must be a string");
    return v.get<std::string>();
}

Behavior parse_behavior(const std::string& s) {
    if (s == "exact-model") return Behavior::exact_model;
    if (s == "local-view") return Behavior::local_view;
    throw ConfigError(
        "config key \"behavior\" must be \"exact-model\" or \"local-view\", "
        "got \"" +
        s + "\"");
}

}  // namespace

Mode parse_mode(const std::string& s) {
    if (s == "guided") return Mode::guided;
    if (s == "perfect-velocity") return Mode::perfect_velocity;
    if (s == "no-control") return Mode::no_control;
    throw ConfigError(
        "config key \"mode\" must be \"guided\", \"perfect-velocity\" or "
        "\"no-control\", got \"" +
        s + "\"");
}

std::string mode_name(Mode m) {
    switch (m) {
        case Mode::guided: return "guided";
        case Mode::perfect_velocity: return "perfect-velocity";
        case Mode::no_control: return "no-control";
    }
    return "guided";
}

std::string behavior_name(Behavior b) {
    return b == Behavior::local_view ? "local-view" : "exact-model";
}

ScenarioConfig preset(const std::string& name) {
    if (name == "paper-sec5" || name == "default") return ScenarioConfig{};
    throw ConfigError("unknown preset \"" + name +
                      "\" (available: paper-sec5)");
}

void apply_json(ScenarioConfig& cfg, const nlohmann::json& doc) {
    require_config(doc.is_object(), "config root must be a JSON object");
    for (const auto& [key, v] : doc.items()) {
        if (key == "x_min") cfg.x_min = num(v, key);
        else if (key == "x_max") cfg.x_max = num(v, key);
        else if (key == "y_min") cfg.y_min = num(v, key);
        else if (key == "y_max") cfg.y_max = num(v, key);
        else if (key == "nx") cfg.nx = integer(v, key);
        else if (key == "ny") cfg.ny = integer(v, key);
        else if (key == "n_humans") cfg.n_humans = integer(v, key);
        else if (key == "n_robots") cfg.n_robots = integer(v, key);
        else if (key == "dt") cfg.dt = num(v, key);
        else if (key == "ctrl_every") cfg.ctrl_every = integer(v, key);
        else if (key == "horizon") cfg.horizon = num(v, key);
        else if (key == "seed") cfg.seed = u64(v, key);
        else if (key == "snapshot_every") cfg.snapshot_every = integer(v, key);
        else if (key == "mode") cfg.mode = parse_mode(str(v, key));
        else if (key == "behavior")
            cfg.crowd.behavior = parse_behavior(str(v, key));
        else if (key == "sigma") cfg.crowd.sigma = num(v, key);
        else if (key == "view_range") cfg.crowd.view_range = num(v, key);
        else if (key == "random_speed") cfg.crowd.random_speed = num(v, key);
        else if (key == "w_amplitude") cfg.crowd.w.amplitude = num(v, key);
        else if (key == "w_range_sq") cfg.crowd.w.range_sq = num(v, key);
        else if (key == "w_cutoff") cfg.crowd.w.cutoff = num(v, key);
        else if (key == "avoid_enabled") cfg.avoid.enabled = boolean(v, key);
        else if (key == "avoid_radius") cfg.avoid.radius = num(v, key);
        else if (key == "avoid_v_max") cfg.avoid.v_max = num(v, key);
        else if (key == "kernel_c") cfg.kernel.c = num(v, key);
        else if (key == "kernel_eta") cfg.kernel.eta = num(v, key);
        else if (key == "kde_h") cfg.kde.h = num(v, key);
        else if (key == "kde_renormalize")
            cfg.kde.renormalize = boolean(v, key);
        else if (key == "alpha") cfg.gains.alpha.value = num(v, key);
        else if (key == "alpha_density_scaled")
            cfg.gains.alpha.density_scaled = boolean(v, key);
        else if (key == "k_u") cfg.gains.k_u = num(v, key);
        else if (key == "k_w") cfg.gains.k_w = num(v, key);
        else if (key == "eps_rho") cfg.gains.eps_rho = num(v, key);
        else if (key == "eps_int") cfg.gains.eps_int = num(v, key);
        else if (key == "u_max") cfg.gains.u_max = num(v, key);
        else if (key == "w_max") cfg.gains.w_max = num(v, key);
        else if (key == "target_x") cfg.target_x = num(v, key);
        else if (key == "target_y") cfg.target_y = num(v, key);
        else if (key == "target_spread") cfg.target_spread = num(v, key);
        else
            throw ConfigError("unknown config key \"" + key + "\"");
    }
}

ScenarioConfig load_config(const std::string& path,
                           const ScenarioConfig& base) {
    std::ifstream in(path);
    require_config(in.good(), "cannot open config file: " + path);
    json doc = json::parse(in, nullptr, false);
    require_config(!doc.is_discarded(), "config file is not valid JSON: " + path);
    ScenarioConfig cfg = base;
    apply_json(cfg, doc);
    return cfg;
}

void validate(const ScenarioConfig& cfg) {
    require_config(cfg.x_max > cfg.x_min, "\"x_max\" must exceed \"x_min\"");
    require_config(cfg.y_max > cfg.y_min, "\"y_max\" must exceed \"y_min\"");
    require_config(cfg.nx >= 3, "\"nx\" must be >= 3");
    require_config(cfg.ny >= 3, "\"ny\" must be >= 3");
    require_config(cfg.n_humans >= 1, "\"n_humans\" must be >= 1");
    require_config(cfg.n_robots >= 0, "\"n_robots\" must be >= 0");
    require_config(cfg.mode != Mode::guided || cfg.n_robots >= 1,
                   "\"n_robots\" must be >= 1 in guided mode");
    require_config(cfg.dt > 0.0, "\"dt\" must be positive");
    require_config(cfg.ctrl_every >= 1, "\"ctrl_every\" must be >= 1");
    require_config(cfg.horizon > 0.0, "\"horizon\" must be positive");
    require_config(cfg.snapshot_every >= 0, "\"snapshot_every\" must be >= 0");
    require_config(cfg.crowd.sigma >= 0.0, "\"sigma\" must be >= 0");
    require_config(cfg.crowd.view_range > 0.0,
                   "\"view_range\" must be positive");
    require_config(cfg.crowd.random_speed >= 0.0,
                   "\"random_speed\" must be >= 0");
    require_config(cfg.crowd.w.range_sq > 0.0,
                   "\"w_range_sq\" must be positive");
    require_config(cfg.crowd.w.cutoff >= 0.0, "\"w_cutoff\" must be >= 0");
    require_config(cfg.avoid.radius > 0.0, "\"avoid_radius\" must be positive");
    require_config(cfg.avoid.v_max >= 0.0, "\"avoid_v_max\" must be >= 0");
    require_config(cfg.kernel.c > 0.0, "\"kernel_c\" must be positive");
    require_config(cfg.kernel.eta > 0.0, "\"kernel_eta\" must be positive");
    require_config(cfg.kde.h > 0.0, "\"kde_h\" must be positive");
    require_config(cfg.gains.alpha.value > 0.0, "\"alpha\" must be positive");
    require_config(cfg.gains.k_u > 0.0, "\"k_u\" must be positive");
    require_config(cfg.gains.k_w > 0.0, "\"k_w\" must be positive");
    require_config(cfg.gains.eps_rho > 0.0, "\"eps_rho\" must be positive");
    require_config(cfg.gains.eps_int >= 0.0, "\"eps_int\" must be >= 0");
    require_config(cfg.gains.u_max > 0.0, "\"u_max\" must be positive");
    require_config(cfg.gains.w_max > 0.0, "\"w_max\" must be positive");
    require_config(cfg.target_spread > 0.0,
                   "\"target_spread\" must be positive");
    require_config(cfg.target_x >= cfg.x_min && cfg.target_x <= cfg.x_max &&
                       cfg.target_y >= cfg.y_min && cfg.target_y <= cfg.y_max,
                   "\"target_x\"/\"target_y\" must lie inside the domain");
}

nlohmann::json to_json(const ScenarioConfig& cfg) {
    return nlohmann::json{
        {"x_min", cfg.x_min},
        {"x_max", cfg.x_max},
        {"y_min", cfg.y_min},
        {"y_max", cfg.y_max},
        {"nx", cfg.nx},
        {"ny", cfg.ny},
        {"n_humans", cfg.n_humans},
        {"n_robots", cfg.n_robots},
        {"dt", cfg.dt},
        {"ctrl_every", cfg.ctrl_every},
        {"horizon", cfg.horizon},
        {"seed", cfg.seed},
        {"snapshot_every", cfg.snapshot_every},
        {"mode", mode_name(cfg.mode)},
        {"behavior", behavior_name(cfg.crowd.behavior)},
        {"sigma", cfg.crowd.sigma},
        {"view_range", cfg.crowd.view_range},
        {"random_speed", cfg.crowd.random_speed},
        {"w_amplitude", cfg.crowd.w.amplitude},
        {"w_range_sq", cfg.crowd.w.range_sq},
        {"w_cutoff", cfg.crowd.w.cutoff},
        {"avoid_enabled", cfg.avoid.enabled},
        {"avoid_radius", cfg.avoid.radius},
        {"avoid_v_max", cfg.avoid.v_max},
        {"kernel_c", cfg.kernel.c},
        {"kernel_eta", cfg.kernel.eta},
        {"kde_h", cfg.kde.h},
        {"kde_renormalize", cfg.kde.renormalize},
        {"alpha", cfg.gains.alpha.value},
        {"alpha_density_scaled", cfg.gains.alpha.density_scaled},
        {"k_u", cfg.gains.k_u},
        {"k_w", cfg.gains.k_w},
        {"eps_rho", cfg.gains.eps_rho},
        {"eps_int", cfg.gains.eps_int},
        {"u_max", cfg.gains.u_max},
        {"w_max", cfg.gains.w_max},
        {"target_x", cfg.target_x},
        {"target_y", cfg.target_y},
        {"target_spread", cfg.target_spread},
    };
}

Grid config_grid(const ScenarioConfig& cfg) {
    return make_grid(cfg.x_min, cfg.x_max, cfg.y_min, cfg.y_max, cfg.nx,
                     cfg.ny);
}

}  // namespace evac
