#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "evac/control.hpp"
#include "evac/crowd.hpp"
#include "evac/density.hpp"
#include "evac/grid.hpp"
#include "evac/guidance.hpp"

namespace evac {

enum class Mode { guided, perfect_velocity, no_control };

std::string mode_name(Mode m);
std::string behavior_name(Behavior b);

// Full run parameterization. Defaults reproduce the reference scenario:
// 150x150 m domain on a 30x30 grid, 200 humans, 16 robots, dt=0.01,
// 100 s horizon, narrow Gaussian target in the upper-right corner.
struct ScenarioConfig {
    double x_min = 0.0, x_max = 150.0;
    double y_min = 0.0, y_max = 150.0;
    int nx = 30, ny = 30;
    int n_humans = 200;
    int n_robots = 16;
    double dt = 0.01;
    int ctrl_every = 1;
    double horizon = 100.0;
    std::uint64_t seed = 1;
    int snapshot_every = 0;  // 0: pick so a run yields ~10 snapshots
    Mode mode = Mode::guided;
    CrowdParams crowd;
    AvoidancePolicy avoid;
    GuidanceKernel kernel;
    ControlGains gains;
    KdeConfig kde;
    double target_x = 135.0, target_y = 135.0;
    double target_spread = 7.5;
};

/// Named defaults; "paper-sec5" is the reference scenario above.
/// Unknown names throw ConfigError.
ScenarioConfig preset(const std::string& name);

/// Applies a flat JSON object onto `cfg`. Unknown keys and wrong value
/// types throw ConfigError naming the key.
void apply_json(ScenarioConfig& cfg, const nlohmann::json& doc);

/// Reads a JSON file and applies it onto `base`.
ScenarioConfig load_config(const std::string& path,
                           const ScenarioConfig& base);

/// Range checks; throws ConfigError naming the offending key.
void validate(const ScenarioConfig& cfg);

nlohmann::json to_json(const ScenarioConfig& cfg);

Grid config_grid(const ScenarioConfig& cfg);

Mode parse_mode(const std::string& s);

}  // namespace evac
