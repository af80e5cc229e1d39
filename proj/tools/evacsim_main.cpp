// evacsim: run the evacuation simulator from a preset plus optional JSON
// config and flag overrides. Exit codes: 0 clean run, 2 bad configuration,
// 3 runtime fault or invariant violations.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "evac/common.hpp"
#include "evac/field.hpp"
#include "evac/heatmap.hpp"
#include "evac/metrics.hpp"
#include "evac/rng.hpp"
#include "evac/sim.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void write_agents_csv(const evac::HumanState& humans, const fs::path& path) {
    std::FILE* fp = std::fopen(path.string().c_str(), "w");
    evac::require_state(fp != nullptr,
                        "cannot open agents file " + path.string());
    for (const evac::Vec2& p : humans.pos)
        std::fprintf(fp, "%.17g,%.17g\n", p.x, p.y);
    std::fclose(fp);
}

struct SnapshotWriter final : evac::RunObserver {
    fs::path dir;
    bool heatmaps = false;

    void on_snapshot(int step, double, const evac::HumanState& humans,
                     const evac::ScalarField& rho_hat,
                     const evac::VectorField& v_r) override {
        const std::string tag = std::to_string(step);
        write_agents_csv(humans, dir / ("agents_" + tag + ".csv"));
        evac::write_csv(rho_hat, (dir / ("density_" + tag + ".csv")).string());
        evac::write_csv(v_r, (dir / ("vr_" + tag + ".csv")).string());
        if (heatmaps)
            evac::write_heatmap_pgm(
                rho_hat, (dir / ("density_" + tag + ".pgm")).string());
    }
};

evac::RunResult run_single(const evac::ScenarioConfig& cfg,
                           const fs::path& out_dir, bool heatmaps) {
    fs::create_directories(out_dir / "snapshots");
    SnapshotWriter writer;
    writer.dir = out_dir / "snapshots";
    writer.heatmaps = heatmaps;
    evac::RunResult res = evac::run(cfg, &writer);
    evac::write_metrics_csv(res.log, (out_dir / "metrics.csv").string());

    const evac::MetricsRecord& last = res.log.rows.back();
    json summary = {
        {"config", evac::to_json(cfg)},
        {"seed", cfg.seed},
        {"steps", res.steps},
        {"ctrl_steps", res.ctrl_steps},
        {"invariant_violations", res.invariant_violations},
        {"err_initial", res.err_initial},
        {"err_final", res.err_final},
        {"err_ratio",
         res.err_initial > 0.0 ? res.err_final / res.err_initial : 0.0},
        {"decay_rate", res.decay_rate},
        {"final",
         {{"t", last.t},
          {"err_l2", last.err_l2},
          {"v1", last.v1},
          {"v2", last.v2},
          {"vtilde_l2", last.vtilde_l2},
          {"fallback", last.fallback}}},
    };
    std::ofstream out(out_dir / "summary.json");
    evac::require_state(out.good(), "cannot open summary.json");
    out << summary.dump(2) << '\n';
    return res;
}

void report(const evac::ScenarioConfig& cfg, const evac::RunResult& res,
            const fs::path& out_dir) {
    std::printf(
        "%s: mode=%s seed=%llu steps=%d err %.6g -> %.6g decay=%.4g "
        "violations=%d\n",
        out_dir.string().c_str(), evac::mode_name(cfg.mode).c_str(),
        static_cast<unsigned long long>(cfg.seed), res.steps, res.err_initial,
        res.err_final, res.decay_rate, res.invariant_violations);
}

// "KEY=V1,V2,..."; values are parsed as JSON scalars, falling back to
// strings, and applied through the same path as config files.
int run_sweep(const evac::ScenarioConfig& base, const std::string& spec,
              const fs::path& out_dir, bool heatmaps, int jobs) {
    const auto eq = spec.find('=');
    evac::require_config(eq != std::string::npos && eq > 0,
                         "--sweep expects KEY=V1,V2,...");
    const std::string key = spec.substr(0, eq);
    std::vector<std::string> tokens;
    std::string rest = spec.substr(eq + 1);
    for (std::size_t pos = 0; pos <= rest.size();) {
        auto comma = rest.find(',', pos);
        if (comma == std::string::npos) comma = rest.size();
        tokens.push_back(rest.substr(pos, comma - pos));
        pos = comma + 1;
    }
    evac::require_config(!tokens.empty() && !tokens.front().empty(),
                         "--sweep needs at least one value");
    for (const std::string& t : tokens)
        evac::require_config(!t.empty(), "--sweep has an empty value");

    struct Job {
        evac::ScenarioConfig cfg;
        fs::path dir;
        std::string token;
        evac::RunResult res;
    };
    std::vector<Job> runs;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
        json val = json::parse(tokens[k], nullptr, false);
        if (val.is_discarded()) val = tokens[k];
        Job jb;
        jb.cfg = base;
        evac::apply_json(jb.cfg, json{{key, val}});
        if (key != "seed")
            jb.cfg.seed = evac::rng::mix(base.seed, 0, k, evac::rng::kSweep);
        evac::validate(jb.cfg);
        std::string name = tokens[k];
        for (char& c : name)
            if (c == '/') c = '_';
        jb.dir = out_dir / (key + "_" + name);
        jb.token = tokens[k];
        runs.push_back(std::move(jb));
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(runs.size());
    auto worker = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= runs.size()) return;
            try {
                runs[k].res = run_single(runs[k].cfg, runs[k].dir, heatmaps);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    const int workers =
        std::min<int>(jobs, static_cast<int>(runs.size()));
    std::vector<std::thread> pool;
    for (int i = 1; i < workers; ++i) pool.emplace_back(worker);
    worker();
    for (std::thread& th : pool) th.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);

    std::FILE* fp =
        std::fopen((out_dir / "comparison.csv").string().c_str(), "w");
    evac::require_state(fp != nullptr, "cannot open comparison.csv");
    std::fprintf(fp, "value,final_err_l2,decay_rate\n");
    int violations = 0;
    for (const Job& jb : runs) {
        std::fprintf(fp, "%s,%.17g,%.17g\n", jb.token.c_str(),
                     jb.res.err_final, jb.res.decay_rate);
        report(jb.cfg, jb.res, jb.dir);
        violations += jb.res.invariant_violations;
    }
    std::fclose(fp);
    return violations == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crowd evacuation simulator with density-feedback control"};
    std::string config_path, preset_name = "paper-sec5", out_dir_flag;
    std::string mode_str, sweep_spec;
    std::uint64_t seed = 0;
    double horizon = 0.0;
    int snapshot_every = 0;
    bool emit_heatmaps = false;
    int jobs = 1;

    app.add_option("--config", config_path,
                   "JSON config file applied over the preset");
    app.add_option("--preset", preset_name, "named base configuration")
        ->capture_default_str();
    app.add_option("--out-dir", out_dir_flag,
                   "output directory (default $EVAC_OUT_DIR, then ./out)");
    auto* seed_opt = app.add_option("--seed", seed, "simulation seed");
    auto* mode_opt = app.add_option(
        "--mode", mode_str, "guided | perfect-velocity | no-control");
    auto* horizon_opt =
        app.add_option("--horizon", horizon, "simulated seconds");
    auto* snap_opt = app.add_option("--snapshot-every", snapshot_every,
                                    "steps between snapshots (0 = auto)");
    app.add_flag("--emit-heatmaps", emit_heatmaps,
                 "also write density snapshots as 8-bit PGM");
    app.add_option("--sweep", sweep_spec,
                   "KEY=V1,V2,... run one simulation per value");
    app.add_option("--jobs", jobs, "parallel sweep runs")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        evac::ScenarioConfig cfg = evac::preset(preset_name);
        if (!config_path.empty()) cfg = evac::load_config(config_path, cfg);
        if (seed_opt->count() > 0) cfg.seed = seed;
        if (mode_opt->count() > 0) cfg.mode = evac::parse_mode(mode_str);
        if (horizon_opt->count() > 0) cfg.horizon = horizon;
        if (snap_opt->count() > 0) cfg.snapshot_every = snapshot_every;
        evac::validate(cfg);

        fs::path out = "out";
        if (!out_dir_flag.empty()) {
            out = out_dir_flag;
        } else if (const char* env = std::getenv("EVAC_OUT_DIR")) {
            if (env[0] != '\0') out = env;
        }

        if (!sweep_spec.empty())
            return run_sweep(cfg, sweep_spec, out, emit_heatmaps, jobs);
        evac::RunResult res = run_single(cfg, out, emit_heatmaps);
        report(cfg, res, out);
        return res.invariant_violations == 0 ? 0 : 3;
    } catch (const evac::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "runtime fault: %s\n", e.what());
        return 3;
    }
}
