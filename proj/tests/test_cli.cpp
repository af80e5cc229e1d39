#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
    std::string cmd = std::string(EVACSIM_BIN) + " " + args +
                      " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), {});
}

const char* kTinyCfg = "/tmp/evac_cli_tiny.json";

void write_tiny_cfg() {
    std::ofstream out(kTinyCfg, std::ios::trunc);
    out << "{\"nx\": 10, \"ny\": 10, \"n_humans\": 10, \"n_robots\": 2,\n"
           " \"horizon\": 0.05, \"kde_h\": 15.0, \"target_spread\": 20.0}\n";
}

}  // namespace

TEST_CASE("single run writes the full artifact set") {
    write_tiny_cfg();
    fs::path out = "/tmp/evac_cli_run";
    fs::remove_all(out);
    REQUIRE(run_cli("--config " + std::string(kTinyCfg) + " --out-dir " +
                    out.string() + " --snapshot-every 2 --emit-heatmaps") == 0);

    CHECK(fs::exists(out / "metrics.csv"));
    CHECK(fs::exists(out / "summary.json"));
    CHECK(fs::exists(out / "snapshots" / "agents_0.csv"));
    CHECK(fs::exists(out / "snapshots" / "density_0.csv"));
    CHECK(fs::exists(out / "snapshots" / "vr_0.csv"));
    CHECK(fs::exists(out / "snapshots" / "agents_4.csv"));
    CHECK(fs::exists(out / "snapshots" / "density_0.pgm"));
    CHECK(fs::exists(out / "snapshots" / "density_0.pgm.minmax.txt"));

    nlohmann::json summary = nlohmann::json::parse(slurp(out / "summary.json"));
    CHECK(summary["steps"] == 5);
    CHECK(summary["ctrl_steps"] == 6);
    CHECK(summary["invariant_violations"] == 0);
    CHECK(summary["config"]["nx"] == 10);
    CHECK(summary["err_final"].is_number());
    CHECK(summary["final"]["t"] == doctest::Approx(0.05));

    std::string header = slurp(out / "metrics.csv").substr(0, 40);
    CHECK(header.substr(0, 29) == "t,err_l2,v1,v2,vtilde_l2,S,fa");
}

TEST_CASE("equal seeds reproduce metrics byte for byte") {
    write_tiny_cfg();
    fs::remove_all("/tmp/evac_cli_a");
    fs::remove_all("/tmp/evac_cli_b");
    std::string base = "--config " + std::string(kTinyCfg) + " --seed 5 ";
    REQUIRE(run_cli(base + "--out-dir /tmp/evac_cli_a") == 0);
    REQUIRE(run_cli(base + "--out-dir /tmp/evac_cli_b") == 0);
    CHECK(slurp("/tmp/evac_cli_a/metrics.csv") ==
          slurp("/tmp/evac_cli_b/metrics.csv"));

    fs::remove_all("/tmp/evac_cli_c");
    REQUIRE(run_cli("--config " + std::string(kTinyCfg) +
                    " --seed 6 --out-dir /tmp/evac_cli_c") == 0);
    CHECK(slurp("/tmp/evac_cli_a/metrics.csv") !=
          slurp("/tmp/evac_cli_c/metrics.csv"));
}

TEST_CASE("EVAC_OUT_DIR supplies the default output directory") {
    write_tiny_cfg();
    fs::remove_all("/tmp/evac_cli_env");
    std::string cmd = std::string("EVAC_OUT_DIR=/tmp/evac_cli_env ") +
                      EVACSIM_BIN + " --config " + kTinyCfg +
                      " >/dev/null 2>&1";
    REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    CHECK(fs::exists("/tmp/evac_cli_env/metrics.csv"));
}

TEST_CASE("kernel backends produce byte-identical metrics") {
    write_tiny_cfg();
    fs::remove_all("/tmp/evac_cli_auto");
    fs::remove_all("/tmp/evac_cli_scalar");
    std::string base = std::string(EVACSIM_BIN) + " --config " + kTinyCfg;
    REQUIRE(WEXITSTATUS(std::system(
                (base + " --out-dir /tmp/evac_cli_auto >/dev/null 2>&1")
                    .c_str())) == 0);
    REQUIRE(WEXITSTATUS(std::system(("EVAC_KERNELS=scalar " + base +
                                     " --out-dir /tmp/evac_cli_scalar "
                                     ">/dev/null 2>&1")
                                        .c_str())) == 0);
    CHECK(slurp("/tmp/evac_cli_auto/metrics.csv") ==
          slurp("/tmp/evac_cli_scalar/metrics.csv"));
}

TEST_CASE("bad inputs exit with code 2") {
    CHECK(run_cli("--no-such-flag") == 2);
    CHECK(run_cli("--preset nope --out-dir /tmp/evac_cli_x") == 2);

    std::ofstream bad("/tmp/evac_cli_bad.json", std::ios::trunc);
    bad << "{\"wat\": 1}\n";
    bad.close();
    CHECK(run_cli("--config /tmp/evac_cli_bad.json --out-dir /tmp/evac_cli_x") ==
          2);
    CHECK(run_cli("--help") == 0);
}

TEST_CASE("sweep fans out one directory per value") {
    write_tiny_cfg();
    fs::path out = "/tmp/evac_cli_sweep";
    fs::remove_all(out);
    REQUIRE(run_cli("--config " + std::string(kTinyCfg) +
                    " --sweep sigma=0.5,1,2 --jobs 2 --out-dir " +
                    out.string()) == 0);

    CHECK(fs::exists(out / "sigma_0.5" / "metrics.csv"));
    CHECK(fs::exists(out / "sigma_1" / "metrics.csv"));
    CHECK(fs::exists(out / "sigma_2" / "summary.json"));
    std::string cmp = slurp(out / "comparison.csv");
    CHECK(cmp.substr(0, 31) == "value,final_err_l2,decay_rate\n0");
    int lines = 0;
    for (char ch : cmp)
        if (ch == '\n') ++lines;
    CHECK(lines == 4);

    nlohmann::json s = nlohmann::json::parse(
        slurp(out / "sigma_2" / "summary.json"));
    CHECK(s["config"]["sigma"] == 2.0);
}
