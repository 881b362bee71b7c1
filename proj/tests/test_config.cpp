#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "edgesim/config.hpp"
#include "edgesim/errors.hpp"
#include "edgesim/io.hpp"
#include "edgesim/latency.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

using namespace edgesim;

namespace {

std::string error_path(const std::string& text) {
    try {
        ConfigDocument doc = parse_config(text);
        doc.validate();
    } catch (const ConfigError& e) {
        return e.path();
    }
    return "no error";
}

bool contains_line(const std::vector<std::string>& lines, const std::string& wanted) {
    return std::find(lines.begin(), lines.end(), wanted) != lines.end();
}

}  // namespace

TEST_CASE("an empty document means the shipped defaults") {
    const ConfigDocument doc = parse_config("{}");
    CHECK(doc.schema_version == 1);
    CHECK_NOTHROW(doc.validate());

    const ScenarioParams fog = doc.scenario_params(ModelKind::Fog);
    CHECK(fog.access_speed.megabytes_per_second() == 37.0);
    CHECK(fog.alpha_range == AlphaRange(0.7, 1.0));
    CHECK(fog.backhaul_hops.hops() == 10);
    CHECK(doc.scenario_params(ModelKind::Mec).access_speed.megabytes_per_second() == 800.0);
    CHECK(doc.scenario_params(ModelKind::Hybrid).tiers.size() == 3);

    const SweepConfig sweep = doc.sweep_config();
    CHECK(sweep.seed == 42);
    CHECK(sweep.alpha_mode == AlphaMode::Sampled);
    CHECK(sweep.point_count() == 50);
    CHECK(sweep.models.size() == 3);

    CHECK(doc.policy_config(ModelKind::Fog).thresholds.at("fog") == DataVolume(1000.0));
}

TEST_CASE("only schema version 1 is accepted") {
    CHECK(parse_config(R"({"schema_version": 1})").schema_version == 1);
    CHECK(error_path(R"({"schema_version": 2})") == "schema_version");
    CHECK(error_path(R"({"schema_version": "1"})") == "schema_version");
    CHECK(error_path(R"({"schema_version": 1.5})") == "schema_version");
}

TEST_CASE("unknown fields are rejected with their path") {
    CHECK(error_path(R"({"scenari": {}})") == "scenari");
    CHECK(error_path(R"({"scenario": {"alpha": 1}})") == "scenario.alpha");
    CHECK(error_path(R"({"scenario": {"tiers": {"edge": {}}}})") == "scenario.tiers.edge");
    CHECK(error_path(R"({"scenario": {"tiers": {"mec": {"depth": 1}}}})") ==
          "scenario.tiers.mec.depth");
    CHECK(error_path(R"({"policy": {"order": []}})") == "policy.order");
    CHECK(error_path(R"({"sweep": {"points": 10}})") == "sweep.points");
    CHECK(error_path("[1]") == "config");
    CHECK(error_path("{nope") == "config");
}

TEST_CASE("scenario overrides reach every materialized model") {
    const ConfigDocument doc = parse_config(R"({
        "scenario": {
            "access_speed_mb_s": 100,
            "backhaul_hops": 4,
            "cycle_duration_s": 0.5,
            "ue_count": 2,
            "alpha_semantics": "printed_formula",
            "alpha_range": [0.75, 0.95]
        }
    })");
    for (ModelKind model : {ModelKind::Fog, ModelKind::Mec, ModelKind::Hybrid}) {
        const ScenarioParams params = doc.scenario_params(model);
        CHECK(params.access_speed.megabytes_per_second() == 100.0);
        CHECK(params.backhaul_hops.hops() == 4);
        CHECK(params.cycle_duration_s == 0.5);
        CHECK(params.ue_count == 2);
        CHECK(params.alpha_semantics == AlphaSemantics::PrintedFormula);
        CHECK(params.alpha_range == AlphaRange(0.75, 0.95));
    }
}

TEST_CASE("a single backhaul hop zeroes the cloud leg downstream") {
    const ConfigDocument doc = parse_config(R"({"scenario": {"backhaul_hops": 1}})");
    const ScenarioParams fog = doc.scenario_params(ModelKind::Fog);
    CHECK(fog.backhaul_hops.hops() == 1);
    const LatencyBreakdown b = total_latency(DataVolume(1500.0), fog, MotionFactor::fixed(1.0));
    CHECK(b.transmission_s == doctest::Approx(2.0 * (1500.0 / 37.0 + 1000.0 / 37.0)).epsilon(1e-12));
    CHECK(b.processing_s == doctest::Approx(1.05).epsilon(1e-12));
}

TEST_CASE("the alpha range must stay inside (0, 1]") {
    CHECK(error_path(R"({"scenario": {"alpha_range": [1.2, 1.3]}})") == "scenario.alpha_range");
    CHECK(error_path(R"({"scenario": {"alpha_range": [0, 1]}})") == "scenario.alpha_range");
    CHECK(error_path(R"({"scenario": {"alpha_range": [0.9, 0.8]}})") == "scenario.alpha_range");
    CHECK(error_path(R"({"scenario": {"alpha_range": [0.9]}})") == "scenario.alpha_range");
    CHECK(error_path(R"({"scenario": {"alpha_range": ["a", "b"]}})") == "scenario.alpha_range");
}

TEST_CASE("scenario field types are enforced") {
    CHECK(error_path(R"({"scenario": {"access_speed_mb_s": -10}})") ==
          "scenario.access_speed_mb_s");
    CHECK(error_path(R"({"scenario": {"access_speed_mb_s": "fast"}})") ==
          "scenario.access_speed_mb_s");
    CHECK(error_path(R"({"scenario": {"backhaul_hops": 0}})") == "scenario.backhaul_hops");
    CHECK(error_path(R"({"scenario": {"backhaul_hops": 1.5}})") == "scenario.backhaul_hops");
    CHECK(error_path(R"({"scenario": {"ue_count": 0}})") == "scenario.ue_count");
    CHECK(error_path(R"({"scenario": {"cycle_duration_s": 0}})") == "scenario.cycle_duration_s");
    CHECK(error_path(R"({"scenario": {"alpha_semantics": "literal"}})") ==
          "scenario.alpha_semantics");
    CHECK(error_path(R"({"scenario": {"tiers": {"mec": {"capacity_mb_cycle": 0}}}})") ==
          "scenario.tiers.mec.capacity_mb_cycle");
}

TEST_CASE("tier overrides apply only where the tier exists") {
    const ConfigDocument doc = parse_config(R"({
        "scenario": {"tiers": {
            "mec": {"capacity_mb_cycle": 4000},
            "u-mec": {"link_speed_mb_s": 900},
            "cloud": {"capacity_mb_cycle": 20000}
        }}
    })");

    const ScenarioParams mec = doc.scenario_params(ModelKind::Mec);
    CHECK(mec.tiers[0].capacity.megabytes_per_cycle() == 4000.0);
    CHECK(mec.cloud_tier().capacity.megabytes_per_cycle() == 20000.0);

    const ScenarioParams hybrid = doc.scenario_params(ModelKind::Hybrid);
    CHECK(hybrid.tiers[0].link_speed.megabytes_per_second() == 900.0);
    CHECK(hybrid.tiers[0].capacity.megabytes_per_cycle() == 2000.0);

    const ScenarioParams fog = doc.scenario_params(ModelKind::Fog);
    CHECK(fog.tiers[0].capacity.megabytes_per_cycle() == 1000.0);
    CHECK(fog.cloud_tier().capacity.megabytes_per_cycle() == 20000.0);

    CHECK(doc.policy_config(ModelKind::Mec).thresholds.at("mec") == DataVolume(4000.0));
}

TEST_CASE("policy thresholds follow the tier vocabulary") {
    const ConfigDocument doc = parse_config(R"({"policy": {"thresholds": {"fog": 500}}})");
    CHECK(doc.policy_config(ModelKind::Fog).thresholds.at("fog") == DataVolume(500.0));
    CHECK(doc.policy_config(ModelKind::Mec).thresholds.at("mec") == DataVolume(2000.0));

    CHECK(error_path(R"({"policy": {"thresholds": {"cloud": 100}}})") ==
          "policy.thresholds.cloud");
    CHECK(error_path(R"({"policy": {"thresholds": {"edge": 100}}})") == "policy.thresholds.edge");
    CHECK(error_path(R"({"policy": {"thresholds": {"fog": 0}}})") == "policy.thresholds.fog");
}

TEST_CASE("a fill order override must fit the swept models") {
    const std::string text = R"({
        "policy": {"fill_order": ["c-mec", "u-mec", "cloud"]},
        "sweep": {"models": ["hybrid"]}
    })";
    const ConfigDocument doc = parse_config(text);
    CHECK_NOTHROW(doc.validate());
    const PolicyConfig policy = doc.policy_config(ModelKind::Hybrid);
    REQUIRE(policy.fill_order.size() == 3);
    CHECK(policy.fill_order[0] == "c-mec");

    try {
        doc.policy_config(ModelKind::Fog);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.path() == "policy");
    }

    const ConfigDocument all_models =
        parse_config(R"({"policy": {"fill_order": ["c-mec", "u-mec", "cloud"]}})");
    CHECK_THROWS_AS(all_models.validate(), ConfigError);

    CHECK(error_path(R"({"policy": {"fill_order": ["fog", "gateway"]}})") ==
          "policy.fill_order.gateway");
    CHECK(error_path(R"({"policy": {"fill_order": []}})") == "policy.fill_order");
}

TEST_CASE("sweep overrides materialize into the sweep settings") {
    const ConfigDocument doc = parse_config(R"({
        "sweep": {
            "start_mb": 100,
            "end_mb": 1000,
            "step_mb": 100,
            "models": ["mec", "hybrid"],
            "seed": 7,
            "alpha_mode": "fixed",
            "alpha_fixed": 0.9,
            "repetitions": 3
        }
    })");
    const SweepConfig sweep = doc.sweep_config();
    CHECK(sweep.start_mb == 100.0);
    CHECK(sweep.end_mb == 1000.0);
    CHECK(sweep.point_count() == 10);
    CHECK(sweep.models == std::vector<ModelKind>{ModelKind::Mec, ModelKind::Hybrid});
    CHECK(sweep.seed == 7);
    CHECK(sweep.alpha_mode == AlphaMode::Fixed);
    CHECK(sweep.alpha_fixed == 0.9);
    CHECK(sweep.repetitions == 3);
}

TEST_CASE("sweep fields are validated at parse time") {
    CHECK(error_path(R"({"sweep": {"step_mb": 0}})") == "sweep.step_mb");
    CHECK(error_path(R"({"sweep": {"seed": -1}})") == "sweep.seed");
    CHECK(error_path(R"({"sweep": {"seed": "42"}})") == "sweep.seed");
    CHECK(error_path(R"({"sweep": {"models": []}})") == "sweep.models");
    CHECK(error_path(R"({"sweep": {"models": ["fog", "fog"]}})") == "sweep.models");
    CHECK(error_path(R"({"sweep": {"models": ["cloud"]}})") == "sweep.models.cloud");
    CHECK(error_path(R"({"sweep": {"alpha_mode": "random"}})") == "sweep.alpha_mode");
    CHECK(error_path(R"({"sweep": {"alpha_fixed": 1.5}})") == "sweep.alpha_fixed");
    CHECK(error_path(R"({"sweep": {"repetitions": 0}})") == "sweep.repetitions");
}

TEST_CASE("cross-field problems surface on validate") {
    CHECK(error_path(R"({"sweep": {"start_mb": 500, "end_mb": 100}})") == "sweep.end_mb");
}

TEST_CASE("an empty document serializes to its schema version alone") {
    const ConfigDocument doc = parse_config("{}");
    CHECK(serialize(doc) == "{\n  \"schema_version\": 1\n}\n");
}

TEST_CASE("documents survive a serialize and parse round trip") {
    const std::string text = R"({
        "scenario": {
            "access_speed_mb_s": 120,
            "alpha_range": [0.8, 0.9],
            "tiers": {"fog": {"capacity_mb_cycle": 1500}}
        },
        "policy": {"thresholds": {"fog": 1500}},
        "sweep": {"end_mb": 1000, "alpha_mode": "midpoint", "seed": 9}
    })";
    const ConfigDocument doc = parse_config(text);
    const std::string normalized = serialize(doc);
    const ConfigDocument reparsed = parse_config(normalized);
    CHECK(serialize(reparsed) == normalized);
    CHECK(reparsed.scenario.access_speed_mb_s == 120.0);
    CHECK(reparsed.sweep.seed == std::uint64_t{9});
    CHECK(reparsed.scenario.tiers.at("fog").capacity_mb_cycle == 1500.0);
}

TEST_CASE("explain labels every value with its origin") {
    const std::vector<std::string> defaults = parse_config("{}").explain();
    CHECK(contains_line(defaults, "fog.access_speed_mb_s = 37 [calibration]"));
    CHECK(contains_line(defaults, "fog.alpha_range = [0.7, 1] [calibration]"));
    CHECK(contains_line(defaults, "fog.tiers.cloud.capacity_mb_cycle = 10000 [default]"));
    CHECK(contains_line(defaults, "fog.tiers.fog.capacity_mb_cycle = 1000 [calibration]"));
    CHECK(contains_line(defaults, "fog.policy.fill_order = [fog, cloud] [default]"));
    CHECK(contains_line(defaults, "mec.access_speed_mb_s = 800 [calibration]"));
    CHECK(contains_line(defaults, "hybrid.policy.thresholds.c-mec = 1000 [default]"));
    CHECK(contains_line(defaults, "sweep.seed = 42 [default]"));
    CHECK(contains_line(defaults, "sweep.alpha_mode = sampled [calibration]"));
    CHECK_FALSE(contains_line(defaults, "sweep.alpha_fixed = 1 [default]"));

    const std::vector<std::string> overridden = parse_config(R"({
        "scenario": {"access_speed_mb_s": 64},
        "sweep": {"alpha_mode": "fixed", "alpha_fixed": 0.5, "models": ["fog"]}
    })").explain();
    CHECK(contains_line(overridden, "fog.access_speed_mb_s = 64 [override]"));
    CHECK(contains_line(overridden, "sweep.alpha_mode = fixed [override]"));
    CHECK(contains_line(overridden, "sweep.alpha_fixed = 0.5 [override]"));
    CHECK(contains_line(overridden, "sweep.models = [fog] [override]"));
    CHECK_FALSE(contains_line(overridden, "mec.access_speed_mb_s = 64 [override]"));
}

TEST_CASE("config files load from disk") {
    const auto dir = std::filesystem::temp_directory_path() / "edgesim_config_tests";
    std::filesystem::create_directories(dir);
    const auto path = dir / "config.json";
    write_text_file(path.string(), R"({"scenario": {"backhaul_hops": 2}})");
    const ConfigDocument doc = load_config_file(path.string());
    CHECK(doc.scenario_params(ModelKind::Fog).backhaul_hops.hops() == 2);
    CHECK_THROWS_AS(load_config_file((dir / "missing.json").string()), IoError);
}

TEST_CASE("the seed environment variable is read strictly") {
    unsetenv("EDGESIM_SEED");
    CHECK_FALSE(seed_from_env().has_value());

    setenv("EDGESIM_SEED", "123", 1);
    CHECK(seed_from_env() == std::uint64_t{123});

    setenv("EDGESIM_SEED", "abc", 1);
    CHECK_THROWS_AS(seed_from_env(), ConfigError);

    setenv("EDGESIM_SEED", "-1", 1);
    CHECK_THROWS_AS(seed_from_env(), ConfigError);

    setenv("EDGESIM_SEED", "", 1);
    CHECK_THROWS_AS(seed_from_env(), ConfigError);

    unsetenv("EDGESIM_SEED");
}
