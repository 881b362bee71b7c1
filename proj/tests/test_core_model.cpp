#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "edgesim/latency.hpp"
#include "edgesim/offload.hpp"
#include "edgesim/scenario.hpp"
#include "edgesim/units.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

using namespace edgesim;

namespace {

doctest::Approx tight(double expected) { return doctest::Approx(expected).epsilon(1e-12); }

}  // namespace

TEST_CASE("data volume accepts non-negative megabytes only") {
    CHECK(DataVolume().is_zero());
    CHECK(DataVolume(0.0).is_zero());
    CHECK(DataVolume(125.5).megabytes() == 125.5);
    CHECK(DataVolume::from_gigabytes(2.5).megabytes() == 2500.0);
    CHECK(DataVolume::from_gigabytes(1.0) == DataVolume(1000.0));
    CHECK(DataVolume(100.0) < DataVolume(100.5));
    CHECK(DataVolume(100.0) <= DataVolume(100.0));
    CHECK_THROWS_AS(DataVolume(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(DataVolume(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(DataVolume(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("link speed and compute capacity must be positive") {
    CHECK(LinkSpeed(37.0).megabytes_per_second() == 37.0);
    CHECK_THROWS_AS(LinkSpeed(0.0), std::invalid_argument);
    CHECK_THROWS_AS(LinkSpeed(-3.0), std::invalid_argument);
    CHECK(ComputeCapacity(2000.0).megabytes_per_cycle() == 2000.0);
    CHECK_THROWS_AS(ComputeCapacity(0.0), std::invalid_argument);
    CHECK_THROWS_AS(ComputeCapacity(std::nan("")), std::invalid_argument);
}

TEST_CASE("hop count starts at one") {
    CHECK(HopCount(1).hops() == 1);
    CHECK(HopCount(10).hops() == 10);
    CHECK_THROWS_AS(HopCount(0), std::invalid_argument);
    CHECK_THROWS_AS(HopCount(-2), std::invalid_argument);
}

TEST_CASE("alpha range is confined to (0, 1]") {
    const AlphaRange r(0.7, 1.0);
    CHECK(r.low() == 0.7);
    CHECK(r.high() == 1.0);
    CHECK(r.midpoint() == 0.85);
    CHECK_FALSE(r.is_degenerate());
    CHECK(AlphaRange::fixed(0.9).is_degenerate());
    CHECK(AlphaRange(0.7, 1.0) == AlphaRange(0.7, 1.0));
    CHECK_THROWS_AS(AlphaRange(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(AlphaRange(1.2, 1.3), std::invalid_argument);
    CHECK_THROWS_AS(AlphaRange(0.9, 0.8), std::invalid_argument);
    CHECK_THROWS_AS(AlphaRange(-0.5, 0.5), std::invalid_argument);
}

TEST_CASE("motion factor must lie within its range") {
    const MotionFactor m(0.85, AlphaRange(0.7, 1.0));
    CHECK(m.alpha() == 0.85);
    CHECK(m.range() == AlphaRange(0.7, 1.0));
    CHECK(MotionFactor::fixed(0.75).alpha() == 0.75);
    CHECK(MotionFactor::fixed(0.75).range().is_degenerate());
    CHECK_THROWS_AS(MotionFactor(0.5, AlphaRange(0.7, 1.0)), std::invalid_argument);
    CHECK_THROWS_AS(MotionFactor(1.1, AlphaRange(0.7, 1.0)), std::invalid_argument);
}

TEST_CASE("model names round-trip") {
    CHECK(to_string(ModelKind::Fog) == "fog");
    CHECK(to_string(ModelKind::Mec) == "mec");
    CHECK(to_string(ModelKind::Hybrid) == "hybrid");
    CHECK(parse_model("fog") == ModelKind::Fog);
    CHECK(parse_model("mec") == ModelKind::Mec);
    CHECK(parse_model("hybrid") == ModelKind::Hybrid);
    CHECK_FALSE(parse_model("cloud").has_value());
    CHECK_FALSE(parse_model("").has_value());
}

TEST_CASE("alpha semantics names round-trip") {
    CHECK(to_string(AlphaSemantics::EffectiveSpeed) == "effective_speed");
    CHECK(to_string(AlphaSemantics::PrintedFormula) == "printed_formula");
    CHECK(parse_alpha_semantics("effective_speed") == AlphaSemantics::EffectiveSpeed);
    CHECK(parse_alpha_semantics("printed_formula") == AlphaSemantics::PrintedFormula);
    CHECK_FALSE(parse_alpha_semantics("other").has_value());
}

TEST_CASE("shipped fog calibration") {
    const ScenarioParams p = default_scenario(ModelKind::Fog);
    CHECK(p.model == ModelKind::Fog);
    CHECK(p.access_speed.megabytes_per_second() == 37.0);
    CHECK(p.alpha_range == AlphaRange(0.7, 1.0));
    CHECK(p.backhaul_hops.hops() == 10);
    CHECK(p.cycle_duration_s == 1.0);
    CHECK(p.ue_count == 1);
    CHECK(p.alpha_semantics == AlphaSemantics::EffectiveSpeed);
    REQUIRE(p.tiers.size() == 2);
    CHECK(p.tiers[0].name == "fog");
    CHECK(p.tiers[0].link_speed.megabytes_per_second() == 37.0);
    CHECK(p.tiers[0].capacity.megabytes_per_cycle() == 1000.0);
    CHECK_FALSE(p.tiers[0].is_cloud);
    CHECK(p.tiers[1].name == "cloud");
    CHECK(p.tiers[1].capacity.megabytes_per_cycle() == 10000.0);
    CHECK(p.tiers[1].is_cloud);
    CHECK(p.cloud_tier().name == "cloud");
    CHECK(p.tier_index("fog") == std::size_t{0});
    CHECK(p.tier_index("cloud") == std::size_t{1});
    CHECK_FALSE(p.tier_index("mec").has_value());
    CHECK_NOTHROW(p.validate());
}

TEST_CASE("shipped mec calibration") {
    const ScenarioParams p = default_scenario(ModelKind::Mec);
    CHECK(p.access_speed.megabytes_per_second() == 800.0);
    CHECK(p.alpha_range == AlphaRange(0.8, 1.0));
    CHECK(p.backhaul_hops.hops() == 10);
    REQUIRE(p.tiers.size() == 2);
    CHECK(p.tiers[0].name == "mec");
    CHECK(p.tiers[0].link_speed.megabytes_per_second() == 800.0);
    CHECK(p.tiers[0].capacity.megabytes_per_cycle() == 2000.0);
    CHECK(p.tiers[1].name == "cloud");
    CHECK_NOTHROW(p.validate());
}

TEST_CASE("shipped hybrid calibration") {
    const ScenarioParams p = default_scenario(ModelKind::Hybrid);
    CHECK(p.access_speed.megabytes_per_second() == 800.0);
    CHECK(p.alpha_range == AlphaRange(0.9, 1.0));
    REQUIRE(p.tiers.size() == 3);
    CHECK(p.tiers[0].name == "u-mec");
    CHECK(p.tiers[0].capacity.megabytes_per_cycle() == 2000.0);
    CHECK(p.tiers[1].name == "c-mec");
    CHECK(p.tiers[1].capacity.megabytes_per_cycle() == 1000.0);
    CHECK(p.tiers[2].name == "cloud");
    CHECK(p.tiers[2].is_cloud);
    CHECK_NOTHROW(p.validate());
}

TEST_CASE("default scenario lookup by name") {
    CHECK(default_scenario("fog").model == ModelKind::Fog);
    CHECK(default_scenario("hybrid").tiers.size() == 3);
    CHECK_THROWS_AS(default_scenario("bogus"), std::invalid_argument);
}

TEST_CASE("scenario validation rejects malformed tier lists") {
    ScenarioParams p = default_scenario(ModelKind::Fog);
    std::swap(p.tiers[0], p.tiers[1]);
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);

    p = default_scenario(ModelKind::Fog);
    p.tiers.clear();
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);

    p = default_scenario(ModelKind::Fog);
    p.tiers[0].name = "cloud";
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);

    p = default_scenario(ModelKind::Fog);
    p.ue_count = 0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);

    p = default_scenario(ModelKind::Fog);
    p.cycle_duration_s = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("backhaul penalty is the natural log of the hop count") {
    CHECK(ln_hop_factor(HopCount(1)) == 0.0);
    CHECK(ln_hop_factor(HopCount(10)) == std::log(10.0));
    CHECK(ln_hop_factor(HopCount(10)) == tight(2.302585092994046));
}

TEST_CASE("fog latency at 1 GB with a still user") {
    const ScenarioParams p = default_scenario(ModelKind::Fog);
    const LatencyBreakdown b = total_latency(DataVolume(1000.0), p, MotionFactor::fixed(1.0));
    CHECK(b.transmission_s == tight(108.10810810810811));
    CHECK(b.processing_s == tight(1.0));
    CHECK(b.total_s == tight(109.10810810810811));
    CHECK(b.total_s == b.transmission_s + b.processing_s);
}

TEST_CASE("mec latency at 1 GB with a still user") {
    const ScenarioParams p = default_scenario(ModelKind::Mec);
    const LatencyBreakdown b = total_latency(DataVolume(1000.0), p, MotionFactor::fixed(1.0));
    CHECK(b.transmission_s == tight(5.0));
    CHECK(b.processing_s == tight(0.5));
    CHECK(b.total_s == tight(5.5));
}

TEST_CASE("mec latency at 2.5 GB spills into the cloud") {
    const ScenarioParams p = default_scenario(ModelKind::Mec);
    const LatencyBreakdown b = total_latency(DataVolume(2500.0), p, MotionFactor::fixed(1.0));
    CHECK(b.transmission_s == tight(14.128231366242558));
    CHECK(b.processing_s == tight(1.05));
    CHECK(b.total_s == tight(15.178231366242558));
}

TEST_CASE("hybrid latency at 2.5 GB stays off the cloud") {
    const ScenarioParams p = default_scenario(ModelKind::Hybrid);
    const LatencyBreakdown b = total_latency(DataVolume(2500.0), p, MotionFactor::fixed(1.0));
    CHECK(b.transmission_s == tight(12.5));
    CHECK(b.processing_s == tight(1.5));
    CHECK(b.total_s == tight(14.0));
}

TEST_CASE("zero volume costs nothing") {
    for (const ModelKind model : {ModelKind::Fog, ModelKind::Mec, ModelKind::Hybrid}) {
        const ScenarioParams p = default_scenario(model);
        const LatencyBreakdown b = total_latency(DataVolume(0.0), p, MotionFactor::fixed(1.0));
        CHECK(b.transmission_s == 0.0);
        CHECK(b.processing_s == 0.0);
        CHECK(b.total_s == 0.0);
    }
}

TEST_CASE("a single backhaul hop makes the cloud leg free but not its processing") {
    ScenarioParams p = default_scenario(ModelKind::Fog);
    p.backhaul_hops = HopCount(1);
    const LatencyBreakdown b = total_latency(DataVolume(1500.0), p, MotionFactor::fixed(1.0));
    CHECK(b.transmission_s == tight(2.0 * (1500.0 / 37.0 + 1000.0 / 37.0)));
    CHECK(b.processing_s == tight(1000.0 / 1000.0 + 500.0 / 10000.0));
}

TEST_CASE("hop count is irrelevant while the cloud is idle") {
    ScenarioParams one_hop = default_scenario(ModelKind::Fog);
    one_hop.backhaul_hops = HopCount(1);
    const ScenarioParams ten_hops = default_scenario(ModelKind::Fog);
    const MotionFactor alpha = MotionFactor::fixed(1.0);
    const LatencyBreakdown a = total_latency(DataVolume(800.0), one_hop, alpha);
    const LatencyBreakdown b = total_latency(DataVolume(800.0), ten_hops, alpha);
    CHECK(a.transmission_s == b.transmission_s);
    CHECK(a.total_s == b.total_s);
}

TEST_CASE("mobility scales the uplink per the configured semantics") {
    ScenarioParams p = default_scenario(ModelKind::Fog);
    const MotionFactor alpha(0.8, AlphaRange(0.7, 1.0));
    const LatencyBreakdown effective = total_latency(DataVolume(100.0), p, alpha);
    CHECK(effective.transmission_s == tight(2.0 * (100.0 / (0.8 * 37.0) + 100.0 / 37.0)));

    p.alpha_semantics = AlphaSemantics::PrintedFormula;
    const LatencyBreakdown printed = total_latency(DataVolume(100.0), p, alpha);
    CHECK(printed.transmission_s == tight(2.0 * (0.8 * 100.0 / 37.0 + 100.0 / 37.0)));
    CHECK(effective.transmission_s > printed.transmission_s);

    const MotionFactor still(1.0, AlphaRange(0.7, 1.0));
    CHECK(total_latency(DataVolume(100.0), p, still).transmission_s ==
          tight(total_latency(DataVolume(100.0), default_scenario(ModelKind::Fog), still).transmission_s));
}

TEST_CASE("a slower motion factor never speeds things up") {
    const ScenarioParams p = default_scenario(ModelKind::Mec);
    const AlphaRange range = p.alpha_range;
    const LatencyBreakdown slow = total_latency(DataVolume(1200.0), p, MotionFactor(range.low(), range));
    const LatencyBreakdown fast = total_latency(DataVolume(1200.0), p, MotionFactor(range.high(), range));
    CHECK(slow.transmission_s > fast.transmission_s);
    CHECK(slow.processing_s == fast.processing_s);
}

TEST_CASE("several users split the volume evenly and add their latencies") {
    ScenarioParams crowd = default_scenario(ModelKind::Fog);
    crowd.ue_count = 2;
    const MotionFactor alpha = MotionFactor::fixed(1.0);
    const LatencyBreakdown together = total_latency(DataVolume(3000.0), crowd, alpha);
    const LatencyBreakdown alone = total_latency(DataVolume(1500.0), default_scenario(ModelKind::Fog), alpha);
    CHECK(together.transmission_s == tight(2.0 * alone.transmission_s));
    CHECK(together.processing_s == tight(2.0 * alone.processing_s));
    CHECK(together.total_s == tight(2.0 * alone.total_s));
}

TEST_CASE("latency requires a valid scenario") {
    ScenarioParams p = default_scenario(ModelKind::Fog);
    p.ue_count = -1;
    CHECK_THROWS_AS(total_latency(DataVolume(100.0), p, MotionFactor::fixed(1.0)), std::invalid_argument);
}

TEST_CASE("transmission and processing always add up to the total") {
    for (const ModelKind model : {ModelKind::Fog, ModelKind::Mec, ModelKind::Hybrid}) {
        const ScenarioParams p = default_scenario(model);
        for (const double v : {50.0, 999.5, 1000.0, 2047.25, 4000.0}) {
            const LatencyBreakdown b = total_latency(DataVolume(v), p, MotionFactor(p.alpha_range.midpoint(), p.alpha_range));
            CHECK(b.total_s == b.transmission_s + b.processing_s);
        }
    }
}
