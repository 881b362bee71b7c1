#include "edgesim/latency.hpp"

#include <cmath>
#include <stdexcept>

namespace edgesim {

namespace {

void check_alloc_matches(const TierAllocation& alloc, const ScenarioParams& params) {
    for (const auto& [name, volume] : alloc.per_tier) {
        if (!params.tier_index(name)) {
            throw std::invalid_argument("allocation names tier absent from scenario: " + name);
        }
    }
}

double uplink_time_s(double volume_mb, const ScenarioParams& params, const MotionFactor& alpha) {
    const double speed = params.access_speed.megabytes_per_second();
    if (params.alpha_semantics == AlphaSemantics::EffectiveSpeed) {
        return volume_mb / (alpha.alpha() * speed);
    }
    return alpha.alpha() * volume_mb / speed;
}

}  // namespace

double ln_hop_factor(HopCount hops) {
    return std::log(static_cast<double>(hops.hops()));
}

double transmission_time_s(const TierAllocation& alloc, const ScenarioParams& params,
                           const MotionFactor& alpha) {
    check_alloc_matches(alloc, params);

    const double total_mb = alloc.total().megabytes();
    if (total_mb == 0.0) {
        return 0.0;
    }

    double one_way = uplink_time_s(total_mb, params, alpha);
    const double hop_factor = ln_hop_factor(params.backhaul_hops);
    for (const auto& [name, volume] : alloc.per_tier) {
        const TierSpec& tier = params.tiers[*params.tier_index(name)];
        const double leg = volume.megabytes() / tier.link_speed.megabytes_per_second();
        one_way += tier.is_cloud ? hop_factor * leg : leg;
    }
    return 2.0 * one_way;
}

double processing_time_s(const TierAllocation& alloc, const ScenarioParams& params) {
    check_alloc_matches(alloc, params);

    double cycles = 0.0;
    for (const auto& [name, volume] : alloc.per_tier) {
        const TierSpec& tier = params.tiers[*params.tier_index(name)];
        cycles += volume.megabytes() / tier.capacity.megabytes_per_cycle();
    }
    return cycles * params.cycle_duration_s;
}

LatencyBreakdown total_latency(DataVolume volume, const ScenarioParams& params,
                               const MotionFactor& alpha, const PolicyConfig& policy) {
    params.validate();

    const double per_ue_mb = volume.megabytes() / params.ue_count;
    const TierAllocation alloc = split(DataVolume(per_ue_mb), params, policy);

    const double per_ue_transmission = transmission_time_s(alloc, params, alpha);
    const double per_ue_processing = processing_time_s(alloc, params);
    const double n = static_cast<double>(params.ue_count);
    return LatencyBreakdown::of(n * per_ue_transmission, n * per_ue_processing);
}

LatencyBreakdown total_latency(DataVolume volume, const ScenarioParams& params,
                               const MotionFactor& alpha) {
    return total_latency(volume, params, alpha, PolicyConfig::from_capacities(params));
}

}  // namespace edgesim
