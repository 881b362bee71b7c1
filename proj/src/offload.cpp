#include "edgesim/offload.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace edgesim {

PolicyConfig PolicyConfig::from_capacities(const ScenarioParams& params) {
    PolicyConfig policy;
    for (const TierSpec& tier : params.tiers) {
        policy.fill_order.push_back(tier.name);
        if (!tier.is_cloud) {
            policy.thresholds.emplace(tier.name, DataVolume(tier.capacity.megabytes_per_cycle()));
        }
    }
    return policy;
}

void PolicyConfig::validate(const ScenarioParams& params) const {
    if (fill_order.size() != params.tiers.size()) {
        throw std::invalid_argument("fill_order must name every tier exactly once");
    }
    for (const std::string& name : fill_order) {
        if (!params.tier_index(name)) {
            throw std::invalid_argument("fill_order names unknown tier: " + name);
        }
    }
    if (std::set<std::string>(fill_order.begin(), fill_order.end()).size() != fill_order.size()) {
        throw std::invalid_argument("fill_order repeats a tier");
    }
    if (fill_order.back() != params.cloud_tier().name) {
        throw std::invalid_argument("cloud must be last in fill_order");
    }
    for (const TierSpec& tier : params.tiers) {
        if (tier.is_cloud) continue;
        const auto it = thresholds.find(tier.name);
        if (it == thresholds.end()) {
            throw std::invalid_argument("missing threshold for tier: " + tier.name);
        }
        if (it->second.megabytes() <= 0.0) {
            throw std::invalid_argument("threshold must be positive for tier: " + tier.name);
        }
    }
}

TierAllocation split(DataVolume volume, const ScenarioParams& params, const PolicyConfig& policy) {
    policy.validate(params);

    double remaining = volume.megabytes();
    TierAllocation alloc;
    alloc.per_tier.reserve(policy.fill_order.size());
    for (const std::string& name : policy.fill_order) {
        const TierSpec& tier = params.tiers[*params.tier_index(name)];
        double share;
        if (tier.is_cloud) {
            share = remaining;  // overflow destination, unbounded
            remaining = 0.0;
        } else {
            share = std::min(remaining, policy.thresholds.at(name).megabytes());
            remaining -= share;
        }
        alloc.per_tier.emplace_back(name, DataVolume(share));
    }
    return alloc;
}

}  // namespace edgesim
