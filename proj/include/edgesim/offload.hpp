#pragma once

#include "edgesim/scenario.hpp"

#include <map>
#include <string>
#include <vector>

namespace edgesim {

/// Capacity-threshold offloading policy: tiers are filled greedily in
/// order, each non-cloud tier up to its threshold, and whatever is left
/// over goes to the cloud (which is unbounded).
struct PolicyConfig {
    std::vector<std::string> fill_order;            // all tier names, cloud last
    std::map<std::string, DataVolume> thresholds;   // non-cloud tiers only

    /// Default policy for a scenario: fill in tier order with each
    /// threshold equal to one cycle's worth of that tier's capacity.
    static PolicyConfig from_capacities(const ScenarioParams& params);

    /// Throws std::invalid_argument if fill_order does not cover the
    /// scenario's tiers exactly once with the cloud last, or if a
    /// non-cloud tier lacks a positive threshold.
    void validate(const ScenarioParams& params) const;
};

/// Split a request volume across tiers under the policy. Shares are in
/// fill order, conserve the input volume, and never exceed a threshold.
TierAllocation split(DataVolume volume, const ScenarioParams& params, const PolicyConfig& policy);

}  // namespace edgesim
