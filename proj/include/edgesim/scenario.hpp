#pragma once

#include "edgesim/units.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace edgesim {

/// The three deployment models the simulator compares.
enum class ModelKind { Fog, Mec, Hybrid };

std::string_view to_string(ModelKind model);
std::optional<ModelKind> parse_model(std::string_view name);

/// How the motion factor enters the uplink term.
///
/// EffectiveSpeed (default): t = V / (alpha * S). Mobility degrades the
/// usable uplink speed, so a tighter alpha interval means lower latency.
/// PrintedFormula: t = alpha * V / S, alpha scaling the volume instead.
enum class AlphaSemantics { EffectiveSpeed, PrintedFormula };

std::string_view to_string(AlphaSemantics semantics);
std::optional<AlphaSemantics> parse_alpha_semantics(std::string_view name);

/// One compute tier: the link that feeds it and its per-cycle capacity.
/// The cloud tier is the overflow destination and pays the backhaul hop
/// penalty on its transmission leg.
struct TierSpec {
    std::string name;
    LinkSpeed link_speed;
    ComputeCapacity capacity;
    bool is_cloud = false;
};

/// Full parameter set for one deployment model.
///
/// tiers are listed in fill order; the cloud tier is always last and is
/// the only tier whose transmission leg is scaled by ln(backhaul_hops).
struct ScenarioParams {
    ModelKind model = ModelKind::Fog;
    LinkSpeed access_speed;           // UE uplink
    AlphaRange alpha_range;
    HopCount backhaul_hops;
    std::vector<TierSpec> tiers;
    double cycle_duration_s = 1.0;    // seconds per compute cycle
    int ue_count = 1;
    AlphaSemantics alpha_semantics = AlphaSemantics::EffectiveSpeed;

    const TierSpec& cloud_tier() const;
    std::optional<std::size_t> tier_index(std::string_view name) const;

    /// Throws std::invalid_argument if the tier list is malformed
    /// (empty, cloud missing or not last, duplicate names) or if
    /// cycle_duration_s / ue_count are out of range.
    void validate() const;
};

/// How one request's volume is distributed across the tiers.
/// Entries follow the scenario's tier order; the shares sum to the
/// request volume and every non-cloud share respects its threshold.
struct TierAllocation {
    std::vector<std::pair<std::string, DataVolume>> per_tier;

    DataVolume total() const;
    double megabytes_for(std::string_view tier_name) const;
};

/// Shipped calibration for a deployment model: link speeds, alpha
/// interval, tier capacities, and hop count as published for the model
/// comparison, plus tool defaults (cloud capacity 10 GB/cycle, 1 s
/// cycles, a single UE).
ScenarioParams default_scenario(ModelKind model);

/// Same, by name ("fog", "mec", "hybrid"). Throws std::invalid_argument
/// for unknown names.
ScenarioParams default_scenario(std::string_view model_name);

}  // namespace edgesim
