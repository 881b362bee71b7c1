#include "edgesim/scenario.hpp"

#include <set>
#include <stdexcept>

namespace edgesim {

std::string_view to_string(ModelKind model) {
    switch (model) {
        case ModelKind::Fog: return "fog";
        case ModelKind::Mec: return "mec";
        case ModelKind::Hybrid: return "hybrid";
    }
    return "?";
}

std::optional<ModelKind> parse_model(std::string_view name) {
    if (name == "fog") return ModelKind::Fog;
    if (name == "mec") return ModelKind::Mec;
    if (name == "hybrid") return ModelKind::Hybrid;
    return std::nullopt;
}

std::string_view to_string(AlphaSemantics semantics) {
    return semantics == AlphaSemantics::EffectiveSpeed ? "effective_speed" : "printed_formula";
}

std::optional<AlphaSemantics> parse_alpha_semantics(std::string_view name) {
    if (name == "effective_speed") return AlphaSemantics::EffectiveSpeed;
    if (name == "printed_formula") return AlphaSemantics::PrintedFormula;
    return std::nullopt;
}

const TierSpec& ScenarioParams::cloud_tier() const {
    for (const TierSpec& tier : tiers) {
        if (tier.is_cloud) return tier;
    }
    throw std::invalid_argument("scenario has no cloud tier");
}

std::optional<std::size_t> ScenarioParams::tier_index(std::string_view name) const {
    for (std::size_t i = 0; i < tiers.size(); ++i) {
        if (tiers[i].name == name) return i;
    }
    return std::nullopt;
}

void ScenarioParams::validate() const {
    if (tiers.empty()) {
        throw std::invalid_argument("scenario must have at least one tier");
    }
    std::size_t cloud_count = 0;
    std::set<std::string> names;
    for (const TierSpec& tier : tiers) {
        if (tier.name.empty()) {
            throw std::invalid_argument("tier name must be non-empty");
        }
        if (!names.insert(tier.name).second) {
            throw std::invalid_argument("duplicate tier name: " + tier.name);
        }
        if (tier.is_cloud) ++cloud_count;
    }
    if (cloud_count != 1) {
        throw std::invalid_argument("scenario must have exactly one cloud tier");
    }
    if (!tiers.back().is_cloud) {
        throw std::invalid_argument("cloud must be the last tier in fill order");
    }
    if (!(cycle_duration_s > 0.0)) {
        throw std::invalid_argument("cycle duration must be positive");
    }
    if (ue_count < 1) {
        throw std::invalid_argument("ue_count must be at least 1");
    }
}

DataVolume TierAllocation::total() const {
    double sum = 0.0;
    for (const auto& [name, volume] : per_tier) {
        sum += volume.megabytes();
    }
    return DataVolume(sum);
}

double TierAllocation::megabytes_for(std::string_view tier_name) const {
    for (const auto& [name, volume] : per_tier) {
        if (name == tier_name) return volume.megabytes();
    }
    return 0.0;
}

namespace {

TierSpec make_tier(std::string name, double speed_mb_s, double capacity_mb_cycle, bool is_cloud) {
    return TierSpec{std::move(name), LinkSpeed(speed_mb_s), ComputeCapacity(capacity_mb_cycle), is_cloud};
}

constexpr double kCloudCapacityMbPerCycle = 10000.0;

}  // namespace

ScenarioParams default_scenario(ModelKind model) {
    switch (model) {
        case ModelKind::Fog:
            return ScenarioParams{
                ModelKind::Fog,
                LinkSpeed(37.0),
                AlphaRange(0.7, 1.0),
                HopCount(10),
                {make_tier("fog", 37.0, 1000.0, false),
                 make_tier("cloud", 37.0, kCloudCapacityMbPerCycle, true)},
            };
        case ModelKind::Mec:
            return ScenarioParams{
                ModelKind::Mec,
                LinkSpeed(800.0),
                AlphaRange(0.8, 1.0),
                HopCount(10),
                {make_tier("mec", 800.0, 2000.0, false),
                 make_tier("cloud", 800.0, kCloudCapacityMbPerCycle, true)},
            };
        case ModelKind::Hybrid:
            return ScenarioParams{
                ModelKind::Hybrid,
                LinkSpeed(800.0),
                AlphaRange(0.9, 1.0),
                HopCount(10),
                {make_tier("u-mec", 800.0, 2000.0, false),
                 make_tier("c-mec", 800.0, 1000.0, false),
                 make_tier("cloud", 800.0, kCloudCapacityMbPerCycle, true)},
            };
    }
    throw std::invalid_argument("unknown model");
}

ScenarioParams default_scenario(std::string_view model_name) {
    const auto model = parse_model(model_name);
    if (!model) {
        throw std::invalid_argument("unknown model name: " + std::string(model_name));
    }
    return default_scenario(*model);
}

}  // namespace edgesim
