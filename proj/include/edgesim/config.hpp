#pragma once

#include "edgesim/offload.hpp"
#include "edgesim/scenario.hpp"
#include "edgesim/sweep.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace edgesim {

/// Sparse per-tier overrides, keyed by tier name in the config file.
struct TierOverride {
    std::optional<double> link_speed_mb_s;
    std::optional<double> capacity_mb_cycle;
};

/// Sparse scenario overrides. They apply to every model the document is
/// materialized for; tier overrides apply wherever the named tier
/// exists (the tier vocabulary spans all models, so "u-mec" entries
/// simply do not affect fog or mec scenarios).
struct ScenarioOverrides {
    std::optional<double> access_speed_mb_s;
    std::optional<std::pair<double, double>> alpha_range;
    std::optional<int> backhaul_hops;
    std::optional<double> cycle_duration_s;
    std::optional<int> ue_count;
    std::optional<AlphaSemantics> alpha_semantics;
    std::map<std::string, TierOverride> tiers;
};

/// Sparse offload-policy overrides. A fill_order override must cover
/// the tiers of the model being materialized exactly; thresholds apply
/// wherever the named tier exists.
struct PolicyOverrides {
    std::optional<std::vector<std::string>> fill_order;
    std::map<std::string, double> thresholds;
};

struct SweepOverrides {
    std::optional<double> start_mb;
    std::optional<double> end_mb;
    std::optional<double> step_mb;
    std::optional<std::vector<ModelKind>> models;
    std::optional<std::uint64_t> seed;
    std::optional<AlphaMode> alpha_mode;
    std::optional<double> alpha_fixed;
    std::optional<int> repetitions;
};

/// A parsed configuration file: the shipped calibration plus whatever
/// the file overrides. Parsing is strict: unknown keys and
/// out-of-range values fail immediately with their field path.
struct ConfigDocument {
    int schema_version = 1;
    ScenarioOverrides scenario;
    PolicyOverrides policy;
    SweepOverrides sweep;

    /// The scenario for one model with all overrides applied.
    ScenarioParams scenario_params(ModelKind model) const;

    /// The offload policy for one model with all overrides applied.
    /// Throws ConfigError if a fill_order override does not fit the
    /// model's tiers.
    PolicyConfig policy_config(ModelKind model) const;

    SweepConfig sweep_config() const;

    /// Materializes the sweep and every swept model, surfacing any
    /// cross-field problem as ConfigError.
    void validate() const;

    /// One line per effective parameter of every swept model and of the
    /// sweep, in the form "fog.access_speed_mb_s = 37 [calibration]".
    /// The bracket tells where the value came from: [override] from
    /// this document, [calibration] from the published model
    /// comparison, [default] chosen by this tool.
    std::vector<std::string> explain() const;
};

/// Parses a JSON config document. Throws ConfigError with a field path
/// on malformed JSON, unknown keys, or out-of-range values.
ConfigDocument parse_config(const std::string& text);

/// load + parse. Throws IoError on unreadable files.
ConfigDocument load_config_file(const std::string& path);

/// Normalized sparse form: schema_version plus exactly the overridden
/// fields, with deterministic key order. parse(serialize(d)) == d.
std::string serialize(const ConfigDocument& doc);

/// Seed override from the EDGESIM_SEED environment variable, if set.
/// Throws ConfigError when the variable is set but not a non-negative
/// integer.
std::optional<std::uint64_t> seed_from_env();

}  // namespace edgesim
