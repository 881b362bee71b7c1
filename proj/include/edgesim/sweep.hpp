#pragma once

#include "edgesim/offload.hpp"
#include "edgesim/scenario.hpp"
#include "edgesim/sim.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace edgesim {

/// How the motion factor is chosen at each sweep point.
enum class AlphaMode {
    Sampled,   // one uniform draw from the scenario's range per point
    Midpoint,  // the centre of the scenario's range, no randomness
    Fixed,     // a caller-supplied constant, ignoring the range
};

std::string_view to_string(AlphaMode mode);

/// Volume grid and evaluation settings for one sweep run.
struct SweepConfig {
    double start_mb = 50.0;
    double end_mb = 2500.0;
    double step_mb = 50.0;
    std::vector<ModelKind> models{ModelKind::Fog, ModelKind::Mec, ModelKind::Hybrid};
    std::uint64_t seed = 42;
    AlphaMode alpha_mode = AlphaMode::Sampled;
    double alpha_fixed = 1.0;  // used only when alpha_mode == Fixed
    int repetitions = 1;

    std::size_t point_count() const;
    std::vector<double> volume_grid_mb() const;

    /// Throws ConfigError (with a sweep.* field path) on bad ranges,
    /// duplicate models, or an out-of-range fixed alpha.
    void validate() const;
};

/// A sweep plus the scenario and policy for each swept model, parallel
/// to sweep.models.
struct SweepInputs {
    SweepConfig sweep;
    std::vector<ScenarioParams> scenarios;
    std::vector<PolicyConfig> policies;

    /// Pairs each swept model with its shipped calibration and the
    /// capacity-threshold policy.
    static SweepInputs with_defaults(SweepConfig config);

    void validate() const;
};

/// Runs every (model, volume, repetition) point through the simulator.
/// Draws come from a single generator seeded with sweep.seed and are
/// consumed in (model, volume, repetition) order, so equal inputs give
/// equal outputs; Midpoint and Fixed modes consume no randomness.
std::vector<PointResult> run_sweep(const SweepInputs& inputs);

/// Per-volume comparison of the models found in a result set. Fields
/// are present only when the models they need are present.
struct ComparisonRow {
    double volume_mb = 0.0;
    std::optional<double> fog_total_s;
    std::optional<double> mec_total_s;
    std::optional<double> hybrid_total_s;
    std::optional<double> fog_mec_ratio;              // fog / mec
    std::optional<double> hybrid_reduction_percent;   // (mec - hybrid) / mec * 100
};

struct ComparisonMetrics {
    std::vector<ComparisonRow> rows;  // ascending volume
    std::optional<double> min_fog_mec_ratio;
    std::optional<double> min_fog_mec_ratio_volume_mb;
    std::optional<double> max_fog_mec_ratio;
    std::optional<double> max_fog_mec_ratio_volume_mb;
    std::optional<double> min_hybrid_reduction_percent;
    std::optional<double> min_hybrid_reduction_volume_mb;
    std::optional<double> max_hybrid_reduction_percent;
    std::optional<double> max_hybrid_reduction_volume_mb;
};

/// Groups results by (model, volume), averages repetitions, and derives
/// the cross-model series. Models present in the input must share one
/// volume grid; otherwise a ConfigError is thrown.
ComparisonMetrics compare(const std::vector<PointResult>& points);

/// Renders results as CSV: a fixed header, one row per point sorted by
/// (model, volume, repetition), every number with six fixed decimals.
/// Equal result sets render byte-for-byte identically.
std::string to_csv(const std::vector<PointResult>& points);

/// Renders results as JSON with full-precision numbers, the same nine
/// fields per point as the CSV, and the comparison metrics inline.
std::string to_json_report(const std::vector<PointResult>& points);

/// Renders comparison metrics alone as JSON.
std::string to_json(const ComparisonMetrics& metrics);

/// Reads results back from a CSV or JSON file produced by the writers
/// above (detected from the content). Repetition indices are assigned
/// by order of appearance within each (model, volume) group. Throws
/// IoError on unreadable files or unrecognised content.
std::vector<PointResult> read_results(const std::string& path);

}  // namespace edgesim
