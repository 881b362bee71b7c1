#include "edgesim/sweep.hpp"

#include "edgesim/errors.hpp"
#include "edgesim/io.hpp"
#include "edgesim/rng.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>
#include <string_view>
#include <utility>

namespace edgesim {

namespace {

constexpr std::string_view kCsvHeader =
    "model,volume_mb,alpha,transmission_s,processing_s,total_s,"
    "v_tier1_mb,v_tier2_mb,v_cloud_mb";

constexpr std::size_t kMaxSweepPoints = 1000000;

void require(bool ok, const char* path, const char* message) {
    if (!ok) {
        throw ConfigError(path, message);
    }
}

MotionFactor pick_alpha(AlphaSampler& rng, const AlphaRange& range, const SweepConfig& sweep) {
    switch (sweep.alpha_mode) {
        case AlphaMode::Sampled:
            return sample_alpha(rng, range);
        case AlphaMode::Midpoint:
            return MotionFactor(range.midpoint(), range);
        case AlphaMode::Fixed:
            return MotionFactor::fixed(sweep.alpha_fixed);
    }
    throw std::invalid_argument("unknown alpha mode");
}

std::vector<PointResult> sorted_points(std::vector<PointResult> points) {
    std::stable_sort(points.begin(), points.end(), [](const PointResult& a, const PointResult& b) {
        const auto key = [](const PointResult& p) {
            return std::make_tuple(static_cast<int>(p.model), p.volume_mb, p.repetition);
        };
        return key(a) < key(b);
    });
    return points;
}

/// Fixed column mapping: first two non-cloud shares, then the cloud
/// share, zero-filled when a scenario has fewer tiers.
std::array<double, 3> share_columns(const PointResult& point) {
    const auto& per_tier = point.allocation.per_tier;
    if (per_tier.size() > 3) {
        throw std::invalid_argument("result rows support at most three tiers");
    }
    std::array<double, 3> columns{0.0, 0.0, 0.0};
    if (!per_tier.empty()) {
        columns[2] = per_tier.back().second.megabytes();
        if (per_tier.size() >= 2) columns[0] = per_tier[0].second.megabytes();
        if (per_tier.size() >= 3) columns[1] = per_tier[1].second.megabytes();
    }
    return columns;
}

double parse_double_field(std::string_view field, const std::string& path) {
    double value{};
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw IoError("bad numeric field '" + std::string(field) + "' in " + path);
    }
    return value;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

/// Repetition indices are not serialized; rebuild them positionally.
void assign_repetitions(std::vector<PointResult>& points) {
    std::map<std::pair<int, double>, int> counters;
    for (PointResult& point : points) {
        point.repetition = counters[{static_cast<int>(point.model), point.volume_mb}]++;
    }
}

PointResult point_from_columns(ModelKind model, const std::array<double, 8>& columns) {
    PointResult point;
    point.model = model;
    point.volume_mb = columns[0];
    point.alpha_used = columns[1];
    point.transmission_s = columns[2];
    point.processing_s = columns[3];
    point.total_s = columns[4];
    point.allocation.per_tier = {
        {"tier1", DataVolume(columns[5])},
        {"tier2", DataVolume(columns[6])},
        {"cloud", DataVolume(columns[7])},
    };
    return point;
}

std::vector<PointResult> read_csv_results(const std::string& content, const std::string& path) {
    std::vector<PointResult> points;
    std::size_t line_start = 0;
    bool saw_header = false;
    while (line_start <= content.size()) {
        std::size_t line_end = content.find('\n', line_start);
        if (line_end == std::string::npos) line_end = content.size();
        std::string_view line(content.data() + line_start, line_end - line_start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const std::size_t next = line_end + 1;
        if (line.empty()) {
            if (line_end == content.size()) break;
            line_start = next;
            continue;
        }
        if (!saw_header) {
            if (line != kCsvHeader) {
                throw IoError("unrecognised results header in " + path);
            }
            saw_header = true;
            line_start = next;
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != 9) {
            throw IoError("expected 9 columns per row in " + path);
        }
        const auto model = parse_model(fields[0]);
        if (!model) {
            throw IoError("unknown model '" + std::string(fields[0]) + "' in " + path);
        }
        std::array<double, 8> columns{};
        for (std::size_t i = 0; i < columns.size(); ++i) {
            columns[i] = parse_double_field(fields[i + 1], path);
        }
        points.push_back(point_from_columns(*model, columns));
        line_start = next;
    }
    if (!saw_header) {
        throw IoError("unrecognised results header in " + path);
    }
    return points;
}

std::vector<PointResult> read_json_results(const std::string& content, const std::string& path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(content);
    } catch (const nlohmann::json::exception& e) {
        throw IoError("cannot parse " + path + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array()) {
        throw IoError("no points array in " + path);
    }
    std::vector<PointResult> points;
    try {
        for (const auto& item : doc["points"]) {
            const auto model = parse_model(item.at("model").get<std::string>());
            if (!model) {
                throw IoError("unknown model in " + path);
            }
            const std::array<double, 8> columns{
                item.at("volume_mb").get<double>(),     item.at("alpha").get<double>(),
                item.at("transmission_s").get<double>(), item.at("processing_s").get<double>(),
                item.at("total_s").get<double>(),        item.at("v_tier1_mb").get<double>(),
                item.at("v_tier2_mb").get<double>(),     item.at("v_cloud_mb").get<double>(),
            };
            points.push_back(point_from_columns(*model, columns));
        }
    } catch (const nlohmann::json::exception& e) {
        throw IoError("malformed point in " + path + ": " + e.what());
    }
    return points;
}

nlohmann::json metrics_object(const ComparisonMetrics& metrics) {
    nlohmann::json rows = nlohmann::json::array();
    for (const ComparisonRow& row : metrics.rows) {
        nlohmann::json item{{"volume_mb", row.volume_mb}};
        const auto put = [&item](const char* key, const std::optional<double>& value) {
            if (value) item[key] = *value;
        };
        put("fog_total_s", row.fog_total_s);
        put("mec_total_s", row.mec_total_s);
        put("hybrid_total_s", row.hybrid_total_s);
        put("fog_mec_ratio", row.fog_mec_ratio);
        put("hybrid_reduction_percent", row.hybrid_reduction_percent);
        rows.push_back(std::move(item));
    }
    nlohmann::json object{{"rows", std::move(rows)}};
    const auto put = [&object](const char* key, const std::optional<double>& value) {
        if (value) object[key] = *value;
    };
    put("min_fog_mec_ratio", metrics.min_fog_mec_ratio);
    put("min_fog_mec_ratio_volume_mb", metrics.min_fog_mec_ratio_volume_mb);
    put("max_fog_mec_ratio", metrics.max_fog_mec_ratio);
    put("max_fog_mec_ratio_volume_mb", metrics.max_fog_mec_ratio_volume_mb);
    put("min_hybrid_reduction_percent", metrics.min_hybrid_reduction_percent);
    put("min_hybrid_reduction_volume_mb", metrics.min_hybrid_reduction_volume_mb);
    put("max_hybrid_reduction_percent", metrics.max_hybrid_reduction_percent);
    put("max_hybrid_reduction_volume_mb", metrics.max_hybrid_reduction_volume_mb);
    return object;
}

}  // namespace

std::string_view to_string(AlphaMode mode) {
    switch (mode) {
        case AlphaMode::Sampled: return "sampled";
        case AlphaMode::Midpoint: return "midpoint";
        case AlphaMode::Fixed: return "fixed";
    }
    return "?";
}

std::size_t SweepConfig::point_count() const {
    return static_cast<std::size_t>(std::floor((end_mb - start_mb) / step_mb + 1e-9)) + 1;
}

std::vector<double> SweepConfig::volume_grid_mb() const {
    const std::size_t count = point_count();
    std::vector<double> grid;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid.push_back(start_mb + static_cast<double>(i) * step_mb);
    }
    return grid;
}

void SweepConfig::validate() const {
    require(std::isfinite(start_mb) && start_mb > 0.0, "sweep.start_mb", "must be positive");
    require(std::isfinite(step_mb) && step_mb > 0.0, "sweep.step_mb", "must be positive");
    require(std::isfinite(end_mb) && end_mb >= start_mb, "sweep.end_mb",
            "must be at least start_mb");
    require(!models.empty(), "sweep.models", "must name at least one model");
    std::set<int> seen;
    for (ModelKind model : models) {
        require(seen.insert(static_cast<int>(model)).second, "sweep.models",
                "must not repeat a model");
    }
    require(repetitions >= 1, "sweep.repetitions", "must be at least 1");
    if (alpha_mode == AlphaMode::Fixed) {
        require(std::isfinite(alpha_fixed) && 0.0 < alpha_fixed && alpha_fixed <= 1.0,
                "sweep.alpha_fixed", "must lie in (0, 1]");
    }
    require(point_count() <= kMaxSweepPoints, "sweep.step_mb", "grid has too many points");
}

SweepInputs SweepInputs::with_defaults(SweepConfig config) {
    config.validate();
    SweepInputs inputs;
    inputs.sweep = std::move(config);
    inputs.scenarios.reserve(inputs.sweep.models.size());
    inputs.policies.reserve(inputs.sweep.models.size());
    for (ModelKind model : inputs.sweep.models) {
        inputs.scenarios.push_back(default_scenario(model));
        inputs.policies.push_back(PolicyConfig::from_capacities(inputs.scenarios.back()));
    }
    return inputs;
}

void SweepInputs::validate() const {
    sweep.validate();
    require(scenarios.size() == sweep.models.size() && policies.size() == sweep.models.size(),
            "sweep.models", "scenario and policy lists must match the swept models");
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        require(scenarios[i].model == sweep.models[i], "sweep.models",
                "scenario order must match the swept models");
        scenarios[i].validate();
        policies[i].validate(scenarios[i]);
    }
}

std::vector<PointResult> run_sweep(const SweepInputs& inputs) {
    inputs.validate();

    AlphaSampler rng(inputs.sweep.seed);
    const std::vector<double> grid = inputs.sweep.volume_grid_mb();

    std::vector<PointResult> points;
    points.reserve(inputs.sweep.models.size() * grid.size() *
                   static_cast<std::size_t>(inputs.sweep.repetitions));
    for (std::size_t i = 0; i < inputs.sweep.models.size(); ++i) {
        const ScenarioParams& params = inputs.scenarios[i];
        const PolicyConfig& policy = inputs.policies[i];
        for (double volume_mb : grid) {
            for (int rep = 0; rep < inputs.sweep.repetitions; ++rep) {
                const MotionFactor alpha = pick_alpha(rng, params.alpha_range, inputs.sweep);
                PointResult point = run_scenario(DataVolume(volume_mb), params, alpha, policy);
                point.repetition = rep;
                points.push_back(std::move(point));
            }
        }
    }
    return points;
}

ComparisonMetrics compare(const std::vector<PointResult>& points) {
    struct Accumulator {
        double sum = 0.0;
        int count = 0;
    };
    std::map<int, std::map<double, Accumulator>> by_model;
    for (const PointResult& point : points) {
        Accumulator& acc = by_model[static_cast<int>(point.model)][point.volume_mb];
        acc.sum += point.total_s;
        acc.count += 1;
    }

    std::set<double> grid;
    for (const auto& [model, series] : by_model) {
        for (const auto& [volume, acc] : series) {
            grid.insert(volume);
        }
    }
    for (const auto& [model, series] : by_model) {
        if (series.size() != grid.size()) {
            throw ConfigError("results", "volume grids differ across models");
        }
    }

    const auto mean_for = [&by_model](ModelKind model, double volume) -> std::optional<double> {
        const auto series = by_model.find(static_cast<int>(model));
        if (series == by_model.end()) return std::nullopt;
        const auto acc = series->second.find(volume);
        if (acc == series->second.end()) return std::nullopt;
        return acc->second.sum / acc->second.count;
    };

    ComparisonMetrics metrics;
    metrics.rows.reserve(grid.size());
    for (double volume : grid) {
        ComparisonRow row;
        row.volume_mb = volume;
        row.fog_total_s = mean_for(ModelKind::Fog, volume);
        row.mec_total_s = mean_for(ModelKind::Mec, volume);
        row.hybrid_total_s = mean_for(ModelKind::Hybrid, volume);
        if (row.fog_total_s && row.mec_total_s && *row.mec_total_s > 0.0) {
            row.fog_mec_ratio = *row.fog_total_s / *row.mec_total_s;
        }
        if (row.mec_total_s && row.hybrid_total_s && *row.mec_total_s > 0.0) {
            row.hybrid_reduction_percent =
                (*row.mec_total_s - *row.hybrid_total_s) / *row.mec_total_s * 100.0;
        }

        const auto track =
            [volume](const std::optional<double>& value, std::optional<double>& min_value,
                     std::optional<double>& min_volume, std::optional<double>& max_value,
                     std::optional<double>& max_volume) {
                if (!value) return;
                if (!min_value || *value < *min_value) {
                    min_value = *value;
                    min_volume = volume;
                }
                if (!max_value || *value > *max_value) {
                    max_value = *value;
                    max_volume = volume;
                }
            };
        track(row.fog_mec_ratio, metrics.min_fog_mec_ratio, metrics.min_fog_mec_ratio_volume_mb,
              metrics.max_fog_mec_ratio, metrics.max_fog_mec_ratio_volume_mb);
        track(row.hybrid_reduction_percent, metrics.min_hybrid_reduction_percent,
              metrics.min_hybrid_reduction_volume_mb, metrics.max_hybrid_reduction_percent,
              metrics.max_hybrid_reduction_volume_mb);
        metrics.rows.push_back(std::move(row));
    }
    return metrics;
}

std::string to_csv(const std::vector<PointResult>& points) {
    std::string out(kCsvHeader);
    out.push_back('\n');
    for (const PointResult& point : sorted_points(points)) {
        const std::array<double, 3> shares = share_columns(point);
        char row[4096];
        std::snprintf(row, sizeof(row), "%s,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n",
                      std::string(to_string(point.model)).c_str(), point.volume_mb,
                      point.alpha_used, point.transmission_s, point.processing_s, point.total_s,
                      shares[0], shares[1], shares[2]);
        out += row;
    }
    return out;
}

std::string to_json_report(const std::vector<PointResult>& points) {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    nlohmann::json array = nlohmann::json::array();
    for (const PointResult& point : sorted_points(points)) {
        const std::array<double, 3> shares = share_columns(point);
        array.push_back(nlohmann::json{{"model", std::string(to_string(point.model))},
                                       {"volume_mb", point.volume_mb},
                                       {"alpha", point.alpha_used},
                                       {"transmission_s", point.transmission_s},
                                       {"processing_s", point.processing_s},
                                       {"total_s", point.total_s},
                                       {"v_tier1_mb", shares[0]},
                                       {"v_tier2_mb", shares[1]},
                                       {"v_cloud_mb", shares[2]}});
    }
    doc["points"] = std::move(array);
    doc["metrics"] = metrics_object(compare(points));
    return doc.dump(2) + "\n";
}

std::string to_json(const ComparisonMetrics& metrics) {
    nlohmann::json doc = metrics_object(metrics);
    doc["schema_version"] = 1;
    return doc.dump(2) + "\n";
}

std::vector<PointResult> read_results(const std::string& path) {
    const std::string content = read_text_file(path);
    const std::size_t first = content.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        throw IoError("empty results file: " + path);
    }
    std::vector<PointResult> points = content[first] == '{'
                                          ? read_json_results(content, path)
                                          : read_csv_results(content, path);
    assign_repetitions(points);
    return points;
}

}  // namespace edgesim
