#include "edgesim/config.hpp"

#include "edgesim/errors.hpp"
#include "edgesim/io.hpp"

#include "json.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <set>
#include <stdexcept>
#include <string_view>
#include <utility>

namespace edgesim {

namespace {

constexpr std::array<std::string_view, 5> kTierVocabulary{"fog", "mec", "u-mec", "c-mec",
                                                          "cloud"};

bool known_tier(std::string_view name) {
    for (std::string_view candidate : kTierVocabulary) {
        if (candidate == name) return true;
    }
    return false;
}

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw ConfigError(path, message);
}

double number_field(const nlohmann::json& value, const std::string& path) {
    if (!value.is_number()) fail(path, "must be a number");
    return value.get<double>();
}

double positive_number(const nlohmann::json& value, const std::string& path) {
    const double v = number_field(value, path);
    if (!(std::isfinite(v) && v > 0.0)) fail(path, "must be positive");
    return v;
}

int integer_at_least(const nlohmann::json& value, int minimum, const std::string& path) {
    if (!value.is_number_integer()) fail(path, "must be an integer");
    const auto v = value.get<std::int64_t>();
    if (v < minimum) fail(path, "must be at least " + std::to_string(minimum));
    if (v > std::numeric_limits<int>::max()) fail(path, "is too large");
    return static_cast<int>(v);
}

ScenarioOverrides parse_scenario(const nlohmann::json& node) {
    if (!node.is_object()) fail("scenario", "must be an object");
    ScenarioOverrides out;
    for (const auto& [key, value] : node.items()) {
        const std::string path = "scenario." + key;
        if (key == "access_speed_mb_s") {
            out.access_speed_mb_s = positive_number(value, path);
        } else if (key == "alpha_range") {
            if (!value.is_array() || value.size() != 2 || !value[0].is_number() ||
                !value[1].is_number()) {
                fail(path, "must be a [low, high] number pair");
            }
            const double low = value[0].get<double>();
            const double high = value[1].get<double>();
            if (!(std::isfinite(low) && std::isfinite(high) && 0.0 < low && low <= high &&
                  high <= 1.0)) {
                fail(path, "must satisfy 0 < low <= high <= 1");
            }
            out.alpha_range = std::make_pair(low, high);
        } else if (key == "backhaul_hops") {
            out.backhaul_hops = integer_at_least(value, 1, path);
        } else if (key == "cycle_duration_s") {
            out.cycle_duration_s = positive_number(value, path);
        } else if (key == "ue_count") {
            out.ue_count = integer_at_least(value, 1, path);
        } else if (key == "alpha_semantics") {
            if (!value.is_string()) fail(path, "must be a string");
            const auto semantics = parse_alpha_semantics(value.get<std::string>());
            if (!semantics) fail(path, "must be effective_speed or printed_formula");
            out.alpha_semantics = *semantics;
        } else if (key == "tiers") {
            if (!value.is_object()) fail(path, "must be an object keyed by tier name");
            for (const auto& [tier_name, tier_node] : value.items()) {
                const std::string tier_path = path + "." + tier_name;
                if (!known_tier(tier_name)) fail(tier_path, "unknown tier");
                if (!tier_node.is_object()) fail(tier_path, "must be an object");
                TierOverride tier;
                for (const auto& [field, field_value] : tier_node.items()) {
                    const std::string field_path = tier_path + "." + field;
                    if (field == "link_speed_mb_s") {
                        tier.link_speed_mb_s = positive_number(field_value, field_path);
                    } else if (field == "capacity_mb_cycle") {
                        tier.capacity_mb_cycle = positive_number(field_value, field_path);
                    } else {
                        fail(field_path, "unknown field");
                    }
                }
                out.tiers.emplace(tier_name, tier);
            }
        } else {
            fail(path, "unknown field");
        }
    }
    return out;
}

PolicyOverrides parse_policy(const nlohmann::json& node) {
    if (!node.is_object()) fail("policy", "must be an object");
    PolicyOverrides out;
    for (const auto& [key, value] : node.items()) {
        const std::string path = "policy." + key;
        if (key == "fill_order") {
            if (!value.is_array() || value.empty()) {
                fail(path, "must be a non-empty array of tier names");
            }
            std::vector<std::string> order;
            for (const auto& item : value) {
                if (!item.is_string()) fail(path, "must contain only tier names");
                const std::string name = item.get<std::string>();
                if (!known_tier(name)) fail(path + "." + name, "unknown tier");
                order.push_back(name);
            }
            out.fill_order = std::move(order);
        } else if (key == "thresholds") {
            if (!value.is_object()) fail(path, "must be an object keyed by tier name");
            for (const auto& [tier_name, mb] : value.items()) {
                const std::string tier_path = path + "." + tier_name;
                if (!known_tier(tier_name)) fail(tier_path, "unknown tier");
                if (tier_name == "cloud") {
                    fail(tier_path, "the cloud takes the remainder and has no threshold");
                }
                out.thresholds.emplace(tier_name, positive_number(mb, tier_path));
            }
        } else {
            fail(path, "unknown field");
        }
    }
    return out;
}

SweepOverrides parse_sweep(const nlohmann::json& node) {
    if (!node.is_object()) fail("sweep", "must be an object");
    SweepOverrides out;
    for (const auto& [key, value] : node.items()) {
        const std::string path = "sweep." + key;
        if (key == "start_mb") {
            out.start_mb = positive_number(value, path);
        } else if (key == "end_mb") {
            out.end_mb = positive_number(value, path);
        } else if (key == "step_mb") {
            out.step_mb = positive_number(value, path);
        } else if (key == "models") {
            if (!value.is_array() || value.empty()) {
                fail(path, "must be a non-empty array of model names");
            }
            std::vector<ModelKind> models;
            std::set<int> seen;
            for (const auto& item : value) {
                if (!item.is_string()) fail(path, "must contain only model names");
                const auto model = parse_model(item.get<std::string>());
                if (!model) {
                    fail(path + "." + item.get<std::string>(),
                         "must be fog, mec, or hybrid");
                }
                if (!seen.insert(static_cast<int>(*model)).second) {
                    fail(path, "must not repeat a model");
                }
                models.push_back(*model);
            }
            out.models = std::move(models);
        } else if (key == "seed") {
            if (!value.is_number_unsigned()) fail(path, "must be a non-negative integer");
            out.seed = value.get<std::uint64_t>();
        } else if (key == "alpha_mode") {
            if (!value.is_string()) fail(path, "must be a string");
            const std::string mode = value.get<std::string>();
            if (mode == "sampled") {
                out.alpha_mode = AlphaMode::Sampled;
            } else if (mode == "midpoint") {
                out.alpha_mode = AlphaMode::Midpoint;
            } else if (mode == "fixed") {
                out.alpha_mode = AlphaMode::Fixed;
            } else {
                fail(path, "must be sampled, midpoint, or fixed");
            }
        } else if (key == "alpha_fixed") {
            const double v = number_field(value, path);
            if (!(std::isfinite(v) && 0.0 < v && v <= 1.0)) fail(path, "must lie in (0, 1]");
            out.alpha_fixed = v;
        } else if (key == "repetitions") {
            out.repetitions = integer_at_least(value, 1, path);
        } else {
            fail(path, "unknown field");
        }
    }
    return out;
}

std::string fmt_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", value);
    return buf;
}

const char* provenance(bool overridden, bool calibration) {
    if (overridden) return "override";
    return calibration ? "calibration" : "default";
}

std::string bracketed(const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += ", ";
        out += items[i];
    }
    out += "]";
    return out;
}

}  // namespace

ScenarioParams ConfigDocument::scenario_params(ModelKind model) const {
    ScenarioParams params = default_scenario(model);
    if (scenario.access_speed_mb_s) params.access_speed = LinkSpeed(*scenario.access_speed_mb_s);
    if (scenario.alpha_range) {
        params.alpha_range = AlphaRange(scenario.alpha_range->first, scenario.alpha_range->second);
    }
    if (scenario.backhaul_hops) params.backhaul_hops = HopCount(*scenario.backhaul_hops);
    if (scenario.cycle_duration_s) params.cycle_duration_s = *scenario.cycle_duration_s;
    if (scenario.ue_count) params.ue_count = *scenario.ue_count;
    if (scenario.alpha_semantics) params.alpha_semantics = *scenario.alpha_semantics;
    for (const auto& [name, tier] : scenario.tiers) {
        const auto index = params.tier_index(name);
        if (!index) continue;  // names a tier of a different model
        TierSpec& spec = params.tiers[*index];
        if (tier.link_speed_mb_s) spec.link_speed = LinkSpeed(*tier.link_speed_mb_s);
        if (tier.capacity_mb_cycle) spec.capacity = ComputeCapacity(*tier.capacity_mb_cycle);
    }
    params.validate();
    return params;
}

PolicyConfig ConfigDocument::policy_config(ModelKind model) const {
    const ScenarioParams params = scenario_params(model);
    PolicyConfig out = PolicyConfig::from_capacities(params);
    if (policy.fill_order) out.fill_order = *policy.fill_order;
    for (const auto& [name, mb] : policy.thresholds) {
        if (!params.tier_index(name)) continue;
        out.thresholds.insert_or_assign(name, DataVolume(mb));
    }
    try {
        out.validate(params);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("policy", e.what());
    }
    return out;
}

SweepConfig ConfigDocument::sweep_config() const {
    SweepConfig out;
    if (sweep.start_mb) out.start_mb = *sweep.start_mb;
    if (sweep.end_mb) out.end_mb = *sweep.end_mb;
    if (sweep.step_mb) out.step_mb = *sweep.step_mb;
    if (sweep.models) out.models = *sweep.models;
    if (sweep.seed) out.seed = *sweep.seed;
    if (sweep.alpha_mode) out.alpha_mode = *sweep.alpha_mode;
    if (sweep.alpha_fixed) out.alpha_fixed = *sweep.alpha_fixed;
    if (sweep.repetitions) out.repetitions = *sweep.repetitions;
    out.validate();
    return out;
}

void ConfigDocument::validate() const {
    const SweepConfig config = sweep_config();
    for (ModelKind model : config.models) {
        policy_config(model);  // materializes the scenario as well
    }
}

std::vector<std::string> ConfigDocument::explain() const {
    std::vector<std::string> lines;
    const SweepConfig config = sweep_config();

    const auto emit = [&lines](const std::string& field, const std::string& value,
                               const char* origin) {
        lines.push_back(field + " = " + value + " [" + origin + "]");
    };

    for (ModelKind model : config.models) {
        const std::string prefix{to_string(model)};
        const ScenarioParams params = scenario_params(model);
        const PolicyConfig pol = policy_config(model);

        emit(prefix + ".access_speed_mb_s",
             fmt_number(params.access_speed.megabytes_per_second()),
             provenance(scenario.access_speed_mb_s.has_value(), true));
        emit(prefix + ".alpha_range",
             "[" + fmt_number(params.alpha_range.low()) + ", " +
                 fmt_number(params.alpha_range.high()) + "]",
             provenance(scenario.alpha_range.has_value(), true));
        emit(prefix + ".backhaul_hops", std::to_string(params.backhaul_hops.hops()),
             provenance(scenario.backhaul_hops.has_value(), true));
        emit(prefix + ".cycle_duration_s", fmt_number(params.cycle_duration_s),
             provenance(scenario.cycle_duration_s.has_value(), false));
        emit(prefix + ".ue_count", std::to_string(params.ue_count),
             provenance(scenario.ue_count.has_value(), false));
        emit(prefix + ".alpha_semantics", std::string(to_string(params.alpha_semantics)),
             provenance(scenario.alpha_semantics.has_value(), false));

        for (const TierSpec& tier : params.tiers) {
            const auto it = scenario.tiers.find(tier.name);
            const bool link_overridden = it != scenario.tiers.end() && it->second.link_speed_mb_s;
            const bool cap_overridden = it != scenario.tiers.end() && it->second.capacity_mb_cycle;
            emit(prefix + ".tiers." + tier.name + ".link_speed_mb_s",
                 fmt_number(tier.link_speed.megabytes_per_second()),
                 provenance(link_overridden, true));
            emit(prefix + ".tiers." + tier.name + ".capacity_mb_cycle",
                 fmt_number(tier.capacity.megabytes_per_cycle()),
                 provenance(cap_overridden, !tier.is_cloud));
        }

        emit(prefix + ".policy.fill_order", bracketed(pol.fill_order),
             provenance(policy.fill_order.has_value(), false));
        for (const auto& [name, threshold] : pol.thresholds) {
            emit(prefix + ".policy.thresholds." + name, fmt_number(threshold.megabytes()),
                 provenance(policy.thresholds.count(name) > 0, false));
        }
    }

    emit("sweep.start_mb", fmt_number(config.start_mb),
         provenance(sweep.start_mb.has_value(), true));
    emit("sweep.end_mb", fmt_number(config.end_mb), provenance(sweep.end_mb.has_value(), true));
    emit("sweep.step_mb", fmt_number(config.step_mb),
         provenance(sweep.step_mb.has_value(), true));
    std::vector<std::string> model_names;
    for (ModelKind model : config.models) {
        model_names.emplace_back(to_string(model));
    }
    emit("sweep.models", bracketed(model_names), provenance(sweep.models.has_value(), true));
    emit("sweep.seed", std::to_string(config.seed), provenance(sweep.seed.has_value(), false));
    emit("sweep.alpha_mode", std::string(to_string(config.alpha_mode)),
         provenance(sweep.alpha_mode.has_value(), true));
    if (config.alpha_mode == AlphaMode::Fixed) {
        emit("sweep.alpha_fixed", fmt_number(config.alpha_fixed),
             provenance(sweep.alpha_fixed.has_value(), false));
    }
    emit("sweep.repetitions", std::to_string(config.repetitions),
         provenance(sweep.repetitions.has_value(), false));
    return lines;
}

ConfigDocument parse_config(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail("config", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("config", "must be a JSON object");

    ConfigDocument out;
    for (const auto& [key, value] : doc.items()) {
        if (key == "schema_version") {
            if (!value.is_number_integer()) fail("schema_version", "must be an integer");
            if (value.get<std::int64_t>() != 1) {
                fail("schema_version", "unsupported version (this tool reads version 1)");
            }
            out.schema_version = 1;
        } else if (key == "scenario") {
            out.scenario = parse_scenario(value);
        } else if (key == "policy") {
            out.policy = parse_policy(value);
        } else if (key == "sweep") {
            out.sweep = parse_sweep(value);
        } else {
            fail(key, "unknown field");
        }
    }
    return out;
}

ConfigDocument load_config_file(const std::string& path) {
    return parse_config(read_text_file(path));
}

std::string serialize(const ConfigDocument& doc) {
    nlohmann::json out;
    out["schema_version"] = doc.schema_version;

    nlohmann::json scenario = nlohmann::json::object();
    if (doc.scenario.access_speed_mb_s) {
        scenario["access_speed_mb_s"] = *doc.scenario.access_speed_mb_s;
    }
    if (doc.scenario.alpha_range) {
        scenario["alpha_range"] = {doc.scenario.alpha_range->first,
                                   doc.scenario.alpha_range->second};
    }
    if (doc.scenario.backhaul_hops) scenario["backhaul_hops"] = *doc.scenario.backhaul_hops;
    if (doc.scenario.cycle_duration_s) {
        scenario["cycle_duration_s"] = *doc.scenario.cycle_duration_s;
    }
    if (doc.scenario.ue_count) scenario["ue_count"] = *doc.scenario.ue_count;
    if (doc.scenario.alpha_semantics) {
        scenario["alpha_semantics"] = std::string(to_string(*doc.scenario.alpha_semantics));
    }
    if (!doc.scenario.tiers.empty()) {
        nlohmann::json tiers = nlohmann::json::object();
        for (const auto& [name, tier] : doc.scenario.tiers) {
            nlohmann::json node = nlohmann::json::object();
            if (tier.link_speed_mb_s) node["link_speed_mb_s"] = *tier.link_speed_mb_s;
            if (tier.capacity_mb_cycle) node["capacity_mb_cycle"] = *tier.capacity_mb_cycle;
            tiers[name] = std::move(node);
        }
        scenario["tiers"] = std::move(tiers);
    }
    if (!scenario.empty()) out["scenario"] = std::move(scenario);

    nlohmann::json policy_node = nlohmann::json::object();
    if (doc.policy.fill_order) policy_node["fill_order"] = *doc.policy.fill_order;
    if (!doc.policy.thresholds.empty()) {
        nlohmann::json thresholds = nlohmann::json::object();
        for (const auto& [name, mb] : doc.policy.thresholds) {
            thresholds[name] = mb;
        }
        policy_node["thresholds"] = std::move(thresholds);
    }
    if (!policy_node.empty()) out["policy"] = std::move(policy_node);

    nlohmann::json sweep_node = nlohmann::json::object();
    if (doc.sweep.start_mb) sweep_node["start_mb"] = *doc.sweep.start_mb;
    if (doc.sweep.end_mb) sweep_node["end_mb"] = *doc.sweep.end_mb;
    if (doc.sweep.step_mb) sweep_node["step_mb"] = *doc.sweep.step_mb;
    if (doc.sweep.models) {
        nlohmann::json models = nlohmann::json::array();
        for (ModelKind model : *doc.sweep.models) {
            models.push_back(std::string(to_string(model)));
        }
        sweep_node["models"] = std::move(models);
    }
    if (doc.sweep.seed) sweep_node["seed"] = *doc.sweep.seed;
    if (doc.sweep.alpha_mode) {
        sweep_node["alpha_mode"] = std::string(to_string(*doc.sweep.alpha_mode));
    }
    if (doc.sweep.alpha_fixed) sweep_node["alpha_fixed"] = *doc.sweep.alpha_fixed;
    if (doc.sweep.repetitions) sweep_node["repetitions"] = *doc.sweep.repetitions;
    if (!sweep_node.empty()) out["sweep"] = std::move(sweep_node);

    return out.dump(2) + "\n";
}

std::optional<std::uint64_t> seed_from_env() {
    const char* raw = std::getenv("EDGESIM_SEED");
    if (raw == nullptr) return std::nullopt;
    const std::string_view text(raw);
    std::uint64_t seed = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, seed);
    if (text.empty() || ec != std::errc() || ptr != end) {
        throw ConfigError("EDGESIM_SEED", "must be a non-negative integer");
    }
    return seed;
}

}  // namespace edgesim
