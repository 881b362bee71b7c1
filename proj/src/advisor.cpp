#include "edgesim/advisor.hpp"

#include "edgesim/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace edgesim {

namespace {

std::string lowercase(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

constexpr Relation L = Relation::Less;
constexpr Relation M = Relation::Mostly;
constexpr Relation H = Relation::Highly;

constexpr FeatureLevel Lo = FeatureLevel::Low;
constexpr FeatureLevel Me = FeatureLevel::Medium;
constexpr FeatureLevel Hi = FeatureLevel::High;

const std::optional<Composition> published_composition(std::string_view name) {
    const std::string key = lowercase(name);
    if (key == "autonomous vehicles") {
        return Composition{{{"Fog Computing"}, {"MEC"}, {"D2D"}}};
    }
    if (key == "smart factory") {
        return Composition{{{"Fog Computing"}, {"MEC"}, {"CLC"}}};
    }
    if (key == "ar/vr") {
        return Composition{{{"MEC", "Cloudlets"}, {"Fog Computing"}}};
    }
    if (key == "3d gaming") {
        return Composition{{{"MEC"}, {"Cloudlets"}}};
    }
    if (key == "remote surgery") {
        return Composition{{{"Fog Computing", "Cloudlets"}, {"MEC"}}};
    }
    return std::nullopt;
}

UseCaseProfile make_profile(std::string name,
                            std::array<RequirementLevel, kRequirementCount> levels,
                            bool heterogeneous_protocols = false) {
    UseCaseProfile profile;
    profile.name = std::move(name);
    profile.levels = levels;
    profile.heterogeneous_protocols = heterogeneous_protocols;
    return profile;
}

}  // namespace

std::string_view to_key(Requirement requirement) {
    switch (requirement) {
        case Requirement::Bandwidth: return "bandwidth";
        case Requirement::UltraLowLatency: return "ultra_low_latency";
        case Requirement::Extensibility: return "extensibility";
        case Requirement::ContextAwareness: return "context_awareness";
        case Requirement::PowerConsumption: return "power_consumption";
        case Requirement::Scalability: return "scalability";
        case Requirement::Privacy: return "privacy_and_security";
    }
    return "?";
}

std::string_view display_name(EdgeModel model) {
    switch (model) {
        case EdgeModel::Fog: return "Fog Computing";
        case EdgeModel::Mec: return "MEC";
        case EdgeModel::Cloudlets: return "Cloudlets";
    }
    return "?";
}

std::string_view to_string(RequirementLevel level) {
    switch (level) {
        case RequirementLevel::Incidental: return "incidental";
        case RequirementLevel::Important: return "important";
        case RequirementLevel::Crucial: return "crucial";
    }
    return "?";
}

std::optional<RequirementLevel> parse_requirement_level(std::string_view name) {
    if (name == "incidental") return RequirementLevel::Incidental;
    if (name == "important") return RequirementLevel::Important;
    if (name == "crucial") return RequirementLevel::Crucial;
    return std::nullopt;
}

FeatureLinkMatrix FeatureLinkMatrix::published() {
    // Rows in Requirement order; columns Coverage, ComputationalCapability,
    // RealTimeInteraction, Proximity.
    return FeatureLinkMatrix{{{
        {H, M, H, H},  // bandwidth
        {H, M, H, H},  // ultra-low latency
        {M, H, M, H},  // extensibility
        {M, M, H, L},  // context awareness
        {H, H, M, M},  // power consumption
        {H, M, L, M},  // scalability
        {M, L, M, H},  // privacy and security
    }}};
}

FeatureLinkMatrix FeatureLinkMatrix::uniform() {
    FeatureLinkMatrix matrix;
    for (auto& row : matrix.cells) {
        row.fill(Relation::Less);
    }
    return matrix;
}

FeatureLevel ModelFeatureTable::deployment_value(EdgeModel model, DeploymentFeature feature) const {
    switch (feature) {
        case DeploymentFeature::Coverage:
            return at(model, ModelFeature::Coverage);
        case DeploymentFeature::ComputationalCapability:
            return at(model, ModelFeature::ComputationPower);
        case DeploymentFeature::RealTimeInteraction:
            return at(model, ModelFeature::RealTimeInteraction);
        case DeploymentFeature::Proximity:
            return at(model, ModelFeature::ServerDensity);
    }
    throw std::invalid_argument("unknown deployment feature");
}

ModelFeatureTable ModelFeatureTable::published() {
    // Rows Fog, MEC, Cloudlets; columns in ModelFeature order:
    // RealTimeInteraction, ComputationPower, PowerConsumption, Coverage,
    // ServerDensity, ContextAwareness.
    return ModelFeatureTable{{{
        {Hi, Me, Lo, Lo, Me, Me},  // fog
        {Me, Hi, Hi, Hi, Lo, Hi},  // mec
        {Me, Hi, Me, Lo, Hi, Lo},  // cloudlets
    }}};
}

ModelFeatureTable ModelFeatureTable::uniform() {
    ModelFeatureTable table;
    for (auto& row : table.cells) {
        row.fill(FeatureLevel::Low);
    }
    return table;
}

int score(const UseCaseProfile& profile, EdgeModel model, const FeatureLinkMatrix& links,
          const ModelFeatureTable& features) {
    int total = 0;
    for (std::size_t r = 0; r < kRequirementCount; ++r) {
        const auto requirement = static_cast<Requirement>(r);
        int affinity = 0;
        for (std::size_t f = 0; f < kDeploymentFeatureCount; ++f) {
            const auto feature = static_cast<DeploymentFeature>(f);
            affinity += static_cast<int>(links.at(requirement, feature)) *
                        static_cast<int>(features.deployment_value(model, feature));
        }
        total += static_cast<int>(profile.level(requirement)) * affinity;
    }
    return total;
}

int score(const UseCaseProfile& profile, EdgeModel model) {
    return score(profile, model, FeatureLinkMatrix::published(), ModelFeatureTable::published());
}

std::string Composition::to_string() const {
    std::string out;
    for (std::size_t s = 0; s < slots.size(); ++s) {
        if (s > 0) out += " + ";
        for (std::size_t a = 0; a < slots[s].size(); ++a) {
            if (a > 0) out += "/";
            out += slots[s][a];
        }
    }
    return out;
}

std::vector<std::string> Composition::components() const {
    std::vector<std::string> out;
    for (const auto& slot : slots) {
        out.insert(out.end(), slot.begin(), slot.end());
    }
    return out;
}

const std::vector<UseCaseProfile>& named_profiles() {
    using RL = RequirementLevel;
    // Level order: bandwidth, ultra-low latency, extensibility, context
    // awareness, power consumption, scalability, privacy and security.
    static const std::vector<UseCaseProfile> profiles = {
        make_profile("Autonomous Vehicles",
                     {RL::Important, RL::Crucial, RL::Important, RL::Crucial, RL::Crucial,
                      RL::Important, RL::Crucial}),
        make_profile("Smart Factory",
                     {RL::Important, RL::Crucial, RL::Incidental, RL::Important, RL::Crucial,
                      RL::Important, RL::Crucial},
                     true),
        make_profile("AR/VR",
                     {RL::Crucial, RL::Crucial, RL::Important, RL::Important, RL::Crucial,
                      RL::Important, RL::Crucial}),
        make_profile("3D Gaming",
                     {RL::Crucial, RL::Crucial, RL::Important, RL::Important, RL::Crucial,
                      RL::Important, RL::Important}),
        make_profile("Remote Surgery",
                     {RL::Important, RL::Crucial, RL::Incidental, RL::Incidental, RL::Crucial,
                      RL::Important, RL::Crucial}),
    };
    return profiles;
}

std::optional<UseCaseProfile> find_named_profile(std::string_view name) {
    const std::string key = lowercase(name);
    for (const UseCaseProfile& profile : named_profiles()) {
        if (lowercase(profile.name) == key) {
            return profile;
        }
    }
    return std::nullopt;
}

Recommendation recommend(const UseCaseProfile& profile) {
    Recommendation rec;
    rec.use_case = profile.name;
    for (EdgeModel model : {EdgeModel::Fog, EdgeModel::Mec, EdgeModel::Cloudlets}) {
        rec.scores.emplace(model, score(profile, model));
    }

    if (auto published = published_composition(profile.name)) {
        rec.composition = std::move(*published);
        rec.from_lookup = true;
        return rec;
    }

    std::array<EdgeModel, kEdgeModelCount> order{EdgeModel::Fog, EdgeModel::Mec,
                                                 EdgeModel::Cloudlets};
    std::sort(order.begin(), order.end(), [&rec](EdgeModel a, EdgeModel b) {
        const int sa = rec.scores.at(a);
        const int sb = rec.scores.at(b);
        if (sa != sb) return sa > sb;
        return display_name(a) < display_name(b);
    });
    rec.composition.slots.push_back({std::string(display_name(order[0]))});
    rec.composition.slots.push_back({std::string(display_name(order[1]))});
    if (profile.level(Requirement::ContextAwareness) == RequirementLevel::Crucial) {
        rec.composition.slots.push_back({"D2D"});
    }
    if (profile.heterogeneous_protocols) {
        rec.composition.slots.push_back({"CLC"});
    }
    return rec;
}

UseCaseProfile profile_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("profile", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("profile", "must be a JSON object");
    }

    UseCaseProfile profile;
    bool saw_name = false;
    for (const auto& [key, value] : doc.items()) {
        const std::string path = "profile." + key;
        if (key == "name") {
            if (!value.is_string()) {
                throw ConfigError(path, "must be a string");
            }
            profile.name = value.get<std::string>();
            saw_name = true;
            continue;
        }
        if (key == "heterogeneous_protocols") {
            if (!value.is_boolean()) {
                throw ConfigError(path, "must be a boolean");
            }
            profile.heterogeneous_protocols = value.get<bool>();
            continue;
        }
        bool matched = false;
        for (std::size_t r = 0; r < kRequirementCount; ++r) {
            const auto requirement = static_cast<Requirement>(r);
            if (key != to_key(requirement)) continue;
            if (!value.is_string()) {
                throw ConfigError(path, "must be a string level");
            }
            const auto level = parse_requirement_level(value.get<std::string>());
            if (!level) {
                throw ConfigError(path, "must be incidental, important, or crucial");
            }
            profile.set_level(requirement, *level);
            matched = true;
            break;
        }
        if (!matched) {
            throw ConfigError(path, "unknown field");
        }
    }
    if (!saw_name) {
        throw ConfigError("profile.name", "is required");
    }
    return profile;
}

}  // namespace edgesim
