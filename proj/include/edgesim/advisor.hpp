#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace edgesim {

/// How strongly a use case needs a requirement. The numeric values are
/// the scoring weights.
enum class RequirementLevel { Incidental = 1, Important = 2, Crucial = 3 };

/// How strongly a requirement depends on a deployment feature.
enum class Relation { Less = 1, Mostly = 2, Highly = 3 };

/// How well a deployment model provides a feature.
enum class FeatureLevel { Low = 1, Medium = 2, High = 3 };

enum class Requirement {
    Bandwidth,
    UltraLowLatency,
    Extensibility,
    ContextAwareness,
    PowerConsumption,
    Scalability,
    Privacy,
};
inline constexpr std::size_t kRequirementCount = 7;

enum class DeploymentFeature {
    Coverage,
    ComputationalCapability,
    RealTimeInteraction,
    Proximity,
};
inline constexpr std::size_t kDeploymentFeatureCount = 4;

enum class ModelFeature {
    RealTimeInteraction,
    ComputationPower,
    PowerConsumption,
    Coverage,
    ServerDensity,
    ContextAwareness,
};
inline constexpr std::size_t kModelFeatureCount = 6;

enum class EdgeModel { Fog, Mec, Cloudlets };
inline constexpr std::size_t kEdgeModelCount = 3;

std::string_view to_key(Requirement requirement);          // snake_case id
std::string_view display_name(EdgeModel model);            // "Fog Computing", ...
std::string_view to_string(RequirementLevel level);
std::optional<RequirementLevel> parse_requirement_level(std::string_view name);

/// A use case described by the strength of its seven requirements.
/// heterogeneous_protocols marks deployments that must bridge several
/// link-layer protocols through gateways.
struct UseCaseProfile {
    std::string name;
    std::array<RequirementLevel, kRequirementCount> levels{
        RequirementLevel::Incidental, RequirementLevel::Incidental, RequirementLevel::Incidental,
        RequirementLevel::Incidental, RequirementLevel::Incidental, RequirementLevel::Incidental,
        RequirementLevel::Incidental};
    bool heterogeneous_protocols = false;

    RequirementLevel level(Requirement requirement) const {
        return levels[static_cast<std::size_t>(requirement)];
    }
    void set_level(Requirement requirement, RequirementLevel level) {
        levels[static_cast<std::size_t>(requirement)] = level;
    }
};

/// Requirement-to-deployment-feature relation strengths.
struct FeatureLinkMatrix {
    std::array<std::array<Relation, kDeploymentFeatureCount>, kRequirementCount> cells;

    Relation at(Requirement requirement, DeploymentFeature feature) const {
        return cells[static_cast<std::size_t>(requirement)][static_cast<std::size_t>(feature)];
    }

    /// The published relation table.
    static FeatureLinkMatrix published();
    /// Every relation Less; isolates the other scoring inputs in tests.
    static FeatureLinkMatrix uniform();
};

/// Feature levels of the three deployment models.
struct ModelFeatureTable {
    std::array<std::array<FeatureLevel, kModelFeatureCount>, kEdgeModelCount> cells;

    FeatureLevel at(EdgeModel model, ModelFeature feature) const {
        return cells[static_cast<std::size_t>(model)][static_cast<std::size_t>(feature)];
    }

    /// Model feature levels projected onto the deployment features used
    /// by the relation matrix. Proximity is read from server density:
    /// the denser the servers, the closer the nearest one.
    FeatureLevel deployment_value(EdgeModel model, DeploymentFeature feature) const;

    /// The published model comparison.
    static ModelFeatureTable published();
    /// Every level Low; isolates the other scoring inputs in tests.
    static ModelFeatureTable uniform();
};

/// Suitability score: for each requirement, its weight times the sum
/// over the four deployment features of relation x feature level.
/// Larger is better. With both uniform tables every profile scores
/// 7 * 1 * (4 * 1 * 1) = 28 for every model.
int score(const UseCaseProfile& profile, EdgeModel model, const FeatureLinkMatrix& links,
          const ModelFeatureTable& features);

/// Same, with the published tables.
int score(const UseCaseProfile& profile, EdgeModel model);

/// An ordered deployment recipe. Each slot holds interchangeable
/// alternatives; slots combine. Rendered as alternatives joined by "/"
/// and slots joined by " + ", e.g. "Fog Computing/Cloudlets + MEC".
struct Composition {
    std::vector<std::vector<std::string>> slots;

    std::string to_string() const;
    /// All named parts in order, alternatives flattened.
    std::vector<std::string> components() const;
};

struct Recommendation {
    std::string use_case;
    Composition composition;
    std::map<EdgeModel, int> scores;
    bool from_lookup = false;  // published pairing, not derived from scores
};

/// The five published use-case profiles.
const std::vector<UseCaseProfile>& named_profiles();

/// Case-insensitive lookup among the named profiles.
std::optional<UseCaseProfile> find_named_profile(std::string_view name);

/// For a named use case (matched by name, case-insensitive) returns its
/// published pairing. For any other profile the composition is derived:
/// the two best-scoring models (ties broken by name), plus D2D when
/// context awareness is crucial and CLC when the deployment bridges
/// heterogeneous protocols. Scores are always computed and reported.
Recommendation recommend(const UseCaseProfile& profile);

/// Parses a profile from a JSON object with a "name", one key per
/// requirement ("bandwidth", "ultra_low_latency", "extensibility",
/// "context_awareness", "power_consumption", "scalability",
/// "privacy_and_security") valued "incidental" | "important" |
/// "crucial", and an optional "heterogeneous_protocols" flag. Missing
/// requirement keys default to incidental; unknown keys are rejected.
/// Throws ConfigError with the offending field path.
UseCaseProfile profile_from_json(const std::string& text);

}  // namespace edgesim
