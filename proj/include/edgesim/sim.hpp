#pragma once

#include "edgesim/offload.hpp"
#include "edgesim/scenario.hpp"
#include "edgesim/units.hpp"

#include <cstddef>
#include <cstdint>
#include <queue>
#include <string>
#include <vector>

namespace edgesim {

/// Agreement required between the event-driven run and the closed-form
/// model, relative to the larger of 1 and the closed-form value.
inline constexpr double kClosedFormRelTol = 1e-9;

/// Agreement required between the measured clock span and the sum of
/// the per-message delays. Both are sums of the same terms, so this
/// only absorbs floating-point reassociation.
inline constexpr double kSpanRelTol = 1e-12;

inline constexpr std::size_t kNoTier = static_cast<std::size_t>(-1);

enum class AgentRole {
    UserEquipment,  // issues one request per round, receives the reply
    Aggregator,     // access-network node the UEs talk to (BS / gNB / CU-UP)
    Relay,          // control-plane hand-off node (CU-CP); forwards at zero cost
    TierServer,     // compute tier endpoint, including the cloud
};

struct Agent {
    std::string name;
    AgentRole role = AgentRole::TierServer;
    std::size_t tier = kNoTier;  // scenario tier index for TierServer agents
};

/// Undirected link. A transfer of p megabytes takes
/// hop_factor * p / speed seconds in each direction; the access link
/// additionally applies the motion factor per the scenario's alpha
/// semantics. hop_factor is 1 for plain links, ln(backhaul hops) for
/// the cloud link, and 0 for the aggregator-to-relay hand-off.
struct SimEdge {
    std::size_t endpoint_a = 0;
    std::size_t endpoint_b = 0;
    double speed_mb_s = 1.0;
    double hop_factor = 1.0;
    bool uses_alpha = false;
};

/// Star-of-stars message graph for one scenario. Every UE connects to
/// the aggregator; each tier server is reached from the aggregator via
/// tier_paths[tier] (one edge for directly attached tiers, two when the
/// route passes through the relay).
struct Topology {
    std::vector<Agent> agents;
    std::vector<SimEdge> edges;
    std::vector<std::size_t> ue_agents;
    std::size_t aggregator = 0;
    std::vector<std::size_t> access_edges;              // parallel to ue_agents
    std::vector<std::size_t> tier_agents;               // parallel to params.tiers
    std::vector<std::vector<std::size_t>> tier_paths;   // edge ids, aggregator side first
};

/// Builds the message graph for a scenario. Fog and MEC scenarios get a
/// single aggregation node with every tier attached to it; the hybrid
/// scenario attaches the first tier to the user-plane node and routes
/// the remaining tiers through the zero-cost control-plane relay.
Topology build_topology(const ScenarioParams& params);

enum class MessageKind {
    Request,      // data travelling away from the UE
    Reply,        // processed result travelling back
    ComputeDone,  // tier server's self-notification that work finished
};

struct SimMessage {
    MessageKind kind = MessageKind::Request;
    DataVolume payload;
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t tier = kNoTier;  // scenario tier this share belongs to
    std::size_t ue = 0;          // round owner
    std::size_t hop = 0;         // position along tier_paths[tier]
    double sent_at = 0.0;
    double arrives_at = 0.0;
};

/// Time-ordered event queue. Ties are broken by insertion order, so a
/// run is a pure function of its inputs.
class SimClock {
public:
    struct Event {
        double time = 0.0;
        std::uint64_t seq = 0;
        SimMessage msg;
    };

    void schedule(SimMessage msg) {
        queue_.push(Event{msg.arrives_at, next_seq_++, std::move(msg)});
    }

    bool empty() const { return queue_.empty(); }

    Event pop() {
        Event event = queue_.top();
        queue_.pop();
        return event;
    }

private:
    struct After {
        bool operator()(const Event& a, const Event& b) const {
            if (a.time != b.time) {
                return a.time > b.time;
            }
            return a.seq > b.seq;
        }
    };

    std::priority_queue<Event, std::vector<Event>, After> queue_;
    std::uint64_t next_seq_ = 0;
};

/// One simulated (model, volume, alpha) evaluation. allocation holds
/// the volume routed to each tier summed across UEs, so its entries
/// add up to volume_mb. total_s == transmission_s + processing_s.
struct PointResult {
    ModelKind model = ModelKind::Fog;
    double volume_mb = 0.0;
    double alpha_used = 1.0;
    double transmission_s = 0.0;
    double processing_s = 0.0;
    double total_s = 0.0;
    TierAllocation allocation;
    int repetition = 0;
    std::size_t sim_events = 0;  // events processed by the engine
};

/// Runs the event-driven pipeline for one request volume: each UE in
/// turn uploads its share to the aggregator, the aggregator services
/// the tiers in fill order (send share, wait for processing, receive
/// the result), and the combined result returns to the UE.
///
/// The run cross-checks itself against the closed-form model and
/// throws ConsistencyError if transmission, processing, or total
/// disagree beyond kClosedFormRelTol, or if the measured clock span
/// drifts from the summed delays beyond kSpanRelTol.
PointResult run_scenario(DataVolume volume, const ScenarioParams& params,
                         const MotionFactor& alpha, const PolicyConfig& policy);

/// Same, with the capacity-threshold default policy.
PointResult run_scenario(DataVolume volume, const ScenarioParams& params,
                         const MotionFactor& alpha);

}  // namespace edgesim
