#include "edgesim/sim.hpp"

#include "edgesim/errors.hpp"
#include "edgesim/latency.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

namespace edgesim {

namespace {

double edge_delay(const SimEdge& edge, double payload_mb, const MotionFactor& alpha,
                  AlphaSemantics semantics) {
    double transfer;
    if (edge.uses_alpha) {
        transfer = semantics == AlphaSemantics::EffectiveSpeed
                       ? payload_mb / (alpha.alpha() * edge.speed_mb_s)
                       : alpha.alpha() * payload_mb / edge.speed_mb_s;
    } else {
        transfer = payload_mb / edge.speed_mb_s;
    }
    return edge.hop_factor * transfer;
}

void require_close(const char* what, double actual, double expected, double rel_tol) {
    const double scale = std::max(1.0, std::abs(expected));
    if (std::abs(actual - expected) > rel_tol * scale) {
        char buf[192];
        std::snprintf(buf, sizeof(buf), "%s: %.17g vs %.17g differ beyond relative %g", what,
                      actual, expected, rel_tol);
        throw ConsistencyError(buf);
    }
}

/// Serial request-reply pipeline: exactly one message or computation is
/// in flight at any moment, so the elapsed clock time equals the sum of
/// the individual delays and the run reproduces the additive model.
class Engine {
public:
    Engine(const ScenarioParams& params, const MotionFactor& alpha, const TierAllocation& alloc,
           Topology topo)
        : params_(params), alpha_(alpha), alloc_(alloc), topo_(std::move(topo)) {}

    void run() {
        start_round(0);
        while (!clock_.empty()) {
            SimClock::Event event = clock_.pop();
            now_ = event.time;
            ++events_;
            deliver(event.msg);
        }
    }

    double transmission() const { return transmission_; }
    double processing() const { return processing_; }
    double span() const { return end_time_; }
    std::size_t events() const { return events_; }

private:
    void start_round(std::size_t ue) {
        round_ue_ = ue;
        pending_ = 0;
        SimMessage msg;
        msg.kind = MessageKind::Request;
        msg.payload = alloc_.total();
        msg.from = topo_.ue_agents[ue];
        msg.to = topo_.aggregator;
        msg.ue = ue;
        send(std::move(msg), topo_.access_edges[ue]);
    }

    void deliver(const SimMessage& msg) {
        switch (msg.kind) {
            case MessageKind::Request:
                if (topo_.agents[msg.to].role == AgentRole::Aggregator) {
                    dispatch_next();
                } else if (topo_.agents[msg.to].role == AgentRole::TierServer) {
                    begin_compute(msg);
                } else {
                    forward(msg, true);
                }
                break;
            case MessageKind::ComputeDone:
                begin_reply(msg);
                break;
            case MessageKind::Reply:
                if (msg.tier == kNoTier) {
                    finish_round();
                } else if (topo_.agents[msg.to].role == AgentRole::Aggregator) {
                    ++pending_;
                    dispatch_next();
                } else {
                    forward(msg, false);
                }
                break;
        }
    }

    /// Serve the next tier with a non-empty share, or return the
    /// combined result to the UE once every share has come back.
    void dispatch_next() {
        while (pending_ < alloc_.per_tier.size() && alloc_.per_tier[pending_].second.is_zero()) {
            ++pending_;
        }
        if (pending_ == alloc_.per_tier.size()) {
            SimMessage reply;
            reply.kind = MessageKind::Reply;
            reply.payload = alloc_.total();
            reply.from = topo_.aggregator;
            reply.to = topo_.ue_agents[round_ue_];
            reply.ue = round_ue_;
            send(std::move(reply), topo_.access_edges[round_ue_]);
            return;
        }

        const auto& [name, share] = alloc_.per_tier[pending_];
        const std::size_t tier = *params_.tier_index(name);
        const std::size_t first_edge = topo_.tier_paths[tier][0];
        SimMessage msg;
        msg.kind = MessageKind::Request;
        msg.payload = share;
        msg.tier = tier;
        msg.ue = round_ue_;
        msg.hop = 0;
        msg.from = topo_.aggregator;
        msg.to = other_end(first_edge, topo_.aggregator);
        send(std::move(msg), first_edge);
    }

    void forward(const SimMessage& msg, bool towards_server) {
        const auto& path = topo_.tier_paths[msg.tier];
        SimMessage next = msg;
        next.from = msg.to;
        next.hop = towards_server ? msg.hop + 1 : msg.hop - 1;
        next.to = other_end(path[next.hop], msg.to);
        send(std::move(next), path[next.hop]);
    }

    void begin_compute(const SimMessage& msg) {
        const TierSpec& tier = params_.tiers[msg.tier];
        const double delay =
            msg.payload.megabytes() / tier.capacity.megabytes_per_cycle() * params_.cycle_duration_s;
        processing_ += delay;
        SimMessage done = msg;
        done.kind = MessageKind::ComputeDone;
        done.from = msg.to;
        done.sent_at = now_;
        done.arrives_at = now_ + delay;
        clock_.schedule(std::move(done));
    }

    void begin_reply(const SimMessage& msg) {
        const auto& path = topo_.tier_paths[msg.tier];
        SimMessage reply = msg;
        reply.kind = MessageKind::Reply;
        reply.hop = path.size() - 1;
        reply.from = msg.to;
        reply.to = other_end(path.back(), msg.to);
        send(std::move(reply), path.back());
    }

    void finish_round() {
        end_time_ = now_;
        const std::size_t next = round_ue_ + 1;
        if (next < topo_.ue_agents.size()) {
            start_round(next);
        }
    }

    void send(SimMessage msg, std::size_t edge_id) {
        const double delay =
            edge_delay(topo_.edges[edge_id], msg.payload.megabytes(), alpha_, params_.alpha_semantics);
        transmission_ += delay;
        msg.sent_at = now_;
        msg.arrives_at = now_ + delay;
        clock_.schedule(std::move(msg));
    }

    std::size_t other_end(std::size_t edge_id, std::size_t agent) const {
        const SimEdge& edge = topo_.edges[edge_id];
        return edge.endpoint_a == agent ? edge.endpoint_b : edge.endpoint_a;
    }

    const ScenarioParams& params_;
    const MotionFactor& alpha_;
    const TierAllocation& alloc_;
    Topology topo_;
    SimClock clock_;
    double now_ = 0.0;
    double end_time_ = 0.0;
    double transmission_ = 0.0;
    double processing_ = 0.0;
    std::size_t events_ = 0;
    std::size_t round_ue_ = 0;
    std::size_t pending_ = 0;
};

}  // namespace

Topology build_topology(const ScenarioParams& params) {
    params.validate();
    Topology topo;

    for (int i = 0; i < params.ue_count; ++i) {
        topo.ue_agents.push_back(topo.agents.size());
        topo.agents.push_back(Agent{"ue" + std::to_string(i), AgentRole::UserEquipment, kNoTier});
    }

    const char* aggregator_name = params.model == ModelKind::Fog   ? "bs"
                                  : params.model == ModelKind::Mec ? "gnb"
                                                                   : "cu-up";
    topo.aggregator = topo.agents.size();
    topo.agents.push_back(Agent{aggregator_name, AgentRole::Aggregator, kNoTier});

    for (std::size_t ue : topo.ue_agents) {
        topo.access_edges.push_back(topo.edges.size());
        topo.edges.push_back(
            SimEdge{ue, topo.aggregator, params.access_speed.megabytes_per_second(), 1.0, true});
    }

    std::size_t relay = topo.aggregator;
    std::size_t relay_edge = 0;
    if (params.model == ModelKind::Hybrid) {
        relay = topo.agents.size();
        topo.agents.push_back(Agent{"cu-cp", AgentRole::Relay, kNoTier});
        relay_edge = topo.edges.size();
        topo.edges.push_back(SimEdge{topo.aggregator, relay, 1.0, 0.0, false});
    }

    const double cloud_factor = ln_hop_factor(params.backhaul_hops);
    topo.tier_agents.resize(params.tiers.size());
    topo.tier_paths.resize(params.tiers.size());
    for (std::size_t t = 0; t < params.tiers.size(); ++t) {
        const TierSpec& tier = params.tiers[t];
        const bool behind_relay = params.model == ModelKind::Hybrid && t > 0;
        const std::size_t attach = behind_relay ? relay : topo.aggregator;

        const std::size_t server = topo.agents.size();
        topo.agents.push_back(Agent{tier.name, AgentRole::TierServer, t});
        topo.tier_agents[t] = server;

        const std::size_t edge_id = topo.edges.size();
        topo.edges.push_back(SimEdge{attach, server, tier.link_speed.megabytes_per_second(),
                                     tier.is_cloud ? cloud_factor : 1.0, false});
        if (behind_relay) {
            topo.tier_paths[t] = {relay_edge, edge_id};
        } else {
            topo.tier_paths[t] = {edge_id};
        }
    }
    return topo;
}

PointResult run_scenario(DataVolume volume, const ScenarioParams& params,
                         const MotionFactor& alpha, const PolicyConfig& policy) {
    params.validate();
    policy.validate(params);

    const double per_ue_mb = volume.megabytes() / params.ue_count;
    const TierAllocation alloc = split(DataVolume(per_ue_mb), params, policy);

    Engine engine(params, alpha, alloc, build_topology(params));
    engine.run();

    const double transmission = engine.transmission();
    const double processing = engine.processing();
    const double total = transmission + processing;
    require_close("clock span", engine.span(), total, kSpanRelTol);

    const LatencyBreakdown closed = total_latency(volume, params, alpha, policy);
    require_close("transmission time", transmission, closed.transmission_s, kClosedFormRelTol);
    require_close("processing time", processing, closed.processing_s, kClosedFormRelTol);
    require_close("total latency", total, closed.total_s, kClosedFormRelTol);

    PointResult result;
    result.model = params.model;
    result.volume_mb = volume.megabytes();
    result.alpha_used = alpha.alpha();
    result.transmission_s = transmission;
    result.processing_s = processing;
    result.total_s = total;
    result.sim_events = engine.events();
    const double n = static_cast<double>(params.ue_count);
    result.allocation.per_tier.reserve(alloc.per_tier.size());
    for (const auto& [name, share] : alloc.per_tier) {
        result.allocation.per_tier.emplace_back(name, DataVolume(share.megabytes() * n));
    }
    return result;
}

PointResult run_scenario(DataVolume volume, const ScenarioParams& params,
                         const MotionFactor& alpha) {
    return run_scenario(volume, params, alpha, PolicyConfig::from_capacities(params));
}

}  // namespace edgesim
