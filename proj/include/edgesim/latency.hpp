#pragma once

#include "edgesim/offload.hpp"
#include "edgesim/scenario.hpp"
#include "edgesim/units.hpp"

namespace edgesim {

/// Latency of one request, split into its two additive parts.
/// total_s == transmission_s + processing_s holds exactly.
struct LatencyBreakdown {
    double transmission_s = 0.0;
    double processing_s = 0.0;
    double total_s = 0.0;

    static LatencyBreakdown of(double transmission_s, double processing_s) {
        return LatencyBreakdown{transmission_s, processing_s, transmission_s + processing_s};
    }
};

/// Nonlinear backhaul penalty: the natural log of the hop count.
/// ln(1) = 0, so a single-hop backhaul makes the cloud transmission
/// leg free while cloud processing still costs time.
double ln_hop_factor(HopCount hops);

/// Round-trip transmission time in seconds:
///
///   2 * ( V_total on the UE uplink (scaled by alpha)
///       + each non-cloud share over its tier link
///       + ln(hops) * the cloud share over the cloud link )
///
/// The factor 2 covers sending the raw data and receiving the processed
/// result. How alpha scales the uplink term follows
/// params.alpha_semantics.
double transmission_time_s(const TierAllocation& alloc, const ScenarioParams& params,
                           const MotionFactor& alpha);

/// Processing time in seconds: each tier's share divided by its
/// capacity, in cycles, times the cycle duration.
double processing_time_s(const TierAllocation& alloc, const ScenarioParams& params);

/// Closed-form total latency for a request of the given volume.
///
/// The volume is split across tiers by the offload policy. With
/// ue_count > 1 the volume is divided evenly across UEs and the result
/// is the sum of the per-UE latencies.
LatencyBreakdown total_latency(DataVolume volume, const ScenarioParams& params,
                               const MotionFactor& alpha, const PolicyConfig& policy);

/// Same, with the capacity-threshold default policy.
LatencyBreakdown total_latency(DataVolume volume, const ScenarioParams& params,
                               const MotionFactor& alpha);

}  // namespace edgesim
