#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace edgesim {

namespace detail {

inline double checked_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
    return v;
}

}  // namespace detail

/// Data volume in megabytes. Decimal convention throughout: 1 GB = 1000 MB.
class DataVolume {
public:
    DataVolume() = default;
    explicit DataVolume(double megabytes) : megabytes_(detail::checked_finite(megabytes, "data volume")) {
        if (megabytes_ < 0.0) {
            throw std::invalid_argument("data volume must be non-negative");
        }
    }

    static DataVolume from_gigabytes(double gigabytes) { return DataVolume(gigabytes * 1000.0); }

    double megabytes() const { return megabytes_; }
    bool is_zero() const { return megabytes_ == 0.0; }

    friend bool operator==(const DataVolume& a, const DataVolume& b) { return a.megabytes_ == b.megabytes_; }
    friend bool operator<(const DataVolume& a, const DataVolume& b) { return a.megabytes_ < b.megabytes_; }
    friend bool operator<=(const DataVolume& a, const DataVolume& b) { return a.megabytes_ <= b.megabytes_; }

private:
    double megabytes_ = 0.0;
};

/// Link throughput in megabytes per second. Strictly positive.
class LinkSpeed {
public:
    explicit LinkSpeed(double megabytes_per_second)
        : mb_per_s_(detail::checked_finite(megabytes_per_second, "link speed")) {
        if (mb_per_s_ <= 0.0) {
            throw std::invalid_argument("link speed must be positive");
        }
    }

    double megabytes_per_second() const { return mb_per_s_; }

private:
    double mb_per_s_;
};

/// Compute capacity in megabytes per cycle. Strictly positive.
class ComputeCapacity {
public:
    explicit ComputeCapacity(double megabytes_per_cycle)
        : mb_per_cycle_(detail::checked_finite(megabytes_per_cycle, "compute capacity")) {
        if (mb_per_cycle_ <= 0.0) {
            throw std::invalid_argument("compute capacity must be positive");
        }
    }

    double megabytes_per_cycle() const { return mb_per_cycle_; }

private:
    double mb_per_cycle_;
};

/// Number of backhaul hops to the cloud. At least 1.
class HopCount {
public:
    explicit HopCount(int hops) : hops_(hops) {
        if (hops_ < 1) {
            throw std::invalid_argument("hop count must be at least 1");
        }
    }

    int hops() const { return hops_; }

private:
    int hops_;
};

/// Closed interval (0, 1] from which the motion factor is drawn.
class AlphaRange {
public:
    AlphaRange(double low, double high)
        : low_(detail::checked_finite(low, "alpha range")), high_(detail::checked_finite(high, "alpha range")) {
        if (!(0.0 < low_ && low_ <= high_ && high_ <= 1.0)) {
            throw std::invalid_argument("alpha range must satisfy 0 < low <= high <= 1");
        }
    }

    static AlphaRange fixed(double value) { return AlphaRange(value, value); }

    double low() const { return low_; }
    double high() const { return high_; }
    double midpoint() const { return 0.5 * (low_ + high_); }
    bool is_degenerate() const { return low_ == high_; }

    friend bool operator==(const AlphaRange& a, const AlphaRange& b) {
        return a.low_ == b.low_ && a.high_ == b.high_;
    }

private:
    double low_;
    double high_;
};

/// A drawn motion factor together with the interval it was drawn from.
/// Models UE mobility as a multiplier on the effective uplink speed.
class MotionFactor {
public:
    MotionFactor(double alpha, AlphaRange range) : alpha_(alpha), range_(range) {
        if (!(range_.low() <= alpha_ && alpha_ <= range_.high())) {
            throw std::invalid_argument("motion factor must lie within its range");
        }
    }

    static MotionFactor fixed(double alpha) { return MotionFactor(alpha, AlphaRange::fixed(alpha)); }

    double alpha() const { return alpha_; }
    const AlphaRange& range() const { return range_; }

private:
    double alpha_;
    AlphaRange range_;
};

}  // namespace edgesim
