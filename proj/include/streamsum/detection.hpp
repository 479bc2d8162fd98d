#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "streamsum/types.hpp"

namespace streamsum {

struct DetectorConfig {
    DetectorMethod method = DetectorMethod::outliers;
    double increase_factor = 1.7;
    std::vector<int> increase_periods = {10, 20, 30, 60};
    int outlier_period = 60;
    double outlier_quantile = 0.90;
    Timestamp warmup_seconds = 900;
};

// Per-period counts of tweets per frame, anchored at origin.
// counts[k] covers [origin + k*period, origin + (k+1)*period).
class RateHistogram {
  public:
    RateHistogram(int period_seconds, Timestamp origin)
        : period_(period_seconds), origin_(origin) {}

    // Timestamps must be non-decreasing; skipped frames materialize as 0.
    void ingest_tick(Timestamp ts) {
        if (ts < origin_)
            throw std::out_of_range("tweet timestamp before histogram origin");
        std::size_t bin = static_cast<std::size_t>((ts - origin_) / period_);
        if (bin >= counts_.size()) counts_.resize(bin + 1, 0);
        ++counts_[bin];
    }

    // highest frame index fully elapsed at watermark ts (frame_end <= ts);
    // -1 when no frame has completed yet
    std::int64_t last_complete_frame(Timestamp watermark) const {
        return (watermark - origin_) / period_ - 1;
    }

    std::int64_t count_at(std::int64_t frame) const {
        if (frame < 0) return 0;
        auto k = static_cast<std::size_t>(frame);
        return k < counts_.size() ? counts_[k] : 0;
    }

    Timestamp frame_start(std::int64_t frame) const { return origin_ + frame * period_; }
    int period() const { return period_; }
    Timestamp origin() const { return origin_; }
    const std::vector<std::int64_t>& counts() const { return counts_; }

  private:
    int period_;
    Timestamp origin_;
    std::vector<std::int64_t> counts_;
};

// true iff curr >= factor * prev and curr >= 1
bool increase_fired(std::int64_t prev_count, std::int64_t curr_count, double factor);

// Sorted multiset of previously seen rates, with rank queries.
class RateHistory {
  public:
    void push(std::int64_t rate) {
        ++values_[rate];
        ++size_;
    }

    // number of history entries strictly below rate
    std::int64_t rank_below(std::int64_t rate) const {
        std::int64_t n = 0;
        for (auto it = values_.begin(); it != values_.end() && it->first < rate; ++it)
            n += it->second;
        return n;
    }

    std::int64_t size() const { return size_; }

  private:
    std::map<std::int64_t, std::int64_t> values_;
    std::int64_t size_ = 0;
};

// true iff the fraction of history strictly below curr is >= quantile.
// Throws on empty history (cannot fire before warm-up).
bool detect_outlier(const RateHistory& history, std::int64_t curr_count, double quantile);

struct FiredFrame {
    Timestamp frame_start = 0;
    int period = 0;
    std::int64_t count = 0;
};

// Streaming sub-event detector: feed timestamp-ordered tweets, collect
// frames that fire. Frames are evaluated when they complete, never before
// (real-time contract). Nothing fires before the scheduled start.
class DetectionEngine {
  public:
    DetectionEngine(const DetectorConfig& cfg, const EventSchedule& schedule);

    // Closes every frame that ends at or before ts, evaluates it, then
    // counts the tweet. Returns the frames that fired, in order.
    std::vector<FiredFrame> observe(Timestamp ts);

    // Close remaining frames up to an explicit end time (no-op for the
    // until-exhausted policy: incomplete frames are never evaluated).
    std::vector<FiredFrame> finish();

    const RateHistory& history() const { return history_; }

  private:
    std::vector<FiredFrame> advance(Timestamp watermark);

    DetectorConfig cfg_;
    EventSchedule schedule_;
    Timestamp origin_;
    std::vector<RateHistogram> histograms_;
    std::vector<std::int64_t> next_frame_;  // per histogram, next frame to evaluate
    RateHistory history_;                   // outliers only
    std::int64_t warmup_frames_ = 0;
    Timestamp watermark_ = 0;
    bool saw_tweet_ = false;
};

// Convenience fold over a whole stream: one SubEvent per fired minute
// (multiple firings within a minute merge; the SubEvent carries the full
// minute's tweets).
std::vector<SubEvent> emit_subevents(const DetectorConfig& cfg, const EventSchedule& schedule,
                                     const std::vector<Tweet>& stream);

}  // namespace streamsum
