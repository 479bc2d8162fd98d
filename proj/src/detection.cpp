#include "streamsum/detection.hpp"

#include <algorithm>
#include <map>

namespace streamsum {

bool increase_fired(std::int64_t prev_count, std::int64_t curr_count, double factor) {
    if (curr_count < 1) return false;
    return static_cast<double>(curr_count) >= factor * static_cast<double>(prev_count);
}

bool detect_outlier(const RateHistory& history, std::int64_t curr_count, double quantile) {
    if (history.size() == 0)
        throw std::invalid_argument("detect_outlier: empty history");
    double below = static_cast<double>(history.rank_below(curr_count));
    return below / static_cast<double>(history.size()) >= quantile;
}

DetectionEngine::DetectionEngine(const DetectorConfig& cfg, const EventSchedule& schedule)
    : cfg_(cfg), schedule_(schedule) {
    origin_ = schedule.start_time - schedule.warmup_seconds;
    watermark_ = origin_;
    if (cfg.method == DetectorMethod::increase) {
        for (int p : cfg.increase_periods) histograms_.emplace_back(p, origin_);
    } else {
        histograms_.emplace_back(cfg.outlier_period, origin_);
        warmup_frames_ = schedule.warmup_seconds / cfg.outlier_period;
    }
    next_frame_.assign(histograms_.size(), 0);
}

std::vector<FiredFrame> DetectionEngine::advance(Timestamp watermark) {
    std::vector<FiredFrame> fired;
    for (std::size_t h = 0; h < histograms_.size(); ++h) {
        auto& hist = histograms_[h];
        std::int64_t last = hist.last_complete_frame(watermark);
        for (std::int64_t k = next_frame_[h]; k <= last; ++k) {
            std::int64_t c = hist.count_at(k);
            Timestamp fs = hist.frame_start(k);
            Timestamp fe = fs + hist.period();
            bool in_game = fe > schedule_.start_time;
            if (cfg_.method == DetectorMethod::increase) {
                if (in_game && k >= 1 &&
                    increase_fired(hist.count_at(k - 1), c, cfg_.increase_factor))
                    fired.push_back({fs, hist.period(), c});
            } else {
                if (in_game && history_.size() >= warmup_frames_ && history_.size() > 0 &&
                    detect_outlier(history_, c, cfg_.outlier_quantile))
                    fired.push_back({fs, hist.period(), c});
                // every completed frame joins the history, fired or not
                history_.push(c);
            }
            next_frame_[h] = k + 1;
        }
    }
    std::sort(fired.begin(), fired.end(), [](const FiredFrame& a, const FiredFrame& b) {
        Timestamp ea = a.frame_start + a.period, eb = b.frame_start + b.period;
        if (ea != eb) return ea < eb;
        return a.period < b.period;
    });
    return fired;
}

std::vector<FiredFrame> DetectionEngine::observe(Timestamp ts) {
    if (ts < origin_)
        throw std::out_of_range("observe: timestamp before detection origin");
    if (saw_tweet_ && ts < watermark_)
        throw std::logic_error("observe: timestamps must be non-decreasing");
    watermark_ = ts;
    saw_tweet_ = true;
    auto fired = advance(ts);
    for (auto& hist : histograms_) hist.ingest_tick(ts);
    return fired;
}

std::vector<FiredFrame> DetectionEngine::finish() {
    if (!schedule_.end_time) return {};
    return advance(*schedule_.end_time);
}

std::vector<SubEvent> emit_subevents(const DetectorConfig& cfg, const EventSchedule& schedule,
                                     const std::vector<Tweet>& stream) {
    DetectionEngine engine(cfg, schedule);
    std::map<std::int64_t, FiredFrame> fired_minutes;  // minute -> first firing frame
    Timestamp origin = schedule.start_time - schedule.warmup_seconds;
    for (const auto& tw : stream) {
        if (tw.timestamp < origin) continue;
        for (const auto& f : engine.observe(tw.timestamp))
            fired_minutes.emplace(minute_of(f.frame_start, schedule.start_time), f);
    }
    for (const auto& f : engine.finish())
        fired_minutes.emplace(minute_of(f.frame_start, schedule.start_time), f);

    std::vector<SubEvent> out;
    for (const auto& [minute, frame] : fired_minutes) {
        SubEvent se;
        se.minute = minute;
        se.frame_start = frame.frame_start;
        se.rate = frame.count;
        se.detector = cfg.method;
        Timestamp lo = schedule.start_time + minute * 60;
        for (const auto& tw : stream)
            if (tw.timestamp >= lo && tw.timestamp < lo + 60) se.tweet_ids.push_back(tw.id);
        out.push_back(std::move(se));
    }
    return out;
}

}  // namespace streamsum
