#pragma once

#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "streamsum/detection.hpp"
#include "streamsum/lexicon.hpp"
#include "streamsum/selection.hpp"
#include "streamsum/types.hpp"

namespace streamsum {

struct PipelineConfig {
    EventSchedule schedule;
    DetectorConfig detector;
    TermWeighting selector;
    std::vector<std::string> languages = {"es", "en", "pt"};
};

struct RunStats {
    std::int64_t total_tweets = 0;
    std::int64_t skipped_pre_origin = 0;
    std::map<std::string, std::int64_t> per_lang;
    std::int64_t subevents = 0;
    std::int64_t selected = 0;
    double compression() const {
        return total_tweets > 0 ? static_cast<double>(selected) / total_tweets : 0.0;
    }
};

// The two-step summarizer as a streaming fold: sub-event detection over
// tweet-rate frames, then per-language representative selection over the
// fired minute. Entries are emitted as soon as their minute completes;
// nothing is ever revised by later input.
class Pipeline {
  public:
    using EntrySink = std::function<void(const SummaryEntry&)>;

    Pipeline(PipelineConfig config, EntrySink sink);

    void on_tweet(const Tweet& tweet);

    // With an explicit end time, closes all remaining frames and minutes up
    // to it. Otherwise incomplete frames stay unevaluated (no lookahead was
    // possible, so no output is owed).
    void finish();

    const RunStats& stats() const { return stats_; }
    const std::vector<SubEvent>& subevents() const { return subevents_; }

  private:
    void note_fired(const std::vector<FiredFrame>& frames);
    void close_minutes_through(Timestamp watermark);
    void close_minute(std::int64_t m);

    PipelineConfig cfg_;
    EntrySink sink_;
    DetectionEngine engine_;
    Timestamp origin_;
    std::unordered_map<std::string, TermDistribution> game_dist_;  // G per language
    std::map<std::int64_t, std::vector<Tweet>> pending_;           // open minutes
    std::map<std::int64_t, FiredFrame> fired_;                     // minute -> first firing frame
    std::int64_t next_close_;
    RunStats stats_;
    std::vector<SubEvent> subevents_;
};

std::string summary_entry_to_json_line(const SummaryEntry& e);
SummaryEntry parse_summary_line(const std::string& line);

std::string run_stats_to_json(const RunStats& s);

}  // namespace streamsum
