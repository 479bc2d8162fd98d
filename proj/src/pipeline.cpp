#include "streamsum/pipeline.hpp"

#include <algorithm>

#include <json.hpp>

namespace streamsum {

Pipeline::Pipeline(PipelineConfig config, EntrySink sink)
    : cfg_(std::move(config)),
      sink_(std::move(sink)),
      engine_(cfg_.detector, cfg_.schedule),
      origin_(cfg_.schedule.start_time - cfg_.schedule.warmup_seconds) {
    for (const auto& lang : cfg_.languages) game_dist_[lang];
    next_close_ = minute_of(origin_, cfg_.schedule.start_time);
}

void Pipeline::note_fired(const std::vector<FiredFrame>& frames) {
    for (const auto& f : frames) {
        std::int64_t m = minute_of(f.frame_start, cfg_.schedule.start_time);
        if (m < 0) continue;
        fired_.emplace(m, f);  // first firing frame wins
    }
}

void Pipeline::on_tweet(const Tweet& tweet) {
    if (tweet.timestamp < origin_) {
        ++stats_.skipped_pre_origin;
        return;
    }
    note_fired(engine_.observe(tweet.timestamp));
    close_minutes_through(tweet.timestamp);

    ++stats_.total_tweets;
    ++stats_.per_lang[tweet.lang];
    pending_[minute_of(tweet.timestamp, cfg_.schedule.start_time)].push_back(tweet);
}

void Pipeline::finish() {
    if (!cfg_.schedule.end_time) return;
    note_fired(engine_.finish());
    close_minutes_through(*cfg_.schedule.end_time);
}

void Pipeline::close_minutes_through(Timestamp watermark) {
    // minute m is closed once the watermark reaches its end
    while (cfg_.schedule.start_time + (next_close_ + 1) * 60 <= watermark) {
        close_minute(next_close_);
        ++next_close_;
    }
}

void Pipeline::close_minute(std::int64_t m) {
    auto pit = pending_.find(m);
    static const std::vector<Tweet> no_tweets;
    const std::vector<Tweet>& tweets = pit != pending_.end() ? pit->second : no_tweets;

    auto fit = fired_.find(m);
    if (fit != fired_.end()) {
        SubEvent se;
        se.minute = m;
        se.frame_start = fit->second.frame_start;
        se.rate = fit->second.count;
        se.detector = cfg_.detector.method;
        for (const auto& tw : tweets) se.tweet_ids.push_back(tw.id);
        ++stats_.subevents;

        for (const auto& lang : cfg_.languages) {
            TermDistribution minute_dist;  // H, this minute and language only
            for (const auto& tw : tweets)
                if (tw.lang == lang)
                    minute_dist.add(tokenize(tw.text, cfg_.selector.min_token_len));
            auto entry = select_representative(se, tweets, lang, cfg_.selector, minute_dist,
                                               game_dist_.at(lang));
            if (entry) {
                ++stats_.selected;
                if (sink_) sink_(*entry);
            }
        }
        subevents_.push_back(std::move(se));
        fired_.erase(fit);
    }

    // only now does the minute join G ("until the previous minute")
    for (const auto& tw : tweets) {
        auto git = game_dist_.find(tw.lang);
        if (git != game_dist_.end())
            git->second.add(tokenize(tw.text, cfg_.selector.min_token_len));
    }
    if (pit != pending_.end()) pending_.erase(pit);
}

std::string summary_entry_to_json_line(const SummaryEntry& e) {
    nlohmann::json j{{"minute", e.minute},   {"frame_start", e.frame_start},
                     {"rate", e.rate},       {"lang", e.lang},
                     {"tweet_id", e.tweet_id}, {"text", e.text},
                     {"score", e.score},     {"detector", to_string(e.detector)},
                     {"selector", to_string(e.selector)}};
    return j.dump();
}

SummaryEntry parse_summary_line(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line);
    SummaryEntry e;
    e.minute = j.at("minute").get<std::int64_t>();
    e.frame_start = j.at("frame_start").get<Timestamp>();
    e.rate = j.at("rate").get<std::int64_t>();
    e.lang = j.at("lang").get<std::string>();
    e.tweet_id = j.at("tweet_id").get<std::string>();
    e.text = j.at("text").get<std::string>();
    e.score = j.at("score").get<double>();
    e.detector = detector_from_string(j.at("detector").get<std::string>());
    e.selector = selector_from_string(j.at("selector").get<std::string>());
    return e;
}

std::string run_stats_to_json(const RunStats& s) {
    nlohmann::json j;
    j["total_tweets"] = s.total_tweets;
    j["skipped_pre_origin"] = s.skipped_pre_origin;
    j["per_lang"] = s.per_lang;
    j["subevents"] = s.subevents;
    j["selected"] = s.selected;
    j["compression"] = s.compression();
    return j.dump(2);
}

}  // namespace streamsum
