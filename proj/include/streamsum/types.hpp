#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace streamsum {

using Timestamp = std::int64_t;  // seconds since epoch

struct Tweet {
    std::string id;
    Timestamp timestamp = 0;
    std::string text;
    std::string lang;  // lowercase two-letter code, or "und"
    std::string user;
};

enum class DetectorMethod { increase, outliers };
enum class SelectorMethod { tf, kld };

const char* to_string(DetectorMethod m);
const char* to_string(SelectorMethod m);
DetectorMethod detector_from_string(const std::string& s);
SelectorMethod selector_from_string(const std::string& s);

struct EventSchedule {
    std::string event_id;
    Timestamp start_time = 0;
    Timestamp warmup_seconds = 900;
    // empty = run until the stream is exhausted
    std::optional<Timestamp> end_time;
};

struct SubEvent {
    std::int64_t minute = 0;      // minutes since event start, floored
    Timestamp frame_start = 0;    // start of the (first) firing frame
    std::int64_t rate = 0;        // tweet count in the firing frame
    DetectorMethod detector = DetectorMethod::outliers;
    std::vector<std::string> tweet_ids;  // the full minute's tweets, in order
};

struct SummaryEntry {
    std::int64_t minute = 0;
    Timestamp frame_start = 0;
    std::int64_t rate = 0;
    std::string lang;
    std::string tweet_id;
    std::string text;
    double score = 0.0;
    DetectorMethod detector = DetectorMethod::outliers;
    SelectorMethod selector = SelectorMethod::kld;
};

enum class AnnotationKind {
    goal,
    penalty,
    red_card,
    disallowed_goal,
    game_start,
    game_end,
    stop_or_resumption,
};

const char* to_string(AnnotationKind k);
// throws std::invalid_argument naming the offending value
AnnotationKind annotation_kind_from_string(const std::string& s);

struct ReferenceAnnotation {
    std::int64_t minute = 0;  // minutes since event start
    AnnotationKind kind = AnnotationKind::goal;
    std::string note;
};

inline std::int64_t minute_of(Timestamp t, Timestamp start_time) {
    Timestamp d = t - start_time;
    // floor division for negative (pre-start) times
    return d >= 0 ? d / 60 : -((-d + 59) / 60);
}

}  // namespace streamsum
