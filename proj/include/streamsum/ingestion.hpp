#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "streamsum/types.hpp"

namespace streamsum {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One JSONL record: {"id","ts","text","lang","user"}; unknown fields ignored.
// Throws ParseError on malformed JSON, missing fields, or invariant
// violations (empty id/text, negative ts).
Tweet parse_tweet_line(const std::string& line);

std::string tweet_to_json_line(const Tweet& t);

// Reference CSV with header "minute,kind,note"; returns annotations sorted
// by minute. Throws ParseError on unknown kinds.
std::vector<ReferenceAnnotation> load_reference(std::istream& in);
std::vector<ReferenceAnnotation> load_reference_file(const std::string& path);

void save_reference(std::ostream& out, const std::vector<ReferenceAnnotation>& refs);

struct StreamStats {
    std::int64_t total = 0;
    std::map<std::string, std::int64_t> per_lang;
    Timestamp first_ts = 0;
    Timestamp last_ts = 0;
};

enum class ClockMode { as_fast_as_possible, realtime_scaled };
enum class OrderMode { strict, lenient };

struct ReplayOptions {
    ClockMode clock = ClockMode::as_fast_as_possible;
    double scale_factor = 1.0;              // realtime_scaled: wall spacing = dt / factor
    OrderMode order = OrderMode::lenient;   // STREAMSUM_STRICT_ORDER=1 forces strict
    Timestamp reorder_window = 5;           // lenient buffer, seconds
};

// honors the STREAMSUM_STRICT_ORDER env var
OrderMode order_mode_from_env(OrderMode fallback);

// Reads tweet JSONL from `in` and delivers each tweet exactly once, in
// timestamp order, to `sink`. Strict mode rejects out-of-order records;
// lenient mode reorders within the window and rejects overflow.
StreamStats replay(std::istream& in, const ReplayOptions& opts,
                   const std::function<void(const Tweet&)>& sink);

}  // namespace streamsum
