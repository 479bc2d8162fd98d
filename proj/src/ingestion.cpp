#include "streamsum/ingestion.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace streamsum {

Tweet parse_tweet_line(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed tweet record: ") + e.what());
    }
    for (const char* field : {"id", "ts", "text", "lang", "user"})
        if (!j.contains(field)) throw ParseError(std::string("missing field: ") + field);
    Tweet t;
    try {
        t.id = j.at("id").get<std::string>();
        t.timestamp = j.at("ts").get<std::int64_t>();
        t.text = j.at("text").get<std::string>();
        t.lang = j.at("lang").get<std::string>();
        t.user = j.at("user").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad field type: ") + e.what());
    }
    if (t.id.empty()) throw ParseError("empty id");
    if (t.timestamp < 0) throw ParseError("negative timestamp");
    if (t.text.empty()) throw ParseError("empty text");
    return t;
}

std::string tweet_to_json_line(const Tweet& t) {
    nlohmann::json j{{"id", t.id}, {"ts", t.timestamp}, {"text", t.text},
                     {"lang", t.lang}, {"user", t.user}};
    return j.dump();
}

std::vector<ReferenceAnnotation> load_reference(std::istream& in) {
    std::vector<ReferenceAnnotation> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (lineno == 1 && line.rfind("minute,", 0) == 0) continue;  // header
        std::istringstream ls(line);
        std::string minute_s, kind_s, note;
        std::getline(ls, minute_s, ',');
        std::getline(ls, kind_s, ',');
        std::getline(ls, note);
        ReferenceAnnotation a;
        try {
            a.minute = std::stoll(minute_s);
        } catch (const std::exception&) {
            throw ParseError("reference line " + std::to_string(lineno) + ": bad minute '" +
                             minute_s + "'");
        }
        if (a.minute < 0)
            throw ParseError("reference line " + std::to_string(lineno) + ": negative minute");
        try {
            a.kind = annotation_kind_from_string(kind_s);
        } catch (const std::invalid_argument& e) {
            throw ParseError("reference line " + std::to_string(lineno) + ": " + e.what());
        }
        a.note = note;
        out.push_back(std::move(a));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.minute < b.minute; });
    return out;
}

std::vector<ReferenceAnnotation> load_reference_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open reference file: " + path);
    return load_reference(f);
}

void save_reference(std::ostream& out, const std::vector<ReferenceAnnotation>& refs) {
    out << "minute,kind,note\n";
    for (const auto& r : refs)
        out << r.minute << ',' << to_string(r.kind) << ',' << r.note << '\n';
}

OrderMode order_mode_from_env(OrderMode fallback) {
    const char* v = std::getenv("STREAMSUM_STRICT_ORDER");
    if (v && std::string(v) == "1") return OrderMode::strict;
    return fallback;
}

StreamStats replay(std::istream& in, const ReplayOptions& opts,
                   const std::function<void(const Tweet&)>& sink) {
    StreamStats stats;
    Timestamp prev_delivered = 0;
    bool delivered_any = false;

    auto deliver = [&](const Tweet& t) {
        if (opts.clock == ClockMode::realtime_scaled && delivered_any && opts.scale_factor > 0) {
            double dt = static_cast<double>(t.timestamp - prev_delivered) / opts.scale_factor;
            if (dt > 0)
                std::this_thread::sleep_for(std::chrono::duration<double>(dt));
        }
        if (!delivered_any) stats.first_ts = t.timestamp;
        stats.last_ts = t.timestamp;
        prev_delivered = t.timestamp;
        delivered_any = true;
        ++stats.total;
        ++stats.per_lang[t.lang];
        sink(t);
    };

    // lenient mode: min-heap on (ts, arrival seq) keeps the reorder stable
    using Entry = std::pair<std::pair<Timestamp, std::int64_t>, Tweet>;
    auto cmp = [](const Entry& a, const Entry& b) { return a.first > b.first; };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> buffer(cmp);

    std::string line;
    std::size_t lineno = 0;
    std::int64_t seq = 0;
    Timestamp max_seen = 0;
    bool seen_any = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        Tweet t;
        try {
            t = parse_tweet_line(line);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
        if (opts.order == OrderMode::strict) {
            if (seen_any && t.timestamp < max_seen)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": out-of-order record (strict mode)");
            max_seen = std::max(max_seen, t.timestamp);
            seen_any = true;
            deliver(t);
        } else {
            if (seen_any && t.timestamp < max_seen - opts.reorder_window)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": record exceeds the reorder window");
            max_seen = seen_any ? std::max(max_seen, t.timestamp) : t.timestamp;
            seen_any = true;
            buffer.push({{t.timestamp, seq++}, std::move(t)});
            while (!buffer.empty() && buffer.top().first.first <= max_seen - opts.reorder_window) {
                deliver(buffer.top().second);
                buffer.pop();
            }
        }
    }
    while (!buffer.empty()) {
        deliver(buffer.top().second);
        buffer.pop();
    }
    return stats;
}

}  // namespace streamsum
