#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "streamsum/ingestion.hpp"

using namespace streamsum;

TEST_CASE("parse_tweet_line maps fields directly") {
    auto t = parse_tweet_line(
        R"({"id":"1","ts":1310000000,"text":"Gol de Perez! #ca2011","lang":"es","user":"u1"})");
    CHECK(t.id == "1");
    CHECK(t.timestamp == 1310000000);
    CHECK(t.lang == "es");
    CHECK(t.user == "u1");
}

TEST_CASE("parse_tweet_line rejects bad records") {
    CHECK_THROWS_AS(parse_tweet_line("not json"), ParseError);
    CHECK_THROWS_AS(
        parse_tweet_line(R"({"id":"2","ts":1310000000,"text":"","lang":"en","user":"u2"})"),
        ParseError);
    CHECK_THROWS_AS(parse_tweet_line(R"({"id":"3","text":"x","lang":"en","user":"u"})"),
                    ParseError);  // missing ts
    CHECK_THROWS_AS(parse_tweet_line(R"({"id":"","ts":5,"text":"x","lang":"en","user":"u"})"),
                    ParseError);
    CHECK_THROWS_AS(parse_tweet_line(R"({"id":"4","ts":-1,"text":"x","lang":"en","user":"u"})"),
                    ParseError);
}

TEST_CASE("parse_tweet_line ignores unknown fields") {
    auto t = parse_tweet_line(
        R"({"id":"1","ts":10,"text":"x y","lang":"es","user":"u","retweets":7})");
    CHECK(t.text == "x y");
}

TEST_CASE("tweet JSONL round-trips") {
    Tweet t;
    t.id = "42";
    t.timestamp = 1310000123;
    t.text = "Goool! ñandú über #ca2011";
    t.lang = "es";
    t.user = "u9";
    auto back = parse_tweet_line(tweet_to_json_line(t));
    CHECK(back.id == t.id);
    CHECK(back.timestamp == t.timestamp);
    CHECK(back.text == t.text);
    CHECK(back.lang == t.lang);
    CHECK(back.user == t.user);
}

TEST_CASE("load_reference parses and sorts") {
    std::istringstream in("minute,kind,note\n13,red_card,second yellow\n4,goal,\n");
    auto refs = load_reference(in);
    REQUIRE(refs.size() == 2);
    CHECK(refs[0].minute == 4);
    CHECK(refs[0].kind == AnnotationKind::goal);
    CHECK(refs[1].minute == 13);
    CHECK(refs[1].kind == AnnotationKind::red_card);
    CHECK(refs[1].note == "second yellow");
}

TEST_CASE("load_reference rejects unknown kinds, accepts empty files") {
    std::istringstream bad("minute,kind,note\n4,own_goal,\n");
    CHECK_THROWS_WITH_AS(load_reference(bad),
                         doctest::Contains("own_goal"), ParseError);
    std::istringstream empty("minute,kind,note\n");
    CHECK(load_reference(empty).empty());
}

TEST_CASE("reference round-trips through CSV") {
    std::vector<ReferenceAnnotation> refs = {
        {4, AnnotationKind::goal, "opener"},
        {45, AnnotationKind::stop_or_resumption, ""},
        {90, AnnotationKind::game_end, "final whistle"},
    };
    std::ostringstream out;
    save_reference(out, refs);
    std::istringstream in(out.str());
    auto back = load_reference(in);
    REQUIRE(back.size() == refs.size());
    for (std::size_t i = 0; i < refs.size(); ++i) {
        CHECK(back[i].minute == refs[i].minute);
        CHECK(back[i].kind == refs[i].kind);
        CHECK(back[i].note == refs[i].note);
    }
}

namespace {

std::string jsonl(const std::vector<std::pair<std::string, Timestamp>>& recs) {
    std::ostringstream out;
    for (const auto& [id, ts] : recs)
        out << R"({"id":")" << id << R"(","ts":)" << ts
            << R"(,"text":"x","lang":"es","user":"u"})" << "\n";
    return out.str();
}

}  // namespace

TEST_CASE("replay delivers in order and counts") {
    std::istringstream in(jsonl({{"a", 10}, {"b", 10}, {"c", 12}}));
    std::vector<std::string> order;
    auto stats = replay(in, {}, [&](const Tweet& t) { order.push_back(t.id); });
    CHECK(order == std::vector<std::string>{"a", "b", "c"});
    CHECK(stats.total == 3);
    CHECK(stats.per_lang.at("es") == 3);
    CHECK(stats.first_ts == 10);
    CHECK(stats.last_ts == 12);
}

TEST_CASE("strict mode rejects out-of-order input") {
    std::istringstream in(jsonl({{"a", 10}, {"b", 12}, {"c", 11}}));
    ReplayOptions opts;
    opts.order = OrderMode::strict;
    CHECK_THROWS_AS(replay(in, opts, [](const Tweet&) {}), ParseError);
}

TEST_CASE("lenient mode reorders within the window") {
    std::istringstream in(jsonl({{"a", 10}, {"b", 12}, {"c", 11}}));
    std::vector<Timestamp> order;
    auto stats = replay(in, {}, [&](const Tweet& t) { order.push_back(t.timestamp); });
    CHECK(order == std::vector<Timestamp>{10, 11, 12});
    CHECK(stats.total == 3);
}

TEST_CASE("lenient mode rejects records beyond the window") {
    std::istringstream in(jsonl({{"a", 100}, {"b", 94}}));
    CHECK_THROWS_AS(replay(in, {}, [](const Tweet&) {}), ParseError);
}

TEST_CASE("lenient delivery equals a stable sort of the input") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::pair<std::string, Timestamp>> recs;
        Timestamp ts = 1000;
        for (int i = 0; i < 40; ++i) {
            ts += rng() % 4;
            // jitter within the 5s window
            Timestamp jittered = ts - static_cast<Timestamp>(rng() % 4);
            recs.push_back({"t" + std::to_string(i), jittered});
        }
        std::istringstream in(jsonl(recs));
        std::vector<std::pair<Timestamp, std::string>> delivered;
        auto stats = replay(in, {}, [&](const Tweet& t) {
            delivered.push_back({t.timestamp, t.id});
        });

        auto expected = recs;
        std::stable_sort(expected.begin(), expected.end(),
                         [](const auto& a, const auto& b) { return a.second < b.second; });
        REQUIRE(delivered.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) {
            CHECK(delivered[i].first == expected[i].second);
            CHECK(delivered[i].second == expected[i].first);
        }
        // per-language counts sum to the total
        std::int64_t sum = 0;
        for (const auto& [lang, n] : stats.per_lang) sum += n;
        CHECK(sum == stats.total);
    }
}

TEST_CASE("STREAMSUM_STRICT_ORDER forces strict mode") {
    setenv("STREAMSUM_STRICT_ORDER", "1", 1);
    CHECK(order_mode_from_env(OrderMode::lenient) == OrderMode::strict);
    unsetenv("STREAMSUM_STRICT_ORDER");
    CHECK(order_mode_from_env(OrderMode::lenient) == OrderMode::lenient);
}
