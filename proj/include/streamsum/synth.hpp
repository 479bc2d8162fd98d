#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "streamsum/types.hpp"

namespace streamsum {

struct PlantedBurst {
    std::int64_t minute = 0;       // minutes since game start
    double multiplier = 6.0;       // rate multiplier, >= 3
    std::string term;              // injected into ~60% of that minute's tweets
    AnnotationKind kind = AnnotationKind::goal;
};

struct CurvePoint {
    std::int64_t from_minute = 0;  // relative to game start
    double multiplier = 1.0;
};

struct SynthSpec {
    std::uint64_t seed = 1;
    std::int64_t duration_minutes = 90;
    double base_rate = 30.0;            // tweets/minute, Poisson mean
    std::vector<CurvePoint> audience_curve;  // step function; empty = flat 1.0
    std::vector<PlantedBurst> planted;       // minutes >= 1 apart
    std::vector<std::pair<std::string, double>> languages = {
        {"es", 0.70}, {"en", 0.15}, {"pt", 0.15}};  // shares sum to 1
    std::vector<std::string> background_vocabulary;  // Zipf-weighted; empty = built-in
    Timestamp start_time = 1'310'000'000;
    Timestamp warmup_seconds = 900;  // stream begins this long before start
};

struct SynthOutput {
    std::vector<Tweet> tweets;  // timestamp-ordered
    std::vector<ReferenceAnnotation> reference;
};

// Deterministic for a fixed seed: the same spec always yields the same
// tweets byte for byte.
SynthOutput generate(const SynthSpec& spec);

}  // namespace streamsum
