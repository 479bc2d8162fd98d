#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "streamsum/types.hpp"

namespace streamsum {

struct MatchedPair {
    std::int64_t detected_minute = 0;
    std::int64_t reference_minute = 0;
    AnnotationKind kind = AnnotationKind::goal;
};

struct MatchReport {
    std::vector<MatchedPair> matched;
    std::vector<std::int64_t> unmatched_detected;
    std::vector<ReferenceAnnotation> unmatched_reference;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::int64_t detected_count = 0;
    std::int64_t reference_count = 0;
    double compression = 0.0;  // selected tweets / total tweets, when known
};

// Maximum-cardinality one-to-one matching under |d.minute - r.minute| <= tolerance
// (augmenting paths, nearest-first). Both inputs sorted by minute.
MatchReport match(const std::vector<std::int64_t>& detected_minutes,
                  const std::vector<ReferenceAnnotation>& reference, std::int64_t tolerance = 1);

// matched-of-kind / reference-of-kind; kinds with no reference instances omitted
std::map<AnnotationKind, double> per_kind_recall(const MatchReport& report,
                                                 const std::vector<ReferenceAnnotation>& reference);

struct AggregateSummary {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double avg_detected = 0.0;
    double avg_compression = 0.0;
    std::size_t games = 0;
};

// unweighted (macro) means across games; throws on empty input
AggregateSummary aggregate(const std::vector<MatchReport>& reports);

std::string report_to_json(const MatchReport& report);
std::string aggregate_table(const AggregateSummary& s);

}  // namespace streamsum
