#include "streamsum/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace streamsum {

namespace {

// Kuhn's augmenting-path search for maximum bipartite matching. Candidate
// references per detection are tried nearest-first, so the result is
// deterministic and prefers small minute deltas when it costs nothing.
bool augment(std::size_t d, const std::vector<std::vector<std::size_t>>& adj,
             std::vector<bool>& visited, std::vector<std::ptrdiff_t>& ref_owner) {
    for (std::size_t r : adj[d]) {
        if (visited[r]) continue;
        visited[r] = true;
        if (ref_owner[r] < 0 ||
            augment(static_cast<std::size_t>(ref_owner[r]), adj, visited, ref_owner)) {
            ref_owner[r] = static_cast<std::ptrdiff_t>(d);
            return true;
        }
    }
    return false;
}

}  // namespace

MatchReport match(const std::vector<std::int64_t>& detected_minutes,
                  const std::vector<ReferenceAnnotation>& reference, std::int64_t tolerance) {
    std::vector<std::vector<std::size_t>> adj(detected_minutes.size());
    for (std::size_t d = 0; d < detected_minutes.size(); ++d) {
        for (std::size_t r = 0; r < reference.size(); ++r)
            if (std::llabs(detected_minutes[d] - reference[r].minute) <= tolerance)
                adj[d].push_back(r);
        std::stable_sort(adj[d].begin(), adj[d].end(), [&](std::size_t a, std::size_t b) {
            return std::llabs(detected_minutes[d] - reference[a].minute) <
                   std::llabs(detected_minutes[d] - reference[b].minute);
        });
    }

    std::vector<std::ptrdiff_t> ref_owner(reference.size(), -1);
    for (std::size_t d = 0; d < detected_minutes.size(); ++d) {
        std::vector<bool> visited(reference.size(), false);
        augment(d, adj, visited, ref_owner);
    }

    MatchReport rep;
    std::vector<bool> det_used(detected_minutes.size(), false);
    for (std::size_t r = 0; r < reference.size(); ++r) {
        if (ref_owner[r] < 0) continue;
        auto d = static_cast<std::size_t>(ref_owner[r]);
        det_used[d] = true;
        rep.matched.push_back({detected_minutes[d], reference[r].minute, reference[r].kind});
    }
    std::sort(rep.matched.begin(), rep.matched.end(), [](const MatchedPair& a, const MatchedPair& b) {
        return a.reference_minute < b.reference_minute;
    });
    for (std::size_t d = 0; d < detected_minutes.size(); ++d)
        if (!det_used[d]) rep.unmatched_detected.push_back(detected_minutes[d]);
    for (std::size_t r = 0; r < reference.size(); ++r)
        if (ref_owner[r] < 0) rep.unmatched_reference.push_back(reference[r]);

    rep.detected_count = static_cast<std::int64_t>(detected_minutes.size());
    rep.reference_count = static_cast<std::int64_t>(reference.size());
    double m = static_cast<double>(rep.matched.size());
    rep.precision = rep.detected_count > 0 ? m / rep.detected_count : 0.0;
    rep.recall = rep.reference_count > 0 ? m / rep.reference_count : 0.0;
    rep.f1 = (rep.precision + rep.recall) > 0.0
                 ? 2.0 * rep.precision * rep.recall / (rep.precision + rep.recall)
                 : 0.0;
    return rep;
}

std::map<AnnotationKind, double> per_kind_recall(
    const MatchReport& report, const std::vector<ReferenceAnnotation>& reference) {
    std::map<AnnotationKind, std::int64_t> total, hit;
    for (const auto& r : reference) ++total[r.kind];
    for (const auto& p : report.matched) ++hit[p.kind];
    std::map<AnnotationKind, double> out;
    for (const auto& [kind, n] : total)
        out[kind] = static_cast<double>(hit[kind]) / static_cast<double>(n);
    return out;
}

AggregateSummary aggregate(const std::vector<MatchReport>& reports) {
    if (reports.empty()) throw std::invalid_argument("aggregate: no reports");
    AggregateSummary s;
    s.games = reports.size();
    for (const auto& r : reports) {
        s.precision += r.precision;
        s.recall += r.recall;
        s.f1 += r.f1;
        s.avg_detected += static_cast<double>(r.detected_count);
        s.avg_compression += r.compression;
    }
    double n = static_cast<double>(s.games);
    s.precision /= n;
    s.recall /= n;
    s.f1 /= n;
    s.avg_detected /= n;
    s.avg_compression /= n;
    return s;
}

std::string report_to_json(const MatchReport& report) {
    nlohmann::json j;
    j["precision"] = report.precision;
    j["recall"] = report.recall;
    j["f1"] = report.f1;
    j["detected_count"] = report.detected_count;
    j["reference_count"] = report.reference_count;
    j["compression"] = report.compression;
    j["matched"] = nlohmann::json::array();
    for (const auto& p : report.matched)
        j["matched"].push_back({{"detected_minute", p.detected_minute},
                                {"reference_minute", p.reference_minute},
                                {"kind", to_string(p.kind)}});
    j["unmatched_detected"] = report.unmatched_detected;
    j["unmatched_reference"] = nlohmann::json::array();
    for (const auto& r : report.unmatched_reference)
        j["unmatched_reference"].push_back({{"minute", r.minute}, {"kind", to_string(r.kind)}});
    return j.dump(2);
}

std::string aggregate_table(const AggregateSummary& s) {
    std::ostringstream os;
    os << "games\tP\tR\tF1\t#\tcompression\n";
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%zu\t%.3f\t%.3f\t%.3f\t%.1f\t%.5f\n", s.games, s.precision,
                  s.recall, s.f1, s.avg_detected, s.avg_compression);
    os << buf;
    return os.str();
}

}  // namespace streamsum
