#include "streamsum/selection.hpp"

#include <algorithm>
#include <cmath>

namespace streamsum {

double term_weight_tf(const TermDistribution& H, const std::string& term) {
    return static_cast<double>(H.count(term));
}

double term_weight_kld(const TermDistribution& H, const TermDistribution& G,
                       const std::string& term, double eps) {
    double h = H.freq(term);
    if (h == 0.0) return 0.0;
    double g = std::max(G.freq(term), eps);
    return h * std::log2(h / g);
}

double term_weight(const TermWeighting& w, const TermDistribution& H, const TermDistribution& G,
                   const std::string& term) {
    if (w.method == SelectorMethod::tf) return term_weight_tf(H, term);
    double v = term_weight_kld(H, G, term, w.smoothing_epsilon);
    return w.kld_clamp ? std::max(v, 0.0) : v;
}

double score_tweet(const Tweet& tweet, const TermWeighting& w, const TermDistribution& H,
                   const TermDistribution& G) {
    double score = 0.0;
    for (const auto& tok : tokenize(tweet.text, w.min_token_len))
        score += term_weight(w, H, G, tok);
    return score;
}

std::optional<SummaryEntry> select_representative(const SubEvent& sub_event,
                                                  const std::vector<Tweet>& minute_tweets,
                                                  const std::string& lang, const TermWeighting& w,
                                                  const TermDistribution& H,
                                                  const TermDistribution& G) {
    const Tweet* best = nullptr;
    double best_score = 0.0;
    for (const auto& tw : minute_tweets) {
        if (tw.lang != lang) continue;
        double s = score_tweet(tw, w, H, G);
        if (!best || s > best_score ||
            (s == best_score && (tw.timestamp < best->timestamp ||
                                 (tw.timestamp == best->timestamp && tw.id < best->id)))) {
            best = &tw;
            best_score = s;
        }
    }
    if (!best) return std::nullopt;
    SummaryEntry e;
    e.minute = sub_event.minute;
    e.frame_start = sub_event.frame_start;
    e.rate = sub_event.rate;
    e.lang = lang;
    e.tweet_id = best->id;
    e.text = best->text;
    e.score = best_score;
    e.detector = sub_event.detector;
    e.selector = w.method;
    return e;
}

}  // namespace streamsum
