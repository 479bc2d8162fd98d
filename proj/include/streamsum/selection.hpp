#pragma once

#include <optional>
#include <string>
#include <vector>

#include "streamsum/lexicon.hpp"
#include "streamsum/types.hpp"

namespace streamsum {

struct TermWeighting {
    SelectorMethod method = SelectorMethod::kld;
    double smoothing_epsilon = 1e-6;  // floor on G(t) relative frequency
    bool kld_clamp = false;           // clamp negative weights to 0
    int min_token_len = 2;
};

// raw occurrence count of term within the sub-event minute
double term_weight_tf(const TermDistribution& H, const std::string& term);

// H(t) * log2(H(t) / max(G(t), eps)); 0 when H(t) = 0
double term_weight_kld(const TermDistribution& H, const TermDistribution& G,
                       const std::string& term, double eps);

double term_weight(const TermWeighting& w, const TermDistribution& H, const TermDistribution& G,
                   const std::string& term);

// sum of term weights over token occurrences (a repeated term counts each time)
double score_tweet(const Tweet& tweet, const TermWeighting& w, const TermDistribution& H,
                   const TermDistribution& G);

// Argmax-score tweet of the given language among minute_tweets; ties broken
// by earlier timestamp then lexicographically smaller id. Empty when no
// tweet of that language is present.
std::optional<SummaryEntry> select_representative(const SubEvent& sub_event,
                                                  const std::vector<Tweet>& minute_tweets,
                                                  const std::string& lang, const TermWeighting& w,
                                                  const TermDistribution& H,
                                                  const TermDistribution& G);

}  // namespace streamsum
