#include "streamsum/synth.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace streamsum {

namespace {

const std::vector<std::string>& default_vocabulary() {
    static const std::vector<std::string> vocab = {
        "partido", "vamos",  "equipo",  "juego",   "bien",    "ahora",   "hoy",     "jugando",
        "match",   "team",   "playing", "watching", "come",   "great",   "ball",    "pass",
        "jogo",    "time",   "bola",    "agora",   "campo",   "arbitro", "defensa", "ataque",
        "falta",   "corner", "medio",   "banda",   "cambio",  "tecnico", "portero", "keeper",
        "lateral", "primer", "segundo", "tiempo",  "minuto",  "publico", "estadio", "hinchada",
        "copa",    "final",  "grupo",   "tabla",   "puntos",  "rival",   "casa",    "fuera"};
    return vocab;
}

double curve_multiplier(const SynthSpec& spec, std::int64_t minute) {
    double m = 1.0;
    for (const auto& p : spec.audience_curve)
        if (minute >= p.from_minute) m = p.multiplier;
    return m;
}

}  // namespace

SynthOutput generate(const SynthSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    const auto& vocab =
        spec.background_vocabulary.empty() ? default_vocabulary() : spec.background_vocabulary;

    // Zipf weights 1/k over the vocabulary
    std::vector<double> zipf(vocab.size());
    for (std::size_t k = 0; k < vocab.size(); ++k) zipf[k] = 1.0 / static_cast<double>(k + 1);
    std::discrete_distribution<std::size_t> pick_term(zipf.begin(), zipf.end());

    std::vector<double> lang_w;
    for (const auto& [lang, share] : spec.languages) lang_w.push_back(share);
    std::discrete_distribution<std::size_t> pick_lang(lang_w.begin(), lang_w.end());

    std::uniform_int_distribution<int> pick_sec(0, 59);
    std::uniform_int_distribution<int> pick_user(1, 5000);
    std::uniform_int_distribution<int> pick_len(4, 9);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    SynthOutput out;
    std::int64_t tweet_seq = 0;
    std::int64_t first_minute = -(spec.warmup_seconds / 60);
    for (std::int64_t minute = first_minute; minute < spec.duration_minutes; ++minute) {
        double rate = spec.base_rate * curve_multiplier(spec, minute);
        const PlantedBurst* burst = nullptr;
        for (const auto& b : spec.planted)
            if (b.minute == minute) burst = &b;
        if (burst) rate *= burst->multiplier;

        std::poisson_distribution<int> n_tweets(rate);
        int n = n_tweets(rng);
        std::vector<Tweet> minute_tweets;
        minute_tweets.reserve(n);
        for (int i = 0; i < n; ++i) {
            Tweet t;
            t.timestamp = spec.start_time + minute * 60 + pick_sec(rng);
            t.lang = spec.languages[pick_lang(rng)].first;
            t.user = "u" + std::to_string(pick_user(rng));
            std::ostringstream text;
            if (burst && unit(rng) < 0.6) text << burst->term << ' ';
            int len = pick_len(rng);
            for (int w = 0; w < len; ++w) {
                if (w) text << ' ';
                text << vocab[pick_term(rng)];
            }
            text << " #ca2011";
            t.text = text.str();
            minute_tweets.push_back(std::move(t));
        }
        std::stable_sort(minute_tweets.begin(), minute_tweets.end(),
                         [](const Tweet& a, const Tweet& b) { return a.timestamp < b.timestamp; });
        for (auto& t : minute_tweets) {
            t.id = "t" + std::to_string(++tweet_seq);
            out.tweets.push_back(std::move(t));
        }
    }

    for (const auto& b : spec.planted)
        out.reference.push_back({b.minute, b.kind, b.term});
    std::stable_sort(out.reference.begin(), out.reference.end(),
                     [](const auto& a, const auto& b) { return a.minute < b.minute; });
    return out;
}

}  // namespace streamsum
