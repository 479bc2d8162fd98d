#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "streamsum/evaluation.hpp"
#include "streamsum/ingestion.hpp"
#include "streamsum/pipeline.hpp"
#include "streamsum/synth.hpp"

using namespace streamsum;

namespace {

// epoch seconds, or ISO-8601 "YYYY-MM-DDTHH:MM:SS" (UTC, optional trailing Z)
Timestamp parse_time(const std::string& s) {
    if (!s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-') &&
        s.find('T') == std::string::npos) {
        return std::stoll(s);
    }
    std::tm tm = {};
    std::istringstream is(s);
    is >> std::get_time(&tm, "%Y-%m-%dT%H:%M:%S");
    if (is.fail()) throw std::invalid_argument("cannot parse time: " + s);
    return static_cast<Timestamp>(timegm(&tm));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, sep))
        if (!part.empty()) out.push_back(part);
    return out;
}

struct SummarizeArgs {
    std::string input = "-";
    std::string output = "-";
    std::string stats_path;
    std::string start_time;
    std::string end_time;
    Timestamp warmup = 900;
    std::string detector = "outliers";
    double increase_factor = 1.7;
    std::string periods = "10,20,30,60";
    int bin = 60;
    double quantile = 0.90;
    std::string selector = "kld";
    bool kld_clamp = false;
    int min_token_len = 2;
    std::string langs = "es,en,pt";
    bool strict_order = false;
    double realtime_factor = 0.0;  // 0 = as fast as possible
};

int cmd_summarize(const SummarizeArgs& a) {
    PipelineConfig cfg;
    cfg.schedule.start_time = parse_time(a.start_time);
    cfg.schedule.warmup_seconds = a.warmup;
    if (!a.end_time.empty()) cfg.schedule.end_time = parse_time(a.end_time);
    cfg.detector.method = detector_from_string(a.detector);
    cfg.detector.increase_factor = a.increase_factor;
    cfg.detector.increase_periods.clear();
    for (const auto& p : split(a.periods, ',')) cfg.detector.increase_periods.push_back(std::stoi(p));
    cfg.detector.outlier_period = a.bin;
    cfg.detector.outlier_quantile = a.quantile;
    cfg.detector.warmup_seconds = a.warmup;
    cfg.selector.method = selector_from_string(a.selector);
    cfg.selector.kld_clamp = a.kld_clamp;
    cfg.selector.min_token_len = a.min_token_len;
    cfg.languages = split(a.langs, ',');

    std::ifstream infile;
    std::istream* in = &std::cin;
    if (a.input != "-") {
        infile.open(a.input);
        if (!infile) {
            std::cerr << "error: cannot open input: " << a.input << "\n";
            return 2;
        }
        in = &infile;
    }
    std::ofstream outfile;
    std::ostream* out = &std::cout;
    if (a.output != "-") {
        outfile.open(a.output);
        if (!outfile) {
            std::cerr << "error: cannot open output: " << a.output << "\n";
            return 2;
        }
        out = &outfile;
    }

    Pipeline pipeline(cfg, [&](const SummaryEntry& e) {
        *out << summary_entry_to_json_line(e) << '\n';
        out->flush();  // incremental: each entry visible as soon as its minute closes
    });

    ReplayOptions ropts;
    ropts.order = order_mode_from_env(a.strict_order ? OrderMode::strict : OrderMode::lenient);
    if (a.realtime_factor > 0) {
        ropts.clock = ClockMode::realtime_scaled;
        ropts.scale_factor = a.realtime_factor;
    }
    try {
        replay(*in, ropts, [&](const Tweet& t) { pipeline.on_tweet(t); });
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    pipeline.finish();

    std::string stats = run_stats_to_json(pipeline.stats());
    if (a.stats_path.empty()) {
        std::cerr << stats << "\n";
    } else {
        std::ofstream sf(a.stats_path);
        sf << stats << "\n";
    }
    return 0;
}

struct EvaluateArgs {
    std::string summary;
    std::string reference;
    std::int64_t tolerance = 1;
    std::int64_t total_tweets = 0;
    std::string report_path;
};

int cmd_evaluate(const EvaluateArgs& a) {
    std::ifstream sf(a.summary);
    if (!sf) {
        std::cerr << "error: cannot open summary: " << a.summary << "\n";
        return 2;
    }
    std::set<std::int64_t> minutes;
    std::int64_t selected = 0;
    std::string line;
    try {
        while (std::getline(sf, line)) {
            if (line.empty()) continue;
            SummaryEntry e = parse_summary_line(line);
            minutes.insert(e.minute);
            ++selected;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: bad summary record: " << e.what() << "\n";
        return 2;
    }

    std::vector<ReferenceAnnotation> reference;
    try {
        reference = load_reference_file(a.reference);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::vector<std::int64_t> detected(minutes.begin(), minutes.end());
    MatchReport rep = match(detected, reference, a.tolerance);
    if (a.total_tweets > 0)
        rep.compression = static_cast<double>(selected) / static_cast<double>(a.total_tweets);

    if (!a.report_path.empty()) {
        std::ofstream rf(a.report_path);
        rf << report_to_json(rep) << "\n";
    }
    std::cout << aggregate_table(aggregate({rep}));
    auto kinds = per_kind_recall(rep, reference);
    for (const auto& [kind, r] : kinds) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.2f", r);
        std::cout << "recall[" << to_string(kind) << "]\t" << buf << "\n";
    }
    return 0;
}

struct GenerateArgs {
    std::string out = "tweets.jsonl";
    std::string ref = "reference.csv";
    std::uint64_t seed = 1;
    std::int64_t duration = 90;
    double base_rate = 30.0;
    std::vector<std::string> bursts;  // minute:mult:term:kind
    std::string langs = "es=0.70,en=0.15,pt=0.15";
    std::string start_time = "1310000000";
    Timestamp warmup = 900;
    std::vector<std::string> curve;  // minute:mult
};

int cmd_generate(const GenerateArgs& a) {
    SynthSpec spec;
    spec.seed = a.seed;
    spec.duration_minutes = a.duration;
    spec.base_rate = a.base_rate;
    spec.start_time = parse_time(a.start_time);
    spec.warmup_seconds = a.warmup;
    spec.languages.clear();
    for (const auto& part : split(a.langs, ',')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--langs expects lang=share");
        spec.languages.emplace_back(part.substr(0, eq), std::stod(part.substr(eq + 1)));
    }
    for (const auto& b : a.bursts) {
        auto f = split(b, ':');
        if (f.size() < 3) throw CLI::ValidationError("--burst expects minute:mult:term[:kind]");
        PlantedBurst pb;
        pb.minute = std::stoll(f[0]);
        pb.multiplier = std::stod(f[1]);
        pb.term = f[2];
        pb.kind = f.size() > 3 ? annotation_kind_from_string(f[3]) : AnnotationKind::goal;
        spec.planted.push_back(std::move(pb));
    }
    for (const auto& c : a.curve) {
        auto f = split(c, ':');
        if (f.size() != 2) throw CLI::ValidationError("--curve expects minute:mult");
        spec.audience_curve.push_back({std::stoll(f[0]), std::stod(f[1])});
    }

    SynthOutput out = generate(spec);
    std::ofstream tf(a.out);
    if (!tf) {
        std::cerr << "error: cannot open output: " << a.out << "\n";
        return 2;
    }
    for (const auto& t : out.tweets) tf << tweet_to_json_line(t) << '\n';
    std::ofstream rf(a.ref);
    if (!rf) {
        std::cerr << "error: cannot open output: " << a.ref << "\n";
        return 2;
    }
    save_reference(rf, out.reference);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Real-time summarization of scheduled events from short-message streams"};
    app.require_subcommand(1);

    SummarizeArgs sa;
    auto* sum = app.add_subcommand("summarize", "Detect sub-events and select representative tweets");
    sum->add_option("--input,-i", sa.input, "Tweet JSONL path, or - for stdin");
    sum->add_option("--output,-o", sa.output, "Summary JSONL path, or - for stdout");
    sum->add_option("--stats", sa.stats_path, "Run statistics JSON path (default: stderr)");
    sum->add_option("--start-time", sa.start_time, "Event start (epoch seconds or ISO-8601)")
        ->required();
    sum->add_option("--end-time", sa.end_time, "Explicit event end (default: until exhausted)");
    sum->add_option("--warmup", sa.warmup, "Warm-up seconds before start (default 900)");
    sum->add_option("--detector", sa.detector, "increase|outliers (default outliers)");
    sum->add_option("--increase-factor", sa.increase_factor, "Increase threshold (default 1.7)");
    sum->add_option("--periods", sa.periods, "Increase frame lengths, seconds (default 10,20,30,60)");
    sum->add_option("--bin", sa.bin, "Outlier frame length, seconds (default 60)");
    sum->add_option("--quantile", sa.quantile, "Outlier quantile (default 0.90)");
    sum->add_option("--selector", sa.selector, "tf|kld (default kld)");
    sum->add_flag("--kld-clamp", sa.kld_clamp, "Clamp negative KLD term weights to 0");
    sum->add_option("--min-token-len", sa.min_token_len, "Minimum token length (default 2)");
    sum->add_option("--langs", sa.langs, "Summary languages (default es,en,pt)");
    sum->add_flag("--strict-order", sa.strict_order, "Reject out-of-order input records");
    sum->add_option("--realtime-factor", sa.realtime_factor,
                    "Replay at stream speed divided by this factor (default: as fast as possible)");

    EvaluateArgs ea;
    auto* eval = app.add_subcommand("evaluate", "Match a summary against reference annotations");
    eval->add_option("--summary", ea.summary, "Summary JSONL path")->required();
    eval->add_option("--reference", ea.reference, "Reference CSV path")->required();
    eval->add_option("--tolerance", ea.tolerance, "Minute tolerance (default 1)");
    eval->add_option("--total-tweets", ea.total_tweets, "Stream size, for the compression rate");
    eval->add_option("--report", ea.report_path, "Write the match report JSON here");

    GenerateArgs ga;
    auto* gen = app.add_subcommand("generate", "Generate a synthetic game stream");
    gen->add_option("--out", ga.out, "Tweet JSONL output path");
    gen->add_option("--ref", ga.ref, "Reference CSV output path");
    gen->add_option("--seed", ga.seed, "RNG seed");
    gen->add_option("--duration", ga.duration, "Game length, minutes (default 90)");
    gen->add_option("--base-rate", ga.base_rate, "Poisson mean, tweets/minute (default 30)");
    gen->add_option("--burst", ga.bursts, "Planted sub-event, minute:mult:term[:kind]");
    gen->add_option("--langs", ga.langs, "Language shares, lang=share,... (sum to 1)");
    gen->add_option("--start-time", ga.start_time, "Event start (epoch or ISO-8601)");
    gen->add_option("--warmup", ga.warmup, "Seconds of pre-start stream (default 900)");
    gen->add_option("--curve", ga.curve, "Audience step, minute:mult");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sum->parsed()) return cmd_summarize(sa);
        if (eval->parsed()) return cmd_evaluate(ea);
        if (gen->parsed()) return cmd_generate(ga);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
