// Batch front end: one subcommand per pipeline stage.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "disaff/disaff.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace disaff;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitMissingFile = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitInvariant = 4;

// Keys that name files; relative values in a config file resolve against the
// config file's directory.
const std::set<std::string> kPathKeys = {
    "tweets",   "annotations", "news",  "surveys",         "counts",          "verdicts", "peaks",
    "keywords", "entities",    "synonyms", "political_model", "sentiment_model", "model",    "out",
};

const std::set<std::string> kValueKeys = {
    "task",    "algorithm",        "C",         "alpha",     "lambda",    "projection", "bias",
    "stemming", "min_annotations", "folds",     "exclude_retweets", "indicator", "daily", "half_open",
    "interval", "window",          "k",         "seed",
};

std::string fmt(double v, const char* spec = "%.6f") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

/// Effective pipeline configuration: defaults, then the --config file, then
/// command-line flags.
class Config {
public:
    void load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw IoError("cannot open config file '" + path + "'");
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error& e) {
            throw ValidationError("config file '" + path + "': " + e.what());
        }
        if (!j.is_object()) throw ValidationError("config file must hold a JSON object");
        const fs::path base = fs::path(path).parent_path();
        for (auto& [key, value] : j.items()) {
            if (kPathKeys.contains(key)) {
                if (!value.is_string()) throw ValidationError("config: '" + key + "' must be a path string");
                fs::path p = value.get<std::string>();
                if (p.is_relative() && !base.empty()) p = base / p;
                values_[key] = p.lexically_normal().string();
            } else if (kValueKeys.contains(key)) {
                values_[key] = value;
            } else {
                throw ValidationError("config: unknown key '" + key + "'");
            }
        }
    }

    void set(const std::string& key, json value) { values_[key] = std::move(value); }

    bool has(const std::string& key) const { return values_.contains(key); }

    template <class T>
    T get(const std::string& key, T fallback) const {
        if (!has(key)) return fallback;
        try {
            return values_.at(key).get<T>();
        } catch (const json::exception&) {
            throw ValidationError("config: '" + key + "' has the wrong type");
        }
    }

    std::string path(const std::string& key) const {
        if (!has(key)) throw ValidationError("missing required input --" + flag_name(key));
        return get<std::string>(key, "");
    }

    /// Input file that must exist.
    std::string input(const std::string& key) const {
        const auto p = path(key);
        if (!fs::is_regular_file(p)) throw IoError("input file not found: " + p);
        return p;
    }

    /// Hash of everything but the listed (output) keys.
    std::uint64_t hash(const std::set<std::string>& skip) const {
        json kept = values_;
        for (const auto& k : skip) kept.erase(k);
        return util::fnv1a64(kept.dump());
    }

    static std::string flag_name(std::string key) {
        std::replace(key.begin(), key.end(), '_', '-');
        return key;
    }

private:
    json values_ = json::object();
};

struct Run {
    std::string command;
    Config config;
    std::uint64_t seed = 1;
    bool deterministic = false;
    unsigned threads = 0;
    std::vector<std::string> inputs;
    std::set<std::string> outputs;
};

std::string header(const Run& run) {
    std::ostringstream h;
    h << "# disaff " << kVersion << '\n';
    h << "# command " << run.command << '\n';
    h << "# config " << learners::detail::hex64(run.config.hash(run.outputs)) << '\n';
    h << "# seed " << run.seed << '\n';
    if (!run.deterministic) {
        const auto now = std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
        h << "# generated " << util::format_timestamp(now) << '\n';
    }
    return h.str();
}

std::ifstream open_input(Run& run, const std::string& key) {
    const auto p = run.config.input(key);
    run.inputs.push_back(p);
    std::ifstream in(p);
    if (!in) throw IoError("cannot open '" + p + "'");
    return in;
}

/// Writes header + body; "-" or an absent key goes to stdout. Refuses to
/// overwrite an input.
void emit(const Run& run, const std::string& key, const std::string& body, bool required = false) {
    if (!run.config.has(key) || run.config.get<std::string>(key, "") == "-") {
        if (required) throw ValidationError("missing required output --" + Config::flag_name(key));
        std::cout << header(run) << body;
        return;
    }
    const auto p = run.config.get<std::string>(key, "");
    for (const auto& in : run.inputs) {
        std::error_code ec;
        if (fs::exists(p) && fs::equivalent(p, in, ec)) {
            throw ValidationError("output --" + Config::flag_name(key) + " would overwrite input " + in);
        }
    }
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + p + "'");
    out << header(run) << body;
    if (!out) throw IoError("write failed for '" + p + "'");
}

learners::TrainConfig train_config(const Config& c) {
    const auto name = c.get<std::string>("algorithm", "pa");
    const auto alg = learners::parse_algorithm(name);
    if (!alg) throw ValidationError("unknown algorithm '" + name + "' (pa, alma, pegasos)");
    learners::Hyperparameters h;
    h.C = c.get<double>("C", h.C);
    h.alpha = c.get<double>("alpha", h.alpha);
    h.lambda = c.get<double>("lambda", h.lambda);
    h.projection = c.get<bool>("projection", h.projection);
    h.bias = c.get<bool>("bias", h.bias);
    learners::validate(*alg, h);
    return {*alg, h};
}

chain::Task task_of(const Config& c) {
    const auto name = c.get<std::string>("task", "political");
    const auto t = chain::parse_task(name);
    if (!t) throw ValidationError("unknown task '" + name + "' (political, sentiment)");
    return *t;
}

features::NormalizationConfig normalization(Run& run) {
    std::vector<std::pair<std::string, std::string>> synonyms;
    std::vector<std::string> entities;
    if (run.config.has("synonyms")) {
        auto in = open_input(run, "synonyms");
        synonyms = features::load_synonyms(in);
    }
    if (run.config.has("entities")) {
        auto in = open_input(run, "entities");
        entities = features::load_lines(in);
    }
    return features::NormalizationConfig(synonyms, entities, run.config.get<bool>("stemming", true));
}

std::vector<corpus::Tweet> load_tweets(Run& run) {
    auto in = open_input(run, "tweets");
    return corpus::parse_tweets(in);
}

struct TaskData {
    std::vector<std::string> texts;
    std::vector<int> labels;
};

/// Aggregated crowd labels turned into +1/-1 targets for one task.
TaskData task_data(Run& run, chain::Task task) {
    const auto tweets = load_tweets(run);
    auto in = open_input(run, "annotations");
    const auto annotations = corpus::parse_annotations(in);
    const auto min_ann = run.config.get<std::size_t>("min_annotations", 3);
    const auto agg = corpus::aggregate_labels(annotations, tweets, {min_ann});
    const auto& rep = agg.report;
    std::cerr << "labels: " << rep.kept_political << " political, " << rep.kept_non_political
              << " non-political, " << rep.with_sentiment << " with sentiment; discarded "
              << rep.discarded_disagreement << " (political disagreement), " << rep.too_few_annotations.size()
              << " (too few annotations)\n";
    TaskData d;
    for (const auto& lt : agg.labeled) {
        if (task == chain::Task::political) {
            d.texts.push_back(lt.tweet.text);
            d.labels.push_back(lt.political ? 1 : -1);
        } else if (lt.sentiment) {
            d.texts.push_back(lt.tweet.text);
            d.labels.push_back(*lt.sentiment == corpus::Sentiment::negative ? 1 : -1);
        }
    }
    if (d.texts.empty()) throw ValidationError("no labelled examples for task " + std::string{chain::to_string(task)});
    return d;
}

int cmd_alpha(Run& run) {
    auto in = open_input(run, "annotations");
    const auto annotations = corpus::parse_annotations(in);
    std::ostringstream body;
    body << "variable,alpha\n";
    body << "political," << fmt(corpus::krippendorff_alpha(annotations, corpus::CodedVariable::political)) << '\n';
    body << "sentiment," << fmt(corpus::krippendorff_alpha(annotations, corpus::CodedVariable::sentiment)) << '\n';
    emit(run, "out", body.str());
    return 0;
}

int cmd_train(Run& run) {
    const auto task = task_of(run.config);
    const auto tc = train_config(run.config);
    const auto norm = normalization(run);
    const auto data = task_data(run, task);
    const auto t = chain::train_stage(task, data.texts, data.labels, tc, run.seed, norm);
    std::ostringstream model, vocab;
    learners::write_model(model, t.stage.model);
    learners::write_vocabulary(vocab, t.stage.vocabulary);
    emit(run, "model", model.str(), true);
    const auto model_path = run.config.get<std::string>("model", "");
    Run vocab_run = run;
    vocab_run.config.set("model", model_path + ".vocab");
    emit(vocab_run, "model", vocab.str(), true);
    std::cerr << learners::display_name(tc.algorithm) << " " << chain::to_string(task) << ": " << t.presented
              << " examples, " << t.updates << " updates, " << t.skipped_zero << " empty, vocabulary "
              << t.stage.vocabulary.size() << '\n';
    return 0;
}

int cmd_eval(Run& run) {
    const auto task = task_of(run.config);
    const auto norm = normalization(run);
    std::vector<learners::Algorithm> algorithms;
    const auto name = run.config.get<std::string>("algorithm", "pa");
    if (name == "all") {
        algorithms = {learners::Algorithm::pa, learners::Algorithm::alma, learners::Algorithm::pegasos};
    } else {
        algorithms = {train_config(run.config).algorithm};
    }
    const auto folds = run.config.get<std::size_t>("folds", 10);
    const auto data = task_data(run, task);
    const auto docs = chain::task_corpus(task, data.texts, norm);
    const auto vocab = features::build_vocabulary(docs);
    const auto examples = chain::task_examples(task, docs, data.labels, vocab);

    std::ostringstream body;
    body << "Classifier,Fold,Accuracy,F-Measure,Global time\n";
    const auto time = [&](double s) { return run.deterministic ? std::string{"NA"} : fmt(s, "%.4f"); };
    for (const auto alg : algorithms) {
        auto cfg = train_config(run.config);
        cfg.algorithm = alg;
        const auto rep = learners::kfold_evaluate(examples, cfg, folds, run.seed);
        const std::string label{learners::display_name(alg)};
        for (std::size_t f = 0; f < rep.folds.size(); ++f) {
            const auto& r = rep.folds[f];
            body << label << ',' << f + 1 << ',' << fmt(r.accuracy) << ',' << fmt(r.f_measure) << ','
                 << time(r.seconds) << '\n';
        }
        body << label << ",mean," << fmt(rep.accuracy_mean) << ',' << fmt(rep.f_mean) << ','
             << time(rep.seconds_mean) << '\n';
        body << label << ",std," << fmt(rep.accuracy_std) << ',' << fmt(rep.f_std) << ',' << time(rep.seconds_std)
             << '\n';
    }
    emit(run, "out", body.str());
    return 0;
}

chain::Stage load_stage(Run& run, const std::string& key) {
    auto min = open_input(run, key);
    auto model = learners::read_model(min);
    const auto vocab_path = run.config.path(key) + ".vocab";
    if (!fs::is_regular_file(vocab_path)) throw IoError("vocabulary file not found: " + vocab_path);
    std::ifstream vin(vocab_path);
    run.inputs.push_back(vocab_path);
    return {std::move(model), learners::read_vocabulary(vin)};
}

int cmd_chain(Run& run) {
    if (!run.config.has("verdicts") && !run.config.has("counts")) {
        throw ValidationError("chain needs --verdicts and/or --counts");
    }
    const auto norm = normalization(run);
    auto kin = open_input(run, "keywords");
    auto keywords = chain::make_keyword_set(features::load_lines(kin), norm);
    auto config = chain::make_chain_config(load_stage(run, "political_model"), load_stage(run, "sentiment_model"),
                                           std::move(keywords), norm);
    const auto tweets = load_tweets(run);
    const auto result =
        chain::run_chain(tweets, config, {run.config.get<bool>("exclude_retweets", true), run.threads});
    std::size_t political = 0, relevant = 0;
    for (const auto& [d, c] : result.counts) {
        if (c.relevant > c.political || c.political > c.total) throw InvariantError("daily counts are not nested");
        political += c.political;
        relevant += c.relevant;
    }
    if (run.config.has("verdicts")) {
        std::ostringstream body;
        for (const auto& v : result.verdicts) chain::write_verdict(body, v);
        emit(run, "verdicts", body.str());
    }
    if (run.config.has("counts")) {
        std::ostringstream body;
        chain::write_counts(body, result.counts);
        emit(run, "counts", body.str());
    }
    std::cerr << "chain: " << result.verdicts.size() << " tweets (" << result.retweets_excluded
              << " retweets excluded), " << political << " political, " << relevant << " relevant\n";
    return 0;
}

/// Daily counts from a counts file, or rebuilt from verdicts plus the tweet
/// corpus that dates them.
chain::DailyCounts load_counts(Run& run) {
    if (run.config.has("counts")) {
        auto in = open_input(run, "counts");
        return chain::read_counts(in);
    }
    if (!run.config.has("verdicts")) throw ValidationError("need --counts, or --verdicts with --tweets");
    auto vin = open_input(run, "verdicts");
    const auto verdicts = chain::read_verdicts(vin);
    const auto tweets = load_tweets(run);
    std::unordered_map<std::string, Date> date_of;
    for (const auto& t : tweets) date_of.emplace(t.id, t.date());
    chain::DailyCounts counts;
    for (const auto& v : verdicts) {
        const auto it = date_of.find(v.tweet_id);
        if (it == date_of.end()) throw ValidationError("verdict for unknown tweet id '" + v.tweet_id + "'");
        auto& c = counts[it->second];
        ++c.total;
        c.political += v.political;
        c.relevant += v.relevant;
    }
    return counts;
}

std::vector<corpus::Indicator> indicators(const Config& c, std::string fallback) {
    const auto name = c.get<std::string>("indicator", std::move(fallback));
    if (name == "both") return {corpus::Indicator::inefficacy, corpus::Indicator::no_vote};
    std::string upper = name;
    for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    const auto ind = corpus::parse_indicator(upper);
    if (!ind) throw ValidationError("unknown indicator '" + name + "' (inefficacy, no_vote, both)");
    return {*ind};
}

analysis::IntervalSpec interval_of(const Config& c, const std::string& text) {
    auto spec = analysis::parse_interval(text);
    spec.half_open = c.get<bool>("half_open", false);
    return spec;
}

struct SurveyAligned {
    std::vector<double> ratio;
    std::vector<double> survey;
    std::vector<Date> dates;
    std::size_t dropped = 0;
};

SurveyAligned align(const chain::DailyCounts& counts, const std::vector<corpus::SurveyPoint>& surveys,
                    corpus::Indicator ind, const analysis::IntervalSpec& interval) {
    std::map<Date, double> value;
    for (const auto& p : surveys) {
        if (p.indicator == ind) value[p.date] = p.value;
    }
    std::vector<Date> anchors;
    for (const auto& [d, v] : value) anchors.push_back(d);
    if (anchors.empty()) throw ValidationError("no survey values for " + std::string{corpus::to_string(ind)});
    const auto rs = analysis::build_ratio_series(counts, anchors, interval);
    SurveyAligned out;
    for (const auto& p : rs.series.points()) {
        out.dates.push_back(p.date);
        out.ratio.push_back(p.value);
        out.survey.push_back(value.at(p.date));
    }
    out.dropped = rs.dropped.size();
    for (const auto& d : rs.dropped) {
        std::cerr << corpus::to_string(ind) << ' ' << interval.label() << ": dropped " << util::format_date(d.date)
                  << " (" << analysis::to_string(d.reason) << ")\n";
    }
    return out;
}

std::vector<corpus::SurveyPoint> load_surveys(Run& run) {
    auto in = open_input(run, "surveys");
    return corpus::parse_surveys(in);
}

int cmd_series(Run& run) {
    const auto counts = load_counts(run);
    std::ostringstream body;
    if (run.config.get<bool>("daily", false)) {
        body << "date,ratio\n";
        for (const auto& p : analysis::build_daily_series(counts).points()) {
            body << util::format_date(p.date) << ',' << fmt(p.value) << '\n';
        }
    } else {
        const auto surveys = load_surveys(run);
        const auto interval = interval_of(run.config, run.config.get<std::string>("interval", "1:14"));
        body << "indicator,interval,date,ratio,survey\n";
        for (const auto ind : indicators(run.config, "inefficacy")) {
            const auto a = align(counts, surveys, ind, interval);
            for (std::size_t i = 0; i < a.dates.size(); ++i) {
                body << corpus::to_string(ind) << ',' << interval.label() << ',' << util::format_date(a.dates[i])
                     << ',' << fmt(a.ratio[i]) << ',' << fmt(a.survey[i], "%.2f") << '\n';
            }
        }
    }
    emit(run, "out", body.str());
    return 0;
}

int cmd_correlate(Run& run) {
    const auto counts = load_counts(run);
    const auto surveys = load_surveys(run);
    std::vector<std::string> intervals{"1:14", "1:7", "7:14"};
    if (run.config.has("interval")) intervals = {run.config.get<std::string>("interval", "")};
    std::ostringstream body;
    body << "indicator,interval,n,r,ci_low,ci_high,p_value,dropped\n";
    for (const auto ind : indicators(run.config, "both")) {
        for (const auto& text : intervals) {
            const auto interval = interval_of(run.config, text);
            const auto a = align(counts, surveys, ind, interval);
            const auto c = analysis::correlate(a.ratio, a.survey);
            body << corpus::to_string(ind) << ',' << interval.label() << ',' << c.n << ',' << fmt(c.r) << ','
                 << fmt(c.ci_low) << ',' << fmt(c.ci_high) << ',' << fmt(c.p_value, "%.6g") << ',' << a.dropped
                 << '\n';
        }
    }
    emit(run, "out", body.str());
    return 0;
}

analysis::PeakOptions peak_options(const Config& c) {
    analysis::PeakOptions o;
    const auto window = c.get<long long>("window", 10);
    if (window < 2) throw ValidationError("--window must be >= 2");
    o.window = static_cast<std::size_t>(window);
    o.k = c.get<double>("k", 2.0);
    return o;
}

int cmd_peaks(Run& run) {
    const auto options = peak_options(run.config);
    const auto counts = load_counts(run);
    std::ostringstream body;
    body << "date,value,mean,std\n";
    for (const auto& p : analysis::detect_peaks(analysis::build_daily_series(counts), options)) {
        body << util::format_date(p.date) << ',' << fmt(p.value) << ',' << fmt(p.local_mean) << ','
             << fmt(p.local_std) << '\n';
    }
    emit(run, "out", body.str());
    return 0;
}

std::vector<Date> read_peak_dates(std::istream& in) {
    util::LineReader reader(in);
    std::string line;
    std::vector<Date> out;
    if (!reader.next(line)) return out;
    const auto head = util::split_csv(line);
    if (!head) throw ParseError(reader.line_number(), "malformed header");
    const auto col = std::find(head->begin(), head->end(), "date");
    if (col == head->end()) throw ParseError(reader.line_number(), "peaks header lacks column 'date'");
    const auto idx = static_cast<std::size_t>(col - head->begin());
    while (reader.next(line)) {
        const auto f = util::split_csv(line);
        if (!f || f->size() != head->size()) throw ParseError(reader.line_number(), "malformed row");
        const auto d = util::parse_date((*f)[idx]);
        if (!d) throw ParseError(reader.line_number(), "unparseable date '" + (*f)[idx] + "'");
        out.push_back(*d);
    }
    return out;
}

int cmd_link_news(Run& run) {
    auto pin = open_input(run, "peaks");
    const auto peaks = read_peak_dates(pin);
    auto nin = open_input(run, "news");
    const auto news = corpus::parse_news(nin);
    auto tweets = load_tweets(run);
    if (run.config.has("verdicts")) {
        auto vin = open_input(run, "verdicts");
        std::unordered_set<std::string> relevant;
        for (const auto& v : chain::read_verdicts(vin)) {
            if (v.relevant) relevant.insert(v.tweet_id);
        }
        std::erase_if(tweets, [&](const corpus::Tweet& t) { return !relevant.contains(t.id); });
    }
    const auto idf = analysis::build_link_idf(news, tweets);
    std::ostringstream body;
    body << "peak_date,news_date,title,score\n";
    for (const auto d : peaks) {
        try {
            const auto link = analysis::link_news(d, news, tweets, idf);
            body << util::format_date(d) << ',' << util::format_date(link.news.date) << ','
                 << util::quote_csv(link.news.title) << ',' << fmt(link.score) << '\n';
        } catch (const ValidationError& e) {
            std::cerr << "link-news: " << util::format_date(d) << " skipped: " << e.what() << '\n';
        }
    }
    emit(run, "out", body.str());
    return 0;
}

void add_path(CLI::App* sub, Config& cfg, const std::string& key, const std::string& help) {
    sub->add_option_function<std::string>(
        "--" + Config::flag_name(key), [&cfg, key](const std::string& v) { cfg.set(key, v); }, help);
}

void add_learner_options(CLI::App* sub, Config& cfg) {
    sub->add_option_function<std::string>(
        "--task", [&cfg](const std::string& v) { cfg.set("task", v); }, "political or sentiment");
    sub->add_option_function<std::string>(
        "--algorithm", [&cfg](const std::string& v) { cfg.set("algorithm", v); }, "pa, alma or pegasos");
    sub->add_option_function<double>(
        "--C", [&cfg](double v) { cfg.set("C", v); }, "PA aggressiveness cap");
    sub->add_option_function<double>(
        "--alpha", [&cfg](double v) { cfg.set("alpha", v); }, "ALMA alpha in (0, 1]");
    sub->add_option_function<double>(
        "--lambda", [&cfg](double v) { cfg.set("lambda", v); }, "Pegasos regularization");
    sub->add_flag_function(
        "--no-projection", [&cfg](std::int64_t) { cfg.set("projection", false); }, "disable Pegasos projection");
    sub->add_flag_function(
        "--no-bias", [&cfg](std::int64_t) { cfg.set("bias", false); }, "disable the constant feature");
    sub->add_option_function<std::size_t>(
        "--min-annotations", [&cfg](std::size_t v) { cfg.set("min_annotations", v); },
        "annotations needed per tweet (default 3)");
    add_path(sub, cfg, "tweets", "tweet corpus (JSON lines)");
    add_path(sub, cfg, "annotations", "crowd annotations (CSV)");
}

void add_normalization_options(CLI::App* sub, Config& cfg) {
    add_path(sub, cfg, "entities", "entity list removed before sentiment features");
    add_path(sub, cfg, "synonyms", "synonym table (TSV)");
    sub->add_flag_function(
        "--no-stemming", [&cfg](std::int64_t) { cfg.set("stemming", false); }, "disable stemming");
}

void add_counts_source(CLI::App* sub, Config& cfg) {
    add_path(sub, cfg, "counts", "daily counts (CSV)");
    add_path(sub, cfg, "verdicts", "verdicts (JSON lines), used with --tweets when no counts are given");
    add_path(sub, cfg, "tweets", "tweet corpus dating the verdicts");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Political disaffection toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string{kVersion});

    Config flags;
    std::string config_path;
    std::uint64_t seed = 1;
    bool seed_given = false;
    Run run;
    app.add_option("--config", config_path, "JSON pipeline configuration");
    app.add_option_function<std::uint64_t>(
           "--seed", [&](std::uint64_t v) { seed = v, seed_given = true; }, "seed for every random choice")
        ->type_name("U64");
    app.add_option_function<std::string>(
        "--interval", [&](const std::string& v) { flags.set("interval", v); }, "aggregation window a:b in days");
    app.add_option_function<long long>(
        "--window", [&](long long v) { flags.set("window", v); }, "peak neighbourhood width in days");
    app.add_option_function<double>(
        "--k", [&](double v) { flags.set("k", v); }, "peak threshold in local standard deviations");
    app.add_flag("--deterministic", run.deterministic, "omit the timestamp from output headers");
    app.add_option("--threads", run.threads, "worker threads for the chain (0 = all cores)");
    app.fallthrough();

    auto* alpha = app.add_subcommand("alpha", "inter-annotator agreement");
    add_path(alpha, flags, "annotations", "crowd annotations (CSV)");
    add_path(alpha, flags, "out", "output file (default stdout)");

    auto* train = app.add_subcommand("train", "train one chain stage");
    add_learner_options(train, flags);
    add_normalization_options(train, flags);
    add_path(train, flags, "model", "output model file; the vocabulary goes to <model>.vocab");

    auto* eval = app.add_subcommand("eval", "k-fold evaluation report");
    add_learner_options(eval, flags);
    add_normalization_options(eval, flags);
    eval->add_option_function<std::size_t>(
        "--folds", [&](std::size_t v) { flags.set("folds", v); }, "number of folds (default 10)");
    add_path(eval, flags, "out", "output file (default stdout)");

    auto* chain_cmd = app.add_subcommand("chain", "classify tweets and count per day");
    add_path(chain_cmd, flags, "tweets", "tweet corpus (JSON lines)");
    add_path(chain_cmd, flags, "political_model", "political stage model");
    add_path(chain_cmd, flags, "sentiment_model", "sentiment stage model");
    add_path(chain_cmd, flags, "keywords", "generic-speech keywords");
    add_normalization_options(chain_cmd, flags);
    chain_cmd->add_flag_function(
        "--keep-retweets", [&](std::int64_t) { flags.set("exclude_retweets", false); }, "classify retweets too");
    add_path(chain_cmd, flags, "verdicts", "output verdicts (JSON lines)");
    add_path(chain_cmd, flags, "counts", "output daily counts (CSV)");

    auto* series = app.add_subcommand("series", "ratio series, survey-aligned or daily");
    add_counts_source(series, flags);
    add_path(series, flags, "surveys", "survey indicators (CSV)");
    series->add_option_function<std::string>(
        "--indicator", [&](const std::string& v) { flags.set("indicator", v); }, "inefficacy, no_vote or both");
    series->add_flag_function(
        "--daily", [&](std::int64_t) { flags.set("daily", true); }, "one point per day instead");
    series->add_flag_function(
        "--half-open", [&](std::int64_t) { flags.set("half_open", true); }, "exclude the far window end");
    add_path(series, flags, "out", "output file (default stdout)");

    auto* correlate = app.add_subcommand("correlate", "correlation with survey indicators");
    add_counts_source(correlate, flags);
    add_path(correlate, flags, "surveys", "survey indicators (CSV)");
    correlate->add_option_function<std::string>(
        "--indicator", [&](const std::string& v) { flags.set("indicator", v); }, "inefficacy, no_vote or both");
    correlate->add_flag_function(
        "--half-open", [&](std::int64_t) { flags.set("half_open", true); }, "exclude the far window end");
    add_path(correlate, flags, "out", "output file (default stdout)");

    auto* peaks = app.add_subcommand("peaks", "peaks of the daily ratio");
    add_counts_source(peaks, flags);
    add_path(peaks, flags, "out", "output file (default stdout)");

    auto* link = app.add_subcommand("link-news", "headline behind each peak");
    add_path(link, flags, "peaks", "peaks file (CSV with a date column)");
    add_path(link, flags, "news", "news headlines (CSV)");
    add_path(link, flags, "tweets", "tweet corpus (JSON lines)");
    add_path(link, flags, "verdicts", "restrict to tweets judged relevant");
    add_path(link, flags, "out", "output file (default stdout)");

    if (argc > 1 && argv[1][0] != '-' && !app.get_subcommand_no_throw(argv[1])) {
        std::cerr << "error: unknown subcommand '" << argv[1] << "'\n\n" << app.help();
        return kExitUsage;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ConversionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    const std::map<std::string, int (*)(Run&)> commands = {
        {"alpha", cmd_alpha}, {"train", cmd_train},     {"eval", cmd_eval},   {"chain", cmd_chain},
        {"series", cmd_series}, {"correlate", cmd_correlate}, {"peaks", cmd_peaks}, {"link-news", cmd_link_news},
    };
    try {
        run.command = app.get_subcommands().front()->get_name();
        run.outputs = run.command == "train"   ? std::set<std::string>{"model"}
                      : run.command == "chain" ? std::set<std::string>{"verdicts", "counts"}
                                               : std::set<std::string>{"out"};
        if (!config_path.empty()) run.config.load_file(config_path);
        // Flags override the file.
        for (const auto& key : kPathKeys) {
            if (flags.has(key)) run.config.set(key, flags.get<std::string>(key, ""));
        }
        for (const auto& key : kValueKeys) {
            if (flags.has(key)) run.config.set(key, flags.get<json>(key, {}));
        }
        if (seed_given) run.config.set("seed", seed);
        run.seed = run.config.get<std::uint64_t>("seed", 1);
        run.config.set("seed", run.seed);
        if (run.config.has("interval")) analysis::parse_interval(run.config.get<std::string>("interval", ""));
        return commands.at(run.command)(run);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMissingFile;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInvariant;
    }
}
