// Writes a seeded synthetic fixture: annotated training tweets, a dated
// corpus with a planted disaffection curve and spikes, and news headlines.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "disaff/disaff.hpp"
#include "disaff/synthetic.hpp"

namespace fs = std::filesystem;
using namespace disaff;

namespace {

// One story per spike; the words are appended to that day's relevant tweets
// and the headline is published that day.
struct Story {
    const char* words;
    const char* headline;
};

constexpr Story kStories[] = {
    {"rimborsi elettorali scandalo", "Scandalo rimborsi elettorali, indagati tesorieri"},
    {"vitalizi privilegi", "Vitalizi, la camera rinvia il taglio dei privilegi"},
    {"legge elettorale porcellum", "Legge elettorale, salta l'accordo sul porcellum"},
    {"finanziamento pubblico partiti", "Finanziamento pubblico ai partiti, voto rinviato"},
};

void write_file(const fs::path& p, const std::string& body) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + p.string());
    out << body;
}

std::string header(std::uint64_t seed) {
    return "# disaff-synth " + std::string{kVersion} + "\n# seed " + std::to_string(seed) + "\n";
}

/// Three coders per tweet, each right with the given probabilities.
std::vector<corpus::Annotation> annotate(util::Rng& rng, const std::string& id, const synthetic::TextLabels& l,
                                         double political_accuracy, double sentiment_accuracy) {
    std::vector<corpus::Annotation> out;
    for (int c = 0; c < 3; ++c) {
        corpus::Annotation a;
        a.tweet_id = id;
        a.coder_id = "c" + std::to_string(rng.below(40));
        while (std::any_of(out.begin(), out.end(), [&](const auto& o) { return o.coder_id == a.coder_id; })) {
            a.coder_id = "c" + std::to_string(rng.below(40));
        }
        a.political = rng.uniform() < political_accuracy ? l.political : !l.political;
        if (a.political) {
            const bool negative = rng.uniform() < sentiment_accuracy ? l.negative : !l.negative;
            if (rng.below(20) != 0) a.sentiment = negative ? corpus::Sentiment::negative : corpus::Sentiment::non_negative;
        }
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Synthetic fixture generator"};
    std::string out_dir = "fixture";
    std::uint64_t seed = 1;
    std::size_t train_size = 3000;
    std::size_t days = 225;
    std::size_t political_per_day = 60;
    std::size_t other_per_day = 40;
    std::string start = "2012-03-20";
    std::vector<std::size_t> spikes = {40, 110, 170};
    app.add_option("--out-dir", out_dir, "output directory");
    app.add_option("--seed", seed, "generator seed");
    app.add_option("--train-size", train_size, "annotated training tweets");
    app.add_option("--days", days, "corpus length in days");
    app.add_option("--political-per-day", political_per_day, "political tweets per day");
    app.add_option("--other-per-day", other_per_day, "other tweets per day");
    app.add_option("--start", start, "first corpus day (YYYY-MM-DD)");
    app.add_option("--spike-days", spikes, "day offsets of the planted spikes");
    CLI11_PARSE(app, argc, argv);

    try {
        const auto start_date = util::parse_date(start);
        if (!start_date) throw ValidationError("bad --start date");
        if (spikes.size() > std::size(kStories)) throw ValidationError("at most 4 spikes");
        std::sort(spikes.begin(), spikes.end());
        fs::create_directories(out_dir);
        const fs::path dir = out_dir;

        // Annotated training set.
        util::Rng rng(learners::detail::mix_seed(seed));
        const auto texts = synthetic::labeled_texts(train_size, learners::detail::mix_seed(seed + 1));
        std::ostringstream tweets;
        std::vector<corpus::Annotation> annotations;
        for (std::size_t i = 0; i < texts.size(); ++i) {
            const std::string id = "a" + std::to_string(i + 1);
            corpus::write_tweet(tweets, {id, "u" + std::to_string(rng.below(500)),
                                         Timestamp{*start_date} - std::chrono::days{30} + std::chrono::seconds{rng.below(86400 * 30)},
                                         texts[i].text});
            for (auto& a : annotate(rng, id, texts[i].labels, 0.97, 0.92)) annotations.push_back(std::move(a));
        }
        write_file(dir / "train_tweets.jsonl", header(seed) + tweets.str());
        std::ostringstream ann_body;
        corpus::write_annotations(ann_body, annotations);
        write_file(dir / "annotations.csv", header(seed) + ann_body.str());

        // Dated corpus.
        synthetic::PlantedOptions o;
        o.start = *start_date;
        o.days = days;
        o.political_per_day = political_per_day;
        o.other_per_day = other_per_day;
        o.spike_days = spikes;
        o.retweet_share = 0.05;
        o.seed = learners::detail::mix_seed(seed + 2);
        auto pc = synthetic::planted_corpus(o);
        for (std::size_t i = 0; i < pc.tweets.size(); ++i) {
            auto& t = pc.tweets[i];
            const auto day = static_cast<std::size_t>((t.date() - o.start).count());
            const auto s = std::find(spikes.begin(), spikes.end(), day);
            if (s != spikes.end() && pc.truth[i].relevant()) {
                t.text += ' ';
                t.text += kStories[s - spikes.begin()].words;
            }
        }
        std::ostringstream corpus_body;
        corpus::write_tweets(corpus_body, pc.tweets);
        write_file(dir / "tweets.jsonl", header(seed) + corpus_body.str());
        std::ostringstream truth;
        chain::write_counts(truth, pc.truth_counts);
        write_file(dir / "truth_counts.csv", header(seed) + truth.str());

        // Headlines: filler every day, plus the story on each spike day.
        std::vector<corpus::NewsItem> news;
        for (std::size_t d = 0; d < days; ++d) {
            const Date date = o.start + std::chrono::days{d};
            for (int k = 0; k < 3; ++k) {
                std::string title{synthetic::pick(rng, synthetic::lexicon::kPolitical)};
                title += ' ';
                title += synthetic::pick(rng, synthetic::lexicon::kEntities);
                title += ' ';
                title += synthetic::pick(rng, synthetic::lexicon::kPolitical);
                news.push_back({date, title, true});
            }
            std::string other{synthetic::pick(rng, synthetic::lexicon::kOther)};
            other += ' ';
            other += synthetic::pick(rng, synthetic::lexicon::kOther);
            news.push_back({date, other, false});
            const auto s = std::find(spikes.begin(), spikes.end(), d);
            if (s != spikes.end()) news.push_back({date, kStories[s - spikes.begin()].headline, true});
        }
        std::ostringstream news_body;
        corpus::write_news(news_body, news);
        write_file(dir / "news.csv", header(seed) + news_body.str());

        std::ostringstream spike_body;
        spike_body << "date,headline\n";
        for (std::size_t i = 0; i < pc.spike_dates.size(); ++i) {
            spike_body << util::format_date(pc.spike_dates[i]) << ',' << util::quote_csv(kStories[i].headline) << '\n';
        }
        write_file(dir / "spikes.csv", header(seed) + spike_body.str());
        std::cerr << "wrote " << texts.size() << " training tweets, " << pc.tweets.size() << " corpus tweets, "
                  << news.size() << " headlines to " << dir.string() << '\n';
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
