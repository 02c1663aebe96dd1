#include "anschat/features.hpp"

#include <algorithm>
#include <cmath>

#include "anschat/errors.hpp"
#include "anschat/text.hpp"

namespace anschat {

std::vector<std::string> feature_schema(FeatureSet set) {
    switch (set) {
        case FeatureSet::text:
            return {"jaccard"};
        case FeatureSet::structure:
            return {"msg_dist", "asker_next_dist", "mention_flag"};
        case FeatureSet::text_and_structure:
            return {"msg_dist", "asker_next_dist", "mention_flag", "jaccard"};
    }
    throw PreconditionError("unknown feature set");
}

std::set<std::string> tokenize_stem(std::string_view text, const std::set<std::string>& stopwords) {
    const std::string cleaned =
        text::strip_mentions(text::strip_urls(text::to_lower(text)));
    std::set<std::string> out;
    for (const std::string& token : text::alnum_tokens(cleaned)) {
        if (stopwords.count(token) > 0) continue;
        out.insert(text::porter_stem(token));
    }
    return out;
}

std::set<std::string> tokenize_stem(std::string_view text, const FeatureConfig& config) {
    if (config.stopword_file.empty()) {
        return tokenize_stem(text, text::default_stopwords());
    }
    return tokenize_stem(text, text::load_stopwords(config.stopword_file));
}

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
    if (a.empty() && b.empty()) return 0.0;
    std::size_t inter = 0;
    for (const auto& t : a) inter += b.count(t);
    const std::size_t uni = a.size() + b.size() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

namespace {

// Index of the asker's first message after `candidate` within the question's
// window, or -1 if there is none.
int asker_next_index(const Message& question, const Message& candidate, const Feed& feed,
                     int window_w) {
    const int last = static_cast<int>(feed.size()) - 1;
    const int window_end = std::min(question.index + window_w, last);
    for (int i = candidate.index + 1; i <= window_end; ++i) {
        if (feed.at(i).author == question.author) return i;
    }
    return -1;
}

}  // namespace

FeatureVector extract_features(const Message& question, const Message& candidate, const Feed& feed,
                               const QuestionSet& questions, const FeatureConfig& config) {
    return extract_features(question, candidate, feed, questions, config,
                            config.stopword_file.empty()
                                ? text::default_stopwords()
                                : text::load_stopwords(config.stopword_file));
}

FeatureVector extract_features(const Message& question, const Message& candidate, const Feed& feed,
                               const QuestionSet& questions, const FeatureConfig& config,
                               const std::set<std::string>& stopwords) {
    if (!questions.contains(question.id)) {
        throw PreconditionError("message is not a flagged question: " + question.id);
    }
    const int dist = candidate.index - question.index;
    if (dist < 1 || dist > config.window_w) {
        throw PreconditionError("candidate outside the question window: " + candidate.id);
    }

    const bool seconds = config.distance_unit == DistanceUnit::seconds;
    const double msg_dist = seconds ? candidate.ts - question.ts : static_cast<double>(dist);

    const int next = asker_next_index(question, candidate, feed, config.window_w);
    double asker_next_dist;
    if (next < 0) {
        asker_next_dist = seconds ? config.sentinel_seconds : static_cast<double>(config.window_w + 1);
    } else {
        asker_next_dist = seconds ? feed.at(next).ts - candidate.ts
                                  : static_cast<double>(next - candidate.index);
    }

    const double mention_flag = question.mentions.count(candidate.author) > 0 ? 1.0 : 0.0;

    FeatureVector fv;
    fv.schema = feature_schema(config.feature_set);
    fv.values.reserve(fv.schema.size());
    for (const std::string& name : fv.schema) {
        if (name == "msg_dist") {
            fv.values.push_back(msg_dist);
        } else if (name == "asker_next_dist") {
            fv.values.push_back(asker_next_dist);
        } else if (name == "mention_flag") {
            fv.values.push_back(mention_flag);
        } else {  // jaccard
            fv.values.push_back(jaccard(tokenize_stem(question.text, stopwords),
                                        tokenize_stem(candidate.text, stopwords)));
        }
    }
    return fv;
}

std::vector<FeatureVector> standardize(const std::vector<FeatureVector>& vectors) {
    if (vectors.empty()) throw PreconditionError("standardize: empty input");
    const auto& schema = vectors.front().schema;
    for (const auto& v : vectors) {
        if (v.schema != schema || v.values.size() != schema.size()) {
            throw SchemaMismatch("standardize: vectors do not share one schema");
        }
    }
    const std::size_t dim = schema.size();
    const double n = static_cast<double>(vectors.size());

    std::vector<double> mean(dim, 0.0);
    for (const auto& v : vectors) {
        for (std::size_t d = 0; d < dim; ++d) mean[d] += v.values[d];
    }
    for (double& m : mean) m /= n;

    std::vector<double> sd(dim, 0.0);
    for (const auto& v : vectors) {
        for (std::size_t d = 0; d < dim; ++d) {
            const double diff = v.values[d] - mean[d];
            sd[d] += diff * diff;
        }
    }
    for (double& s : sd) s = std::sqrt(s / n);  // population sigma

    std::vector<FeatureVector> out = vectors;
    for (auto& v : out) {
        for (std::size_t d = 0; d < dim; ++d) {
            v.values[d] = sd[d] > 0.0 ? (v.values[d] - mean[d]) / sd[d] : 0.0;
        }
    }
    return out;
}

}  // namespace anschat
