#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "anschat/message.hpp"

namespace anschat {

enum class FeatureSet { text, structure, text_and_structure };
enum class StemmerKind { porter };
enum class DistanceUnit { messages, seconds };

struct FeatureConfig {
    FeatureSet feature_set = FeatureSet::text_and_structure;
    int window_w = 10;
    bool standardize = true;
    std::string stopword_file;  // empty -> built-in list
    StemmerKind stemmer = StemmerKind::porter;
    DistanceUnit distance_unit = DistanceUnit::messages;
    // Stand-in for asker_next_dist when distances are measured in seconds and
    // the asker never speaks again inside the window.
    double sentinel_seconds = 36000.0;
};

// Fixed-schema real vector for one candidate pair.
struct FeatureVector {
    std::vector<double> values;
    std::vector<std::string> schema;

    friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

// Feature names for a feature set, in canonical order.
std::vector<std::string> feature_schema(FeatureSet set);

// lowercase -> strip URLs and mentions -> split on non-alphanumerics ->
// drop stopwords -> Porter-stem. Duplicates removed.
std::set<std::string> tokenize_stem(std::string_view text, const FeatureConfig& config);
std::set<std::string> tokenize_stem(std::string_view text, const std::set<std::string>& stopwords);

// |a ∩ b| / |a ∪ b|; 0 when both sets are empty.
double jaccard(const std::set<std::string>& a, const std::set<std::string>& b);

// Raw (unstandardized) features for one (question, candidate) pair.
FeatureVector extract_features(const Message& question, const Message& candidate, const Feed& feed,
                               const QuestionSet& questions, const FeatureConfig& config);

// Same, with the stopword list already resolved (batch callers load it once).
FeatureVector extract_features(const Message& question, const Message& candidate, const Feed& feed,
                               const QuestionSet& questions, const FeatureConfig& config,
                               const std::set<std::string>& stopwords);

// Per-dimension z-score over the whole population; zero-variance dimensions
// map to all-zeros.
std::vector<FeatureVector> standardize(const std::vector<FeatureVector>& vectors);

}  // namespace anschat
