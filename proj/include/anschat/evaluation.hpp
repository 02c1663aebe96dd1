#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace anschat {

using QaPair = std::pair<std::string, std::string>;  // (question_id, answer_id)

// Multi-tagger gold annotations: per tagger, the (question, answer) pairs they
// marked. question_ids records every annotated question, including those a
// tagger marked as having no answers.
struct GoldAnnotations {
    std::map<std::string, std::set<QaPair>> by_tagger;
    std::set<std::string> question_ids;

    int tagger_count() const { return static_cast<int>(by_tagger.size()); }
};

// Pairs marked by strictly more than half of the taggers.
std::set<QaPair> majority_vote(const GoldAnnotations& gold);

// Fleiss kappa over items = universe pairs, categories = {answer, non-answer},
// raters = taggers. A pair a tagger marked counts as "answer", otherwise
// "non-answer". Throws UndefinedKappa when expected agreement is 1.
double fleiss_kappa(const GoldAnnotations& gold, const std::vector<QaPair>& universe);

struct EvalReport {
    double precision = 0.0;
    double recall = 0.0;
    double f_score = 0.0;
    long tp = 0;
    long fp = 0;
    long fn = 0;
    bool empty_prediction = false;
    bool empty_gold = false;
};

// Micro-averaged precision / recall / F-score over pair sets. Degenerate
// cases follow fixed conventions and raise the matching flag.
EvalReport score(const std::set<QaPair>& predicted, const std::set<QaPair>& gold);

}  // namespace anschat
