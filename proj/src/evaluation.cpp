#include "anschat/evaluation.hpp"

#include <algorithm>

#include "anschat/errors.hpp"

namespace anschat {

std::set<QaPair> majority_vote(const GoldAnnotations& gold) {
    if (gold.tagger_count() < 1) throw PreconditionError("majority_vote: no taggers");
    std::map<QaPair, int> votes;
    for (const auto& [tagger, pairs] : gold.by_tagger) {
        for (const QaPair& p : pairs) ++votes[p];
    }
    std::set<QaPair> out;
    const double half = static_cast<double>(gold.tagger_count()) / 2.0;
    for (const auto& [pair, count] : votes) {
        if (static_cast<double>(count) > half) out.insert(pair);
    }
    return out;
}

double fleiss_kappa(const GoldAnnotations& gold, const std::vector<QaPair>& universe) {
    const int raters = gold.tagger_count();
    if (raters < 2) throw PreconditionError("fleiss_kappa: need at least two taggers");
    if (universe.empty()) throw PreconditionError("fleiss_kappa: empty universe");

    const double n = static_cast<double>(universe.size());
    const double t = static_cast<double>(raters);

    double p_bar = 0.0;
    double total_answer = 0.0;
    for (const QaPair& item : universe) {
        double marked = 0.0;
        for (const auto& [tagger, pairs] : gold.by_tagger) {
            if (pairs.count(item) > 0) marked += 1.0;
        }
        const double unmarked = t - marked;
        total_answer += marked;
        p_bar += (marked * (marked - 1.0) + unmarked * (unmarked - 1.0)) / (t * (t - 1.0));
    }
    p_bar /= n;

    const double p_answer = total_answer / (n * t);
    const double p_e = p_answer * p_answer + (1.0 - p_answer) * (1.0 - p_answer);
    if (p_e >= 1.0) {
        throw UndefinedKappa("fleiss_kappa: all ratings fall in a single category");
    }
    return (p_bar - p_e) / (1.0 - p_e);
}

EvalReport score(const std::set<QaPair>& predicted, const std::set<QaPair>& gold) {
    EvalReport r;
    for (const QaPair& p : predicted) {
        if (gold.count(p) > 0) {
            ++r.tp;
        } else {
            ++r.fp;
        }
    }
    r.fn = static_cast<long>(gold.size()) - r.tp;

    if (predicted.empty() && gold.empty()) {
        r.precision = r.recall = r.f_score = 1.0;
        r.empty_prediction = true;
        r.empty_gold = true;
        return r;
    }
    if (predicted.empty()) r.empty_prediction = true;
    if (gold.empty()) r.empty_gold = true;

    r.precision = r.tp + r.fp > 0 ? static_cast<double>(r.tp) / static_cast<double>(r.tp + r.fp) : 0.0;
    r.recall = r.tp + r.fn > 0 ? static_cast<double>(r.tp) / static_cast<double>(r.tp + r.fn) : 0.0;
    r.f_score = r.precision + r.recall > 0.0
                    ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
                    : 0.0;
    return r;
}

}  // namespace anschat
