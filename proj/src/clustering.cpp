#include "anschat/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "anschat/errors.hpp"
#include "anschat/rng.hpp"
#include "anschat/text.hpp"

namespace anschat {

std::vector<CandidatePair> build_pairs(const Feed& feed, const QuestionSet& questions,
                                       const ClusterConfig& config) {
    std::vector<CandidatePair> pairs;
    const int last = static_cast<int>(feed.size()) - 1;
    for (const std::string& qid : questions.ids()) {
        const Message* q = feed.find(qid);
        if (q == nullptr) throw PreconditionError("question id not in feed: " + qid);
        const int end = std::min(q->index + config.window_w, last);
        for (int c = q->index + 1; c <= end; ++c) {
            CandidatePair p;
            p.question_id = qid;
            p.candidate_id = feed.at(c).id;
            p.question_index = q->index;
            p.candidate_index = c;
            pairs.push_back(std::move(p));
        }
    }
    return pairs;
}

void seed_clusters(std::vector<CandidatePair>& pairs, const Feed& feed,
                   const ClusterConfig& config) {
    const int last = static_cast<int>(feed.size()) - 1;
    for (CandidatePair& p : pairs) {
        const Message& q = feed.at(p.question_index);
        const Message& c = feed.at(p.candidate_index);

        const double dt = c.ts - q.ts;
        if (c.author == q.author || dt < config.min_answer_dt || dt > config.max_answer_dt) {
            p.seed = SeedLabel::non_answer_seed;
            p.assignment = Cluster::N;
            continue;
        }

        bool positive = q.mentions.count(c.author) > 0;
        if (!positive) {
            // Acknowledgment rule. The ack must directly follow the candidate:
            // any message in between is a later non-asker message (it cannot be
            // the asker's, or it would be the asker's first after the candidate),
            // so the candidate would not be the latest one before the ack.
            const int nxt = c.index + 1;
            const int window_end = std::min(q.index + config.window_w, last);
            positive = nxt <= window_end && feed.at(nxt).author == q.author &&
                       is_acknowledgment(feed.at(nxt).text, config.ack);
        }
        if (positive) {
            p.seed = SeedLabel::answer_seed;
            p.assignment = Cluster::A;
        } else {
            p.seed = SeedLabel::free_pair;
            p.assignment = Cluster::N;
        }
    }
}

namespace {

void require_uniform_features(const std::vector<CandidatePair>& pairs) {
    if (pairs.empty()) throw PreconditionError("no candidate pairs");
    const auto& schema = pairs.front().features.schema;
    if (schema.empty()) throw PreconditionError("pair features not computed");
    for (const auto& p : pairs) {
        if (p.features.schema != schema) {
            throw SchemaMismatch("candidate pairs carry mixed feature schemas");
        }
    }
}

std::vector<std::vector<double>> collect_features(const std::vector<CandidatePair>& pairs,
                                                  Cluster which) {
    std::vector<std::vector<double>> out;
    for (const auto& p : pairs) {
        if (p.assignment == which) out.push_back(p.features.values);
    }
    return out;
}

// select_bandwidth demands at least `folds` points; small clusters fall back
// to fewer folds, a lone point to the Silverman reference value.
double choose_bandwidth(const std::vector<std::vector<double>>& points,
                        const BandwidthConfig& config) {
    BandwidthConfig local = config;
    local.folds = std::min<int>(config.folds, static_cast<int>(points.size()));
    if (local.folds < 2) return silverman_bandwidth(points);
    return select_bandwidth(points, local);
}

KdeModel fit_cluster(const std::vector<std::vector<double>>& points,
                     const BandwidthConfig& config) {
    return fit_kde(points, choose_bandwidth(points, config));
}

double mean_msg_dist(const std::vector<CandidatePair>& pairs, const std::vector<int>& assign,
                     int which) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (assign[i] != which) continue;
        sum += static_cast<double>(pairs[i].candidate_index - pairs[i].question_index);
        ++count;
    }
    return count == 0 ? std::numeric_limits<double>::infinity()
                      : sum / static_cast<double>(count);
}

}  // namespace

void compute_features(std::vector<CandidatePair>& pairs, const Feed& feed,
                      const QuestionSet& questions, const FeatureConfig& config) {
    if (pairs.empty()) return;
    const std::set<std::string> stopwords = config.stopword_file.empty()
                                                ? text::default_stopwords()
                                                : text::load_stopwords(config.stopword_file);
    for (CandidatePair& p : pairs) {
        p.features = extract_features(feed.at(p.question_index), feed.at(p.candidate_index), feed,
                                      questions, config, stopwords);
    }
    if (config.standardize) {
        std::vector<FeatureVector> all;
        all.reserve(pairs.size());
        for (const auto& p : pairs) all.push_back(p.features);
        all = standardize(all);
        for (std::size_t i = 0; i < pairs.size(); ++i) pairs[i].features = std::move(all[i]);
    }
}

std::vector<CandidatePair> prepare_pairs(const Feed& feed, const QuestionSet& questions,
                                         const FeatureConfig& features,
                                         const ClusterConfig& config) {
    auto pairs = build_pairs(feed, questions, config);
    seed_clusters(pairs, feed, config);
    compute_features(pairs, feed, questions, features);
    return pairs;
}

ClusterState run_ans_chat(std::vector<CandidatePair> pairs, const ClusterConfig& config,
                          const BandwidthConfig& bandwidth, const IterationObserver& observer) {
    require_uniform_features(pairs);

    std::size_t n_free = 0;
    std::vector<std::vector<double>> seed_a;
    std::vector<std::vector<double>> seed_n;
    for (CandidatePair& p : pairs) {
        switch (p.seed) {
            case SeedLabel::answer_seed:
                p.assignment = Cluster::A;
                seed_a.push_back(p.features.values);
                break;
            case SeedLabel::non_answer_seed:
                p.assignment = Cluster::N;
                seed_n.push_back(p.features.values);
                break;
            case SeedLabel::free_pair:
                p.assignment = Cluster::N;  // placeholder until the first pass
                ++n_free;
                break;
        }
    }
    if (seed_a.empty() || seed_n.empty()) {
        throw EmptySeedCluster("run_ans_chat: both seed clusters must be non-empty");
    }

    KdeModel model_a = fit_cluster(seed_a, bandwidth);
    KdeModel model_n = fit_cluster(seed_n, bandwidth);

    ClusterState state;
    for (int iter = 1; iter <= config.max_iters; ++iter) {
        int switches = 0;
        for (CandidatePair& p : pairs) {
            if (p.seed != SeedLabel::free_pair) continue;
            const double la = log_density(model_a, p.features.values, bandwidth.log_floor);
            const double ln = log_density(model_n, p.features.values, bandwidth.log_floor);
            const Cluster next = la >= ln ? Cluster::A : Cluster::N;
            if (next != p.assignment) ++switches;
            p.assignment = next;
        }
        if (iter == 1) switches = static_cast<int>(n_free);
        state.iteration = iter;
        state.switch_history.push_back(switches);
        if (observer) observer({iter, switches, &model_a, &model_n, pairs});

        model_a = fit_cluster(collect_features(pairs, Cluster::A), bandwidth);
        model_n = fit_cluster(collect_features(pairs, Cluster::N), bandwidth);

        if (switches < config.switch_threshold) {
            state.converged = true;
            break;
        }
    }
    state.model_a = std::move(model_a);
    state.model_n = std::move(model_n);
    state.pairs = std::move(pairs);
    return state;
}

ClusterState run_regular(std::vector<CandidatePair> pairs, const ClusterConfig& config,
                         const BandwidthConfig& bandwidth, const IterationObserver& observer) {
    require_uniform_features(pairs);

    if (config.init_heuristic == InitHeuristic::seed_rules) {
        for (CandidatePair& p : pairs) {
            p.assignment = p.seed == SeedLabel::answer_seed ? Cluster::A : Cluster::N;
        }
    } else {
        const auto& schema = pairs.front().features.schema;
        const auto it = std::find(schema.begin(), schema.end(), "jaccard");
        if (it == schema.end()) {
            throw PreconditionError("jaccard_median initialization needs the jaccard feature");
        }
        const std::size_t jdx = static_cast<std::size_t>(it - schema.begin());
        std::vector<double> values;
        values.reserve(pairs.size());
        for (const auto& p : pairs) values.push_back(p.features.values[jdx]);
        std::vector<double> sorted = values;
        std::sort(sorted.begin(), sorted.end());
        const std::size_t n = sorted.size();
        const double median =
            n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            pairs[i].assignment = values[i] > median ? Cluster::A : Cluster::N;
        }
    }

    auto init_a = collect_features(pairs, Cluster::A);
    auto init_n = collect_features(pairs, Cluster::N);
    if (init_a.empty() || init_n.empty()) {
        throw DegenerateInit("run_regular: initialization heuristic left a cluster empty");
    }
    KdeModel model_a = fit_cluster(init_a, bandwidth);
    KdeModel model_n = fit_cluster(init_n, bandwidth);

    ClusterState state;
    for (int iter = 1; iter <= config.max_iters; ++iter) {
        int switches = 0;
        std::size_t count_a = 0;
        for (CandidatePair& p : pairs) {
            const double la = log_density(model_a, p.features.values, bandwidth.log_floor);
            const double ln = log_density(model_n, p.features.values, bandwidth.log_floor);
            const Cluster next = la > ln ? Cluster::A : Cluster::N;
            if (next != p.assignment) ++switches;
            p.assignment = next;
            if (next == Cluster::A) ++count_a;
        }
        state.iteration = iter;
        state.switch_history.push_back(switches);
        if (observer) observer({iter, switches, &model_a, &model_n, pairs});

        if (count_a == 0 || count_a == pairs.size()) break;  // nothing left to refit against

        model_a = fit_cluster(collect_features(pairs, Cluster::A), bandwidth);
        model_n = fit_cluster(collect_features(pairs, Cluster::N), bandwidth);

        if (switches < config.switch_threshold) {
            state.converged = true;
            break;
        }
    }
    state.model_a = std::move(model_a);
    state.model_n = std::move(model_n);
    state.pairs = std::move(pairs);
    return state;
}

ClusterState run_kmeans_baseline(std::vector<CandidatePair> pairs, const ClusterConfig& config,
                                 const IterationObserver& observer) {
    require_uniform_features(pairs);
    const std::size_t n = pairs.size();

    bool any_distinct = false;
    for (std::size_t i = 1; i < n && !any_distinct; ++i) {
        any_distinct = pairs[i].features.values != pairs[0].features.values;
    }
    if (!any_distinct) throw DegenerateData("run_kmeans_baseline: all feature vectors identical");

    rng::Engine engine(config.rng_seed);
    const std::size_t i0 = engine.uniform_below(n);
    std::size_t i1 = i0;
    while (pairs[i1].features.values == pairs[i0].features.values) {
        i1 = engine.uniform_below(n);
    }
    std::vector<double> c0 = pairs[i0].features.values;
    std::vector<double> c1 = pairs[i1].features.values;
    const std::size_t dim = c0.size();

    const auto dist2 = [dim](const std::vector<double>& a, const std::vector<double>& b) {
        double acc = 0.0;
        for (std::size_t d = 0; d < dim; ++d) {
            const double diff = a[d] - b[d];
            acc += diff * diff;
        }
        return acc;
    };
    const auto nearest = [&](const std::vector<double>& x) {
        return dist2(x, c1) < dist2(x, c0) ? 1 : 0;
    };

    std::vector<int> assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) assign[i] = nearest(pairs[i].features.values);

    ClusterState state;
    for (int iter = 1; iter <= 100; ++iter) {
        std::vector<double> sum0(dim, 0.0);
        std::vector<double> sum1(dim, 0.0);
        std::size_t n0 = 0;
        std::size_t n1 = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto& x = pairs[i].features.values;
            if (assign[i] == 0) {
                for (std::size_t d = 0; d < dim; ++d) sum0[d] += x[d];
                ++n0;
            } else {
                for (std::size_t d = 0; d < dim; ++d) sum1[d] += x[d];
                ++n1;
            }
        }
        double shift = 0.0;
        if (n0 > 0) {
            for (std::size_t d = 0; d < dim; ++d) sum0[d] /= static_cast<double>(n0);
            shift = std::max(shift, std::sqrt(dist2(sum0, c0)));
            c0 = std::move(sum0);
        }
        if (n1 > 0) {
            for (std::size_t d = 0; d < dim; ++d) sum1[d] /= static_cast<double>(n1);
            shift = std::max(shift, std::sqrt(dist2(sum1, c1)));
            c1 = std::move(sum1);
        }

        int switches = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const int next = nearest(pairs[i].features.values);
            if (next != assign[i]) ++switches;
            assign[i] = next;
            pairs[i].assignment = next == 0 ? Cluster::A : Cluster::N;  // provisional labels
        }
        state.iteration = iter;
        state.switch_history.push_back(switches);
        if (observer) observer({iter, switches, nullptr, nullptr, pairs});
        if (shift < 1e-9) {
            state.converged = true;
            break;
        }
    }

    // Label the cluster holding more answer-seed pairs as A; break ties toward
    // the cluster whose members sit closer to their questions.
    std::size_t seeds0 = 0;
    std::size_t seeds1 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (pairs[i].seed != SeedLabel::answer_seed) continue;
        (assign[i] == 0 ? seeds0 : seeds1) += 1;
    }
    int a_label = 0;
    if (seeds1 > seeds0) {
        a_label = 1;
    } else if (seeds1 == seeds0 && mean_msg_dist(pairs, assign, 1) < mean_msg_dist(pairs, assign, 0)) {
        a_label = 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
        pairs[i].assignment = assign[i] == a_label ? Cluster::A : Cluster::N;
    }
    state.pairs = std::move(pairs);
    return state;
}

std::set<std::pair<std::string, std::string>> predicted_answers(const ClusterState& state) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& p : state.pairs) {
        if (p.assignment == Cluster::A) out.emplace(p.question_id, p.candidate_id);
    }
    return out;
}

}  // namespace anschat
