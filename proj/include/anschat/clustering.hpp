#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "anschat/features.hpp"
#include "anschat/ingest.hpp"
#include "anschat/kde.hpp"
#include "anschat/message.hpp"

namespace anschat {

enum class SeedLabel { answer_seed, non_answer_seed, free_pair };
enum class Cluster { A, N };

// A (question, potential answer) pair. Seed pairs keep their cluster for the
// whole conservative run; free pairs are reassigned every iteration.
struct CandidatePair {
    std::string question_id;
    std::string candidate_id;
    int question_index = -1;
    int candidate_index = -1;
    FeatureVector features;
    SeedLabel seed = SeedLabel::free_pair;
    Cluster assignment = Cluster::N;
};

enum class InitHeuristic { seed_rules, jaccard_median };

struct ClusterConfig {
    int window_w = 10;
    int max_iters = 15;
    int switch_threshold = 10;  // stop once fewer free pairs switch
    double min_answer_dt = 1.0;      // seconds; answers cannot be faster
    double max_answer_dt = 36000.0;  // nor slower than 10 hours
    InitHeuristic init_heuristic = InitHeuristic::seed_rules;
    std::uint64_t rng_seed = 0;
    AckConfig ack;
};

struct ClusterState {
    std::vector<CandidatePair> pairs;
    int iteration = 0;
    std::vector<int> switch_history;  // one entry per iteration
    bool converged = false;           // stopped by the switch threshold
    std::optional<KdeModel> model_a;  // final refit models (absent for k-means)
    std::optional<KdeModel> model_n;
};

// Snapshot handed to the observer after each iteration's assignment pass.
// The models are the ones that pass used (pre-refit); pointers are valid only
// during the call. Null for the k-means baseline.
struct IterationInfo {
    int iteration;
    int switches;
    const KdeModel* model_a;
    const KdeModel* model_n;
    std::span<const CandidatePair> pairs;
};
using IterationObserver = std::function<void(const IterationInfo&)>;

// One pair per (question, each of the w following messages). Features are
// left unfilled; seed = free, assignment = N placeholder.
std::vector<CandidatePair> build_pairs(const Feed& feed, const QuestionSet& questions,
                                       const ClusterConfig& config);

// Labels each pair answer_seed / non_answer_seed / free per the conservative
// rules. Negative rules (same author, improbable timing) win conflicts.
void seed_clusters(std::vector<CandidatePair>& pairs, const Feed& feed,
                   const ClusterConfig& config);

// Fills features for every pair and standardizes them if configured.
void compute_features(std::vector<CandidatePair>& pairs, const Feed& feed,
                      const QuestionSet& questions, const FeatureConfig& config);

// build_pairs + seed_clusters + compute_features.
std::vector<CandidatePair> prepare_pairs(const Feed& feed, const QuestionSet& questions,
                                         const FeatureConfig& features, const ClusterConfig& config);

// Conservative KDE clustering: seeds anchor both clusters and never move,
// free pairs go to A iff log f_A(x) >= log f_N(x).
ClusterState run_ans_chat(std::vector<CandidatePair> pairs, const ClusterConfig& config,
                          const BandwidthConfig& bandwidth, const IterationObserver& observer = {});

// Plain KDE clustering: heuristic initialization, every pair free to move,
// strict > assigns to A.
ClusterState run_regular(std::vector<CandidatePair> pairs, const ClusterConfig& config,
                         const BandwidthConfig& bandwidth, const IterationObserver& observer = {});

// Lloyd's k-means with k = 2 and deterministic seeding; the cluster holding
// more answer-seed pairs is labeled A.
ClusterState run_kmeans_baseline(std::vector<CandidatePair> pairs, const ClusterConfig& config,
                                 const IterationObserver& observer = {});

// (question_id, candidate_id) pairs assigned to cluster A.
std::set<std::pair<std::string, std::string>> predicted_answers(const ClusterState& state);

}  // namespace anschat
