#pragma once

#include <array>
#include <cstdint>
#include <set>

#include "anschat/evaluation.hpp"
#include "anschat/message.hpp"

namespace anschat {

struct GenConfig {
    int n_messages = 1000;
    int n_users = 8;
    double question_prob = 0.1;
    // P(a question has 0 / 1 / 2 true answers); must sum to 1.
    std::array<double, 3> answers_per_question = {0.2, 0.5, 0.3};
    double answer_delay_p = 0.5;  // geometric delay in messages, truncated to [1, w]
    double mention_prob = 0.5;    // question mentions its answerer
    double ack_prob = 0.4;        // asker acknowledges right after a true answer
    int vocab_size = 60;
    double topic_overlap = 0.4;   // rate at which answer tokens copy the question's
    double inter_message_dt = 60.0;  // mean seconds between consecutive messages
    int window_w = 10;
    std::uint64_t rng_seed = 0;
};

struct Corpus {
    Feed feed;
    QuestionSet questions;
    std::set<QaPair> gold;  // true (question_id, answer_id) links
};

// Deterministic synthetic chat corpus with ground-truth answer links.
// Answerers stay silent inside their question's window except for the true
// answers, and acknowledgments directly follow them, so the conservative seed
// rules never pick up a non-gold pair.
Corpus generate(const GenConfig& config);

struct CorpusStats {
    std::size_t n_messages = 0;
    std::size_t n_users = 0;
    double median_msgs_per_user = 0.0;
    std::size_t n_questions = 0;
    double question_rate = 0.0;
    std::size_t n_gold_pairs = 0;
};

CorpusStats corpus_stats(const Feed& feed, const QuestionSet& questions,
                         const std::set<QaPair>& gold);

}  // namespace anschat
