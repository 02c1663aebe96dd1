#include "anschat/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "anschat/errors.hpp"
#include "anschat/rng.hpp"

namespace anschat {

namespace {

std::string message_id(int pos) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "m%06d", pos);
    return buf;
}

std::string user_name(int u) { return "u" + std::to_string(u); }

void validate(const GenConfig& c) {
    const auto prob_ok = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (c.n_messages < 1 || c.n_users < 1 || c.vocab_size < 1 || c.window_w < 1) {
        throw ConfigError("generate: counts must be positive");
    }
    if (!prob_ok(c.question_prob) || !prob_ok(c.mention_prob) || !prob_ok(c.ack_prob) ||
        !prob_ok(c.topic_overlap)) {
        throw ConfigError("generate: probabilities must lie in [0, 1]");
    }
    if (!(c.answer_delay_p > 0.0) || c.answer_delay_p > 1.0) {
        throw ConfigError("generate: answer_delay_p must lie in (0, 1]");
    }
    if (!(c.inter_message_dt > 0.0)) {
        throw ConfigError("generate: inter_message_dt must be positive");
    }
    double sum = 0.0;
    for (const double p : c.answers_per_question) {
        if (p < 0.0) throw ConfigError("generate: answer distribution entries must be >= 0");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw ConfigError("generate: answer distribution must sum to 1");
    }
    const double p_answered = c.answers_per_question[1] + c.answers_per_question[2];
    if (c.question_prob > 0.0 && p_answered > 0.0 && c.n_users < 2) {
        throw ConfigError("generate: answered questions need at least two users");
    }
}

struct ScheduledMessage {
    enum class Kind { answer, ack };
    Kind kind;
    int author;
    std::string text;
};

struct OpenQuestion {
    int asker;
    int answerer;  // -1 when the question has no true answers
    int window_end;
};

constexpr const char* kAckTexts[] = {"ok", "okay", "thanks", "yep", "sure", "right", "gotcha"};

}  // namespace

Corpus generate(const GenConfig& config) {
    validate(config);
    rng::Engine engine(config.rng_seed);

    const int n = config.n_messages;
    const int w = config.window_w;

    std::vector<double> ts(static_cast<std::size_t>(n));
    double t = 0.0;
    for (int i = 0; i < n; ++i) {
        t += engine.exponential(config.inter_message_dt);
        ts[static_cast<std::size_t>(i)] = t;
    }

    const auto draw_token = [&] {
        return "w" + std::to_string(engine.uniform_below(static_cast<std::size_t>(config.vocab_size)));
    };
    const auto draw_body = [&] {
        std::vector<std::string> tokens(5 + engine.uniform_below(6));
        for (auto& tok : tokens) tok = draw_token();
        return tokens;
    };
    const auto join = [](const std::vector<std::string>& tokens) {
        std::string out;
        for (const auto& tok : tokens) {
            if (!out.empty()) out.push_back(' ');
            out += tok;
        }
        return out;
    };

    std::map<int, ScheduledMessage> schedule;
    std::vector<OpenQuestion> open;
    std::vector<Message> messages;
    std::vector<std::string> question_ids;
    std::set<QaPair> gold;

    // First free slot in [from, to], or -1.
    const auto find_slot = [&](int from, int to) {
        for (int p = from; p <= to; ++p) {
            if (schedule.count(p) == 0) return p;
        }
        return -1;
    };

    for (int pos = 0; pos < n; ++pos) {
        std::erase_if(open, [pos](const OpenQuestion& q) { return q.window_end < pos; });

        if (const auto it = schedule.find(pos); it != schedule.end()) {
            Message m;
            m.id = message_id(pos);
            m.ts = ts[static_cast<std::size_t>(pos)];
            m.author = user_name(it->second.author);
            m.text = it->second.text;
            messages.push_back(std::move(m));
            schedule.erase(it);
            continue;
        }

        std::set<int> claimed;
        std::set<int> open_askers;
        for (const OpenQuestion& q : open) {
            open_askers.insert(q.asker);
            if (q.answerer >= 0) claimed.insert(q.answerer);
        }
        const auto pool_pick = [&](const std::vector<int>& pool) {
            return pool[engine.uniform_below(pool.size())];
        };
        const auto build_pool = [&](const std::set<int>& excluded) {
            std::vector<int> pool;
            for (int u = 0; u < config.n_users; ++u) {
                if (excluded.count(u) == 0) pool.push_back(u);
            }
            return pool;
        };

        bool emitted_question = false;
        if (engine.bernoulli(config.question_prob)) {
            std::set<int> asker_excluded = open_askers;
            asker_excluded.insert(claimed.begin(), claimed.end());
            const auto asker_pool = build_pool(asker_excluded);
            if (!asker_pool.empty()) {
                const int asker = pool_pick(asker_pool);
                const int window_end = std::min(pos + w, n - 1);
                int n_answers = static_cast<int>(engine.categorical(config.answers_per_question));

                int answerer = -1;
                if (n_answers > 0) {
                    std::set<int> excluded = asker_excluded;
                    excluded.insert(asker);
                    for (int p = pos + 1; p <= window_end; ++p) {
                        if (const auto e = schedule.find(p); e != schedule.end()) {
                            excluded.insert(e->second.author);
                        }
                    }
                    const auto answerer_pool = build_pool(excluded);
                    if (answerer_pool.empty()) {
                        n_answers = 0;
                    } else {
                        answerer = pool_pick(answerer_pool);
                    }
                }

                const std::vector<std::string> q_tokens = draw_body();
                const auto draw_answer_text = [&] {
                    std::vector<std::string> tokens(5 + engine.uniform_below(6));
                    for (auto& tok : tokens) {
                        tok = engine.bernoulli(config.topic_overlap)
                                  ? q_tokens[engine.uniform_below(q_tokens.size())]
                                  : draw_token();
                    }
                    return join(tokens);
                };

                std::vector<int> placed;
                if (n_answers >= 1) {
                    const long d1 = std::min<long>(engine.geometric_trials(config.answer_delay_p), w);
                    const int slot1 = find_slot(pos + static_cast<int>(d1), window_end);
                    if (slot1 >= 0) {
                        schedule.emplace(slot1, ScheduledMessage{ScheduledMessage::Kind::answer,
                                                                 answerer, draw_answer_text()});
                        placed.push_back(slot1);
                    }
                    if (n_answers == 2 && slot1 >= 0) {
                        const long d2 =
                            std::min<long>(d1 + engine.geometric_trials(config.answer_delay_p), w);
                        const int slot2 =
                            find_slot(std::max(pos + static_cast<int>(d2), slot1 + 1), window_end);
                        if (slot2 >= 0) {
                            schedule.emplace(slot2, ScheduledMessage{ScheduledMessage::Kind::answer,
                                                                     answerer, draw_answer_text()});
                            placed.push_back(slot2);
                        }
                    }
                }

                std::string text;
                if (!placed.empty() && engine.bernoulli(config.mention_prob)) {
                    text = "<@" + user_name(answerer) + "> ";
                }
                text += join(q_tokens) + "?";

                for (const int ap : placed) {
                    gold.emplace(message_id(pos), message_id(ap));
                    if (engine.bernoulli(config.ack_prob) && ap + 1 <= n - 1 &&
                        schedule.count(ap + 1) == 0) {
                        schedule.emplace(
                            ap + 1,
                            ScheduledMessage{ScheduledMessage::Kind::ack, asker,
                                             kAckTexts[engine.uniform_below(std::size(kAckTexts))]});
                    }
                }

                Message m;
                m.id = message_id(pos);
                m.ts = ts[static_cast<std::size_t>(pos)];
                m.author = user_name(asker);
                m.text = std::move(text);
                messages.push_back(std::move(m));
                question_ids.push_back(message_id(pos));
                open.push_back(OpenQuestion{asker, answerer, window_end});
                emitted_question = true;
            }
        }

        if (!emitted_question) {
            const auto noise_pool = build_pool(claimed);
            int author;
            if (!noise_pool.empty()) {
                author = pool_pick(noise_pool);
            } else {
                author = open.front().asker;  // open askers are never claimed
            }
            Message m;
            m.id = message_id(pos);
            m.ts = ts[static_cast<std::size_t>(pos)];
            m.author = user_name(author);
            m.text = join(draw_body());
            messages.push_back(std::move(m));
        }
    }

    Corpus corpus;
    corpus.feed = Feed(std::move(messages));
    corpus.questions = QuestionSet(std::move(question_ids), QuestionSource::external_tags);
    corpus.gold = std::move(gold);
    return corpus;
}

CorpusStats corpus_stats(const Feed& feed, const QuestionSet& questions,
                         const std::set<QaPair>& gold) {
    CorpusStats s;
    s.n_messages = feed.size();
    s.n_users = feed.users().size();
    s.n_questions = questions.size();
    s.n_gold_pairs = gold.size();
    s.question_rate =
        feed.empty() ? 0.0 : static_cast<double>(s.n_questions) / static_cast<double>(s.n_messages);

    std::map<std::string, std::size_t> per_user;
    for (const Message& m : feed.messages()) ++per_user[m.author];
    if (!per_user.empty()) {
        std::vector<std::size_t> counts;
        counts.reserve(per_user.size());
        for (const auto& [user, count] : per_user) counts.push_back(count);
        std::sort(counts.begin(), counts.end());
        const std::size_t k = counts.size();
        s.median_msgs_per_user =
            k % 2 == 1 ? static_cast<double>(counts[k / 2])
                       : 0.5 * static_cast<double>(counts[k / 2 - 1] + counts[k / 2]);
    }
    return s;
}

}  // namespace anschat
