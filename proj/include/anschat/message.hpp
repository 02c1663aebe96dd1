#pragma once

#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace anschat {

// One chat message. Immutable once its feed is built.
struct Message {
    std::string id;
    int index = -1;  // 0-based position in the feed
    double ts = 0.0;  // seconds since epoch
    std::string author;
    std::string text;
    std::set<std::string> mentions;  // user ids referenced as <@name>

    friend bool operator==(const Message&, const Message&) = default;
};

// Time-ordered channel feed. Construction sorts messages stably by timestamp
// (ties keep input order), assigns indices 0..n-1 and rejects duplicate ids.
class Feed {
public:
    Feed() = default;
    explicit Feed(std::vector<Message> messages);

    const std::vector<Message>& messages() const { return messages_; }
    const std::set<std::string>& users() const { return users_; }
    const Message& at(int index) const { return messages_.at(static_cast<std::size_t>(index)); }
    const Message* find(const std::string& id) const;
    std::size_t size() const { return messages_.size(); }
    bool empty() const { return messages_.empty(); }

    friend bool operator==(const Feed& a, const Feed& b) { return a.messages_ == b.messages_; }

private:
    std::vector<Message> messages_;
    std::set<std::string> users_;
    std::unordered_map<std::string, int> index_by_id_;
};

enum class QuestionSource { heuristic, external_tags };

// Ordered set of message ids flagged as questions. Ids are kept in feed order.
class QuestionSet {
public:
    QuestionSet() = default;
    QuestionSet(std::vector<std::string> ids, QuestionSource source);

    const std::vector<std::string>& ids() const { return ids_; }
    QuestionSource source() const { return source_; }
    bool contains(const std::string& id) const { return lookup_.count(id) > 0; }
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }

private:
    std::vector<std::string> ids_;
    std::unordered_set<std::string> lookup_;
    QuestionSource source_ = QuestionSource::heuristic;
};

}  // namespace anschat
