#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>

#include "anschat/message.hpp"

namespace anschat {

enum class FeedFormat { jsonl };

// Parses a JSON Lines chat log ({"id","ts","user","text"} per line) into a
// validated Feed. Messages are sorted stably by timestamp; mentions are
// extracted from the text. `mention_pattern` optionally replaces the built-in
// <@name> syntax with a regex whose first capture group is the user id.
Feed parse_feed(const std::filesystem::path& path, FeedFormat format = FeedFormat::jsonl,
                const std::string& mention_pattern = "");

// All X appearing as <@X> in the text, deduplicated.
std::set<std::string> extract_mentions(std::string_view text);

// Mention extraction with a custom regex (capture group 1 is the user id).
std::set<std::string> extract_mentions(std::string_view text, const std::string& pattern);

const std::set<std::string>& default_interrogative_lexicon();
const std::set<std::string>& default_ack_lexicon();

struct QuestionDetectorConfig {
    bool question_mark_rule = true;  // '?' outside a URL
    bool lexicon_rule = true;        // first non-mention token is interrogative
    std::set<std::string> lexicon = default_interrogative_lexicon();
};

// Rule-based question detector over a feed.
QuestionSet detect_questions(const Feed& feed, const QuestionDetectorConfig& config = {});

struct AckConfig {
    int max_ack_tokens = 3;
    std::set<std::string> lexicon = default_ack_lexicon();
};

// True for short gratitude/confirmation messages ("ok", "thanks", ...).
bool is_acknowledgment(std::string_view text, const AckConfig& config = {});

// Loads a question tag file (JSONL {"question_id": ...}); ids must exist in
// the feed. Order follows the feed, duplicates collapse.
QuestionSet load_question_tags(const std::filesystem::path& path, const Feed& feed);

}  // namespace anschat
