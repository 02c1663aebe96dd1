#include "anschat/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "anschat/errors.hpp"
#include "anschat/text.hpp"

namespace anschat {

using json = nlohmann::json;

Feed::Feed(std::vector<Message> messages) : messages_(std::move(messages)) {
    std::stable_sort(messages_.begin(), messages_.end(),
                     [](const Message& a, const Message& b) { return a.ts < b.ts; });
    for (std::size_t i = 0; i < messages_.size(); ++i) {
        Message& m = messages_[i];
        m.index = static_cast<int>(i);
        if (!index_by_id_.emplace(m.id, m.index).second) {
            throw DuplicateId("duplicate message id: " + m.id);
        }
        users_.insert(m.author);
    }
}

const Message* Feed::find(const std::string& id) const {
    const auto it = index_by_id_.find(id);
    return it == index_by_id_.end() ? nullptr : &messages_[static_cast<std::size_t>(it->second)];
}

QuestionSet::QuestionSet(std::vector<std::string> ids, QuestionSource source)
    : source_(source) {
    for (auto& id : ids) {
        if (lookup_.insert(id).second) ids_.push_back(std::move(id));
    }
}

std::set<std::string> extract_mentions(std::string_view text) {
    std::set<std::string> out;
    std::size_t i = 0;
    while ((i = text.find("<@", i)) != std::string_view::npos) {
        const std::size_t close = text.find('>', i + 2);
        if (close == std::string_view::npos) break;
        if (close > i + 2) out.emplace(text.substr(i + 2, close - i - 2));
        i = close + 1;
    }
    return out;
}

std::set<std::string> extract_mentions(std::string_view text, const std::string& pattern) {
    if (pattern.empty()) return extract_mentions(text);
    std::set<std::string> out;
    const std::regex re(pattern);
    const std::string s(text);
    for (auto it = std::sregex_iterator(s.begin(), s.end(), re); it != std::sregex_iterator(); ++it) {
        if (it->size() > 1 && (*it)[1].matched) out.insert((*it)[1].str());
    }
    return out;
}

Feed parse_feed(const std::filesystem::path& path, FeedFormat, const std::string& mention_pattern) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open feed file: " + path.string());
    std::vector<Message> messages;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::exception& e) {
            throw FormatError("line " + std::to_string(line_no) + ": invalid JSON: " + e.what());
        }
        if (!obj.is_object() || !obj.contains("id") || !obj.contains("ts") ||
            !obj.contains("user") || !obj.contains("text") || !obj["id"].is_string() ||
            !obj["ts"].is_number() || !obj["user"].is_string() || !obj["text"].is_string()) {
            throw FormatError("line " + std::to_string(line_no) +
                              ": expected object with string id/user/text and numeric ts");
        }
        Message m;
        m.id = obj["id"].get<std::string>();
        m.ts = obj["ts"].get<double>();
        m.author = obj["user"].get<std::string>();
        m.text = obj["text"].get<std::string>();
        if (m.ts < 0.0) {
            throw FormatError("line " + std::to_string(line_no) + ": negative timestamp");
        }
        m.mentions = extract_mentions(m.text, mention_pattern);
        messages.push_back(std::move(m));
    }
    if (in.bad()) throw IoError("read failure on feed file: " + path.string());
    return Feed(std::move(messages));
}

const std::set<std::string>& default_interrogative_lexicon() {
    static const std::set<std::string> words = {
        "who",  "what", "when",   "where", "why",  "how",  "which", "is",  "are",
        "can",  "should", "do",   "does",  "did",  "will", "would", "could", "any",
        "anyone",
    };
    return words;
}

const std::set<std::string>& default_ack_lexicon() {
    static const std::set<std::string> words = {
        "ok",    "okay", "thanks", "thank you", "thx",       "yes", "yep",
        "gotcha", "right", "sure",  "\xF0\x9F\x91\x8D",      "thumbs up",
    };
    return words;
}

namespace {

bool has_question_mark_outside_url(const std::string& text) {
    return text::strip_urls(text).find('?') != std::string::npos;
}

bool first_token_interrogative(const std::string& text, const std::set<std::string>& lexicon) {
    const std::string cleaned = text::strip_mentions(text::strip_urls(text));
    const auto tokens = text::alnum_tokens(cleaned);
    if (tokens.empty()) return false;
    return lexicon.count(text::to_lower(tokens.front())) > 0;
}

// Whitespace tokens with ASCII punctuation stripped from both ends, lowercased.
std::vector<std::string> ack_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    const auto flush = [&] {
        std::size_t lo = 0;
        std::size_t hi = cur.size();
        const auto is_punct = [](char c) {
            const auto uc = static_cast<unsigned char>(c);
            return uc < 0x80 && std::ispunct(uc) != 0;
        };
        while (lo < hi && is_punct(cur[lo])) ++lo;
        while (hi > lo && is_punct(cur[hi - 1])) --hi;
        if (hi > lo) tokens.push_back(text::to_lower(std::string_view(cur).substr(lo, hi - lo)));
        cur.clear();
    };
    for (const char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            flush();
        } else {
            cur.push_back(c);
        }
    }
    flush();
    return tokens;
}

}  // namespace

QuestionSet detect_questions(const Feed& feed, const QuestionDetectorConfig& config) {
    std::vector<std::string> ids;
    for (const Message& m : feed.messages()) {
        const bool by_mark = config.question_mark_rule && has_question_mark_outside_url(m.text);
        const bool by_lexicon =
            !by_mark && config.lexicon_rule && first_token_interrogative(m.text, config.lexicon);
        if (by_mark || by_lexicon) ids.push_back(m.id);
    }
    return QuestionSet(std::move(ids), QuestionSource::heuristic);
}

bool is_acknowledgment(std::string_view text, const AckConfig& config) {
    const auto tokens = ack_tokens(text);
    if (tokens.empty() || tokens.size() > static_cast<std::size_t>(config.max_ack_tokens)) {
        return false;
    }
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (config.lexicon.count(tokens[i]) > 0) return true;
        if (i + 1 < tokens.size() && config.lexicon.count(tokens[i] + " " + tokens[i + 1]) > 0) {
            return true;
        }
    }
    return false;
}

QuestionSet load_question_tags(const std::filesystem::path& path, const Feed& feed) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open question tag file: " + path.string());
    std::unordered_set<std::string> tagged;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::exception& e) {
            throw FormatError("line " + std::to_string(line_no) + ": invalid JSON: " + e.what());
        }
        if (!obj.is_object() || !obj.contains("question_id") || !obj["question_id"].is_string()) {
            throw FormatError("line " + std::to_string(line_no) + ": expected {\"question_id\": string}");
        }
        const auto id = obj["question_id"].get<std::string>();
        if (feed.find(id) == nullptr) {
            throw FormatError("line " + std::to_string(line_no) + ": unknown message id: " + id);
        }
        tagged.insert(id);
    }
    if (in.bad()) throw IoError("read failure on tag file: " + path.string());
    std::vector<std::string> ids;
    for (const Message& m : feed.messages()) {
        if (tagged.count(m.id) > 0) ids.push_back(m.id);
    }
    return QuestionSet(std::move(ids), QuestionSource::external_tags);
}

}  // namespace anschat
