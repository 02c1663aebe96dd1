#include "anschat/text.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <utility>

#include "anschat/errors.hpp"

namespace anschat::text {

namespace {

// State for one stemming run: b[0..k] is the current word, b[0..j] the stem
// under consideration. Mirrors the layout of Porter's reference code.
struct Stemmer {
    std::string b;
    int k = 0;
    int j = 0;

    bool cons(int i) const {
        switch (b[static_cast<std::size_t>(i)]) {
            case 'a': case 'e': case 'i': case 'o': case 'u':
                return false;
            case 'y':
                return i == 0 ? true : !cons(i - 1);
            default:
                return true;
        }
    }

    // Number of VC sequences in b[0..j].
    int m() const {
        int n = 0;
        int i = 0;
        for (;;) {
            if (i > j) return n;
            if (!cons(i)) break;
            ++i;
        }
        ++i;
        for (;;) {
            for (;;) {
                if (i > j) return n;
                if (cons(i)) break;
                ++i;
            }
            ++i;
            ++n;
            for (;;) {
                if (i > j) return n;
                if (!cons(i)) break;
                ++i;
            }
            ++i;
        }
    }

    bool vowel_in_stem() const {
        for (int i = 0; i <= j; ++i)
            if (!cons(i)) return true;
        return false;
    }

    bool doublec(int i) const {
        return i >= 1 && b[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(i - 1)] && cons(i);
    }

    // consonant-vowel-consonant ending at i, final consonant not w/x/y.
    bool cvc(int i) const {
        if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
        const char ch = b[static_cast<std::size_t>(i)];
        return ch != 'w' && ch != 'x' && ch != 'y';
    }

    bool ends(std::string_view s) {
        const int len = static_cast<int>(s.size());
        if (len > k + 1) return false;
        if (b.compare(static_cast<std::size_t>(k - len + 1), static_cast<std::size_t>(len), s) != 0)
            return false;
        j = k - len;
        return true;
    }

    void setto(std::string_view s) {
        b.replace(static_cast<std::size_t>(j + 1), b.size() - static_cast<std::size_t>(j + 1), s);
        k = j + static_cast<int>(s.size());
    }

    void r(std::string_view s) {
        if (m() > 0) setto(s);
    }

    // plurals and -ed / -ing
    void step1ab() {
        if (b[static_cast<std::size_t>(k)] == 's') {
            if (ends("sses")) {
                k -= 2;
            } else if (ends("ies")) {
                setto("i");
            } else if (b[static_cast<std::size_t>(k - 1)] != 's') {
                --k;
            }
        }
        if (ends("eed")) {
            if (m() > 0) --k;
        } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
            k = j;
            if (ends("at")) {
                setto("ate");
            } else if (ends("bl")) {
                setto("ble");
            } else if (ends("iz")) {
                setto("ize");
            } else if (doublec(k)) {
                --k;
                const char ch = b[static_cast<std::size_t>(k)];
                if (ch == 'l' || ch == 's' || ch == 'z') ++k;
            } else {
                j = k;
                if (m() == 1 && cvc(k)) setto("e");
            }
        }
    }

    // terminal y -> i when the stem holds a vowel
    void step1c() {
        if (ends("y") && vowel_in_stem()) b[static_cast<std::size_t>(k)] = 'i';
    }

    struct Rule {
        std::string_view suffix;
        std::string_view replacement;
    };

    void apply_first(const Rule* rules, std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) {
            if (ends(rules[i].suffix)) {
                r(rules[i].replacement);
                return;
            }
        }
    }

    void step2() {
        static constexpr std::array<Rule, 21> rules{{
            {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
            {"izer", "ize"},    {"bli", "ble"},     {"alli", "al"},   {"entli", "ent"},
            {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
            {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
            {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},   {"biliti", "ble"},
            {"logi", "log"},
        }};
        apply_first(rules.data(), rules.size());
    }

    void step3() {
        static constexpr std::array<Rule, 7> rules{{
            {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
            {"ical", "ic"},  {"ful", ""},   {"ness", ""},
        }};
        apply_first(rules.data(), rules.size());
    }

    // drop residual suffixes when m > 1
    void step4() {
        static constexpr std::array<std::string_view, 19> suffixes{
            "al",  "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement",
            "ment", "ent", "ion",  "ou",  "ism", "ate",  "iti",  "ous", "ive", "ize",
        };
        for (const auto suf : suffixes) {
            if (!ends(suf)) continue;
            if (suf == "ion") {
                const char prev = j >= 0 ? b[static_cast<std::size_t>(j)] : '\0';
                if (prev != 's' && prev != 't') continue;
            }
            if (m() > 1) k = j;
            return;
        }
    }

    // final -e and -ll cleanup
    void step5() {
        j = k;
        if (b[static_cast<std::size_t>(k)] == 'e') {
            const int a = m();
            if (a > 1 || (a == 1 && !cvc(k - 1))) --k;
        }
        if (b[static_cast<std::size_t>(k)] == 'l' && doublec(k) && m() > 1) --k;
    }
};

constexpr std::string_view kStopwords[] = {
    "a",       "about",   "above",   "after",   "again",   "against", "all",
    "am",      "an",      "and",     "any",     "are",     "as",      "at",
    "be",      "because", "been",    "before",  "being",   "below",   "between",
    "both",    "but",     "by",      "can",     "could",   "did",     "do",
    "does",    "doing",   "down",    "during",  "each",    "few",     "for",
    "from",    "further", "had",     "has",     "have",    "having",  "he",
    "her",     "here",    "hers",    "herself", "him",     "himself", "his",
    "how",     "i",       "if",      "in",      "into",    "is",      "it",
    "its",     "itself",  "just",    "me",      "more",    "most",    "my",
    "myself",  "no",      "nor",     "not",     "now",     "of",      "off",
    "on",      "once",    "only",    "or",      "other",   "our",     "ours",
    "out",     "over",    "own",     "same",    "she",     "should",  "so",
    "some",    "such",    "than",    "that",    "the",     "their",   "theirs",
    "them",    "then",    "there",   "these",   "they",    "this",    "those",
    "through", "to",      "too",     "under",   "until",   "up",      "very",
    "was",     "we",      "were",    "what",    "when",    "where",   "which",
    "while",   "who",     "whom",    "why",     "will",    "with",    "would",
    "you",     "your",    "yours",
};

bool is_token_char(unsigned char c) {
    return std::isalnum(c) != 0 || c >= 0x80;
}

bool is_url_stop(unsigned char c) {
    return std::isspace(c) != 0 || c == '<' || c == '>';
}

bool starts_with_ci(std::string_view s, std::size_t pos, std::string_view prefix) {
    if (pos + prefix.size() > s.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(s[pos + i])) != prefix[i]) return false;
    }
    return true;
}

}  // namespace

std::string porter_stem(std::string word) {
    if (word.size() <= 2) return word;
    Stemmer s{std::move(word), 0, 0};
    s.k = static_cast<int>(s.b.size()) - 1;
    s.step1ab();
    s.step1c();
    s.step2();
    s.step3();
    s.step4();
    s.step5();
    s.b.resize(static_cast<std::size_t>(s.k + 1));
    return std::move(s.b);
}

const std::set<std::string>& default_stopwords() {
    static const std::set<std::string> words = [] {
        std::set<std::string> out;
        for (const auto w : kStopwords) out.emplace(w);
        return out;
    }();
    return words;
}

std::set<std::string> load_stopwords(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open stopword file: " + path.string());
    std::set<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        out.insert(to_lower(line));
    }
    return out;
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        const auto uc = static_cast<unsigned char>(c);
        if (uc < 0x80) c = static_cast<char>(std::tolower(uc));
    }
    return out;
}

std::string strip_urls(std::string_view s) {
    std::string out(s);
    std::size_t i = 0;
    while (i < out.size()) {
        std::size_t len = 0;
        if (starts_with_ci(out, i, "http://") || starts_with_ci(out, i, "https://") ||
            starts_with_ci(out, i, "ftp://") || starts_with_ci(out, i, "www.")) {
            std::size_t end = i;
            while (end < out.size() && !is_url_stop(static_cast<unsigned char>(out[end]))) ++end;
            len = end - i;
        }
        if (len > 0) {
            for (std::size_t p = i; p < i + len; ++p) out[p] = ' ';
            i += len;
        } else {
            ++i;
        }
    }
    return out;
}

std::string strip_mentions(std::string_view s) {
    std::string out(s);
    std::size_t i = 0;
    while ((i = out.find("<@", i)) != std::string::npos) {
        const std::size_t close = out.find('>', i + 2);
        if (close == std::string::npos) break;
        for (std::size_t p = i; p <= close; ++p) out[p] = ' ';
        i = close + 1;
    }
    return out;
}

std::vector<std::string> alnum_tokens(std::string_view s) {
    std::vector<std::string> tokens;
    std::string cur;
    for (const char c : s) {
        if (is_token_char(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

}  // namespace anschat::text
