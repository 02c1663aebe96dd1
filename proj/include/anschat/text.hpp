#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace anschat::text {

// Porter suffix-stripping stemmer (the classic algorithm, including the
// reference implementation's revised step-2 rules). Expects a lowercase word.
std::string porter_stem(std::string word);

// Built-in English stopword list, lowercase, sorted.
const std::set<std::string>& default_stopwords();

// Loads a stopword file: one token per line, UTF-8, '#' comments allowed.
std::set<std::string> load_stopwords(const std::filesystem::path& path);

// ASCII lowercasing; bytes >= 0x80 pass through untouched.
std::string to_lower(std::string_view s);

// Replaces http(s)/ftp/www URLs with spaces.
std::string strip_urls(std::string_view s);

// Replaces <@...> mention tokens with spaces.
std::string strip_mentions(std::string_view s);

// Splits on non-alphanumeric ASCII; bytes >= 0x80 count as token characters.
std::vector<std::string> alnum_tokens(std::string_view s);

}  // namespace anschat::text
