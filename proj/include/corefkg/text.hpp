#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace corefkg {

// ASCII-only case folding; non-ASCII bytes pass through untouched.
char fold_char(char c);
std::string fold_case(std::string_view s);

std::string trim(std::string_view s);

// Collapses runs of whitespace to single spaces (after trimming).
std::string collapse_whitespace(std::string_view s);

bool iequals(std::string_view a, std::string_view b);

// Case-insensitive substring containment.
bool icontains(std::string_view haystack, std::string_view needle);

bool is_word_char(char c);

// Case-insensitive search for `needle` at positions where its alphanumeric edges
// do not continue a surrounding word. Returns npos when absent.
std::size_t find_word(std::string_view haystack, std::string_view needle, std::size_t from = 0);

bool contains_word(std::string_view haystack, std::string_view needle);

std::size_t count_word_occurrences(std::string_view haystack, std::string_view needle);

// Validates UTF-8 byte structure; returns false on malformed sequences.
bool is_valid_utf8(std::string_view s);

// Converts \r\n and lone \r to \n.
std::string normalize_newlines(std::string_view s);

std::vector<std::string> split_lines(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace corefkg
