#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace naboe {

// A lowercased word with its [begin, end) byte span in the source document.
struct Token {
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

// Splits on whitespace and punctuation; punctuation is dropped, letters are
// lowercased. ASCII, Latin-1, Greek and Cyrillic letters get case mapping;
// other codepoints pass through unchanged. Deterministic, locale-free.
std::vector<Token> tokenize(std::string_view text);

// Canonical form of an entity name: tokenize + join with single spaces.
// This is exactly what the detector can match, so dictionary keys, anchor
// names and occurrence counting all share one normalization.
std::string normalize_name(std::string_view raw);

// Space-joined text of tokens[first, last).
std::string join_tokens(std::span<const Token> tokens, std::size_t first,
                        std::size_t last);

// Number of space-separated tokens in a normalized name.
std::size_t name_token_count(std::string_view normalized_name);

struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;  // token indices, [begin, end)

  friend bool operator==(const TokenSpan&, const TokenSpan&) = default;
};

// Greedy earliest-longest scan: at each position take the longest n-gram
// (n <= max_name_tokens) that is_name accepts, emit it and resume after its
// end; otherwise advance one token. Matches never overlap.
std::vector<TokenSpan> greedy_earliest_longest(
    std::span<const Token> tokens, std::size_t max_name_tokens,
    const std::function<bool(const std::string&)>& is_name);

bool utf8_valid(std::string_view text);

}  // namespace naboe
