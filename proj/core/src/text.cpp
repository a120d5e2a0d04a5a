#include "naboe/text.hpp"

#include <array>

namespace naboe {
namespace {

struct Decoded {
  char32_t cp;
  std::size_t len;
};

// Invalid sequences decode as one opaque byte so tokenization never fails.
Decoded decode_utf8(std::string_view s, std::size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1};
  auto cont = [&](std::size_t k) {
    return i + k < s.size() &&
           (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
  };
  auto bits = [&](std::size_t k) {
    return static_cast<char32_t>(static_cast<unsigned char>(s[i + k]) & 0x3F);
  };
  if ((b0 & 0xE0) == 0xC0 && cont(1)) {
    char32_t cp = ((b0 & 0x1Fu) << 6) | bits(1);
    if (cp >= 0x80) return {cp, 2};
  } else if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
    char32_t cp = ((b0 & 0x0Fu) << 12) | (bits(1) << 6) | bits(2);
    if (cp >= 0x800 && !(cp >= 0xD800 && cp <= 0xDFFF)) return {cp, 3};
  } else if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
    char32_t cp = ((b0 & 0x07u) << 18) | (bits(1) << 12) | (bits(2) << 6) | bits(3);
    if (cp >= 0x10000 && cp <= 0x10FFFF) return {cp, 4};
  }
  return {b0, 1};
}

void encode_utf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

char32_t lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;  // Latin-1
  if (cp >= 0x0391 && cp <= 0x03AB && cp != 0x03A2) return cp + 0x20;  // Greek
  if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;                  // Cyrillic
  if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;
  return cp;
}

bool is_space_cp(char32_t cp) {
  switch (cp) {
    case U' ': case U'\t': case U'\n': case U'\r': case U'\f': case U'\v':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_punct_cp(char32_t cp) {
  if (cp < 0x80) {
    // Any printable ASCII that is not alphanumeric, plus control chars.
    bool alnum = (cp >= U'0' && cp <= U'9') || (cp >= U'a' && cp <= U'z') ||
                 (cp >= U'A' && cp <= U'Z');
    return !alnum && !is_space_cp(cp);
  }
  if (cp >= 0x2010 && cp <= 0x205E) return true;  // general punctuation
  switch (cp) {
    case 0xA1: case 0xAB: case 0xB7: case 0xBB: case 0xBF:  // ¡ « · » ¿
    case 0x3001: case 0x3002:                                // 、 。
      return true;
    default:
      return false;
  }
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  Token current;
  bool open = false;
  std::size_t i = 0;
  while (i < text.size()) {
    const Decoded d = decode_utf8(text, i);
    if (is_space_cp(d.cp) || is_punct_cp(d.cp)) {
      if (open) {
        tokens.push_back(std::move(current));
        current = Token{};
        open = false;
      }
    } else {
      if (!open) {
        current.begin = i;
        open = true;
      }
      encode_utf8(lower(d.cp), current.text);
      current.end = i + d.len;
    }
    i += d.len;
  }
  if (open) tokens.push_back(std::move(current));
  return tokens;
}

std::string normalize_name(std::string_view raw) {
  const std::vector<Token> tokens = tokenize(raw);
  return join_tokens(tokens, 0, tokens.size());
}

std::string join_tokens(std::span<const Token> tokens, std::size_t first,
                        std::size_t last) {
  std::string out;
  for (std::size_t i = first; i < last; ++i) {
    if (i != first) out.push_back(' ');
    out += tokens[i].text;
  }
  return out;
}

std::size_t name_token_count(std::string_view normalized_name) {
  if (normalized_name.empty()) return 0;
  std::size_t n = 1;
  for (char c : normalized_name)
    if (c == ' ') ++n;
  return n;
}

std::vector<TokenSpan> greedy_earliest_longest(
    std::span<const Token> tokens, std::size_t max_name_tokens,
    const std::function<bool(const std::string&)>& is_name) {
  std::vector<TokenSpan> spans;
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t best = 0;
    std::string candidate;
    const std::size_t limit = std::min(max_name_tokens, tokens.size() - i);
    for (std::size_t n = 1; n <= limit; ++n) {
      if (n > 1) candidate.push_back(' ');
      candidate += tokens[i + n - 1].text;
      if (is_name(candidate)) best = n;
    }
    if (best > 0) {
      spans.push_back({i, i + best});
      i += best;
    } else {
      ++i;
    }
  }
  return spans;
}

bool utf8_valid(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    if (b0 < 0x80) {
      ++i;
      continue;
    }
    const Decoded d = decode_utf8(text, i);
    if (d.len == 1) return false;  // multi-byte lead that failed to decode
    i += d.len;
  }
  return true;
}

}  // namespace naboe
