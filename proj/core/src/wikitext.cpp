#include "naboe/wikitext.hpp"

#include <cctype>

#include "naboe/text.hpp"

namespace naboe {
namespace {

bool ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Namespace heuristic: a leading colon-delimited prefix without spaces
// ("File:...", "Category:..."). Titles like "Star Trek: First Contact" keep
// their colon because the prefix contains a space.
bool has_namespace_prefix(std::string_view title) {
  const std::size_t colon = title.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  const std::string_view prefix = title.substr(0, colon);
  return prefix.find(' ') == std::string_view::npos;
}

struct LinkScan {
  std::size_t open;   // index of "[["
  std::size_t close;  // index of "]]" (npos if unterminated)
  std::size_t next;   // where the outer scan should resume
  bool well_formed;
};

// Finds the next link starting at or after `from`. A nested "[[" before the
// closing "]]" invalidates the outer bracket pair; scanning restarts at the
// inner one.
LinkScan next_link(std::string_view text, std::size_t from) {
  while (true) {
    const std::size_t open = text.find("[[", from);
    if (open == std::string_view::npos)
      return {std::string_view::npos, std::string_view::npos,
              std::string_view::npos, false};
    const std::size_t close = text.find("]]", open + 2);
    const std::size_t inner = text.find("[[", open + 2);
    if (close == std::string_view::npos)
      return {open, close, std::string_view::npos, false};
    if (inner != std::string_view::npos && inner < close) {
      from = inner;
      continue;
    }
    return {open, close, close + 2, true};
  }
}

// Parsed payload of one well-formed link; empty fields mean "skip".
struct ParsedLink {
  std::string name;
  std::string target;
};

ParsedLink parse_link(std::string_view body) {
  std::string_view target_raw = body;
  std::string_view label_raw;
  bool piped = false;
  if (const std::size_t pipe = body.find('|'); pipe != std::string_view::npos) {
    target_raw = body.substr(0, pipe);
    label_raw = body.substr(pipe + 1);
    piped = true;
  }
  if (const std::size_t hash = target_raw.find('#');
      hash != std::string_view::npos)
    target_raw = target_raw.substr(0, hash);

  const std::string target = canonical_title(target_raw);
  if (target.empty() || has_namespace_prefix(target)) return {};

  // Unpiped links use the fragment-stripped target as the surface form.
  const std::string name = normalize_name(piped ? label_raw : target_raw);
  if (name.empty()) return {};
  return {name, target};
}

}  // namespace

std::string canonical_title(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char c : raw) {
    if (c == '_' || ascii_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(c);
  }
  if (!out.empty())
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

std::vector<AnchorRecord> extract_anchors(std::string_view wikitext) {
  std::vector<AnchorRecord> records;
  std::size_t pos = 0;
  while (true) {
    const LinkScan scan = next_link(wikitext, pos);
    if (scan.open == std::string_view::npos || !scan.well_formed) break;
    const std::string_view body =
        wikitext.substr(scan.open + 2, scan.close - scan.open - 2);
    ParsedLink link = parse_link(body);
    if (!link.name.empty())
      records.push_back({std::move(link.name), std::move(link.target)});
    pos = scan.next;
  }
  return records;
}

std::string strip_anchor_text(std::string_view wikitext) {
  std::string out;
  out.reserve(wikitext.size());
  std::size_t pos = 0;
  while (true) {
    const LinkScan scan = next_link(wikitext, pos);
    if (scan.open == std::string_view::npos || !scan.well_formed) break;
    out += wikitext.substr(pos, scan.open - pos);
    out.push_back(' ');
    pos = scan.next;
  }
  out += wikitext.substr(pos);
  return out;
}

}  // namespace naboe
