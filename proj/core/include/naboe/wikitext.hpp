#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace naboe {

// One internal anchor link: a normalized surface name and the canonical title
// it points to. Names contain no tabs or newlines (tokenizer output).
struct AnchorRecord {
  std::string name;    // normalized surface string
  std::string target;  // canonical entity title

  friend bool operator==(const AnchorRecord&, const AnchorRecord&) = default;
};

// Best-effort extraction of [[Target]] / [[Target|anchor text]] links.
// Section fragments after '#' are stripped from the target; namespace links
// (a colon with a space-free prefix, e.g. "File:", "Category:") and links
// that normalize to an empty name or target are skipped silently.
std::vector<AnchorRecord> extract_anchors(std::string_view wikitext);

// Document text with every well-formed link span removed. Occurrence
// counting runs over this text; anchored uses are added back from the anchor
// totals, so leaving the link text in place would count them twice.
std::string strip_anchor_text(std::string_view wikitext);

// Title cleanup: '_' -> ' ', whitespace collapsed and trimmed, first ASCII
// letter uppercased (MediaWiki-style). Empty input stays empty.
std::string canonical_title(std::string_view raw);

}  // namespace naboe
