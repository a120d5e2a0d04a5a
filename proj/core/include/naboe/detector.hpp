#pragma once

#include <span>
#include <string>
#include <vector>

#include "naboe/dictionary.hpp"
#include "naboe/text.hpp"

namespace naboe {

// A detected entity name: token span, normalized surface form and the
// dictionary candidates copied verbatim. No disambiguation happens here.
struct Mention {
  std::size_t begin = 0;  // token indices, [begin, end)
  std::size_t end = 0;
  std::string name;
  std::vector<CandidateEntity> candidates;

  friend bool operator==(const Mention&, const Mention&) = default;
};

// Greedy left-to-right scan with earliest-longest boundary resolution.
// Mentions are non-overlapping and in document order.
std::vector<Mention> detect_mentions(std::span<const Token> tokens,
                                     const EntityDictionary& dict);

// Flat concatenation of every mention's candidates, preserving mention order
// and within-mention order. Duplicates are kept; the result's length is the
// model's K.
std::vector<CandidateEntity> candidate_list(std::span<const Mention> mentions);

}  // namespace naboe
