#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "naboe/detector.hpp"
#include "naboe/dictionary.hpp"

namespace naboe {

// A candidate with its entity resolved to the canonical title, decoupled
// from any particular dictionary's id space.
struct ResolvedCandidate {
  std::string entity;
  double commonness = 0.0;

  friend bool operator==(const ResolvedCandidate&, const ResolvedCandidate&) = default;
};

// A document after tokenization and mention detection, before vocabulary
// mapping: the word sequence plus the flat candidate-entity list.
struct ProcessedDoc {
  std::vector<std::string> words;
  std::vector<ResolvedCandidate> candidates;
  std::string label;
};

ProcessedDoc process_document(std::string_view text,
                              const EntityDictionary& dict,
                              std::string label = {});

}  // namespace naboe
