#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "naboe/document.hpp"

namespace naboe {

// Word and entity index spaces with frequency filtering. Indices are dense,
// assigned by descending corpus frequency with ties broken by string
// ascending, so construction is deterministic and independent of document
// order.
class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::vector<std::string> words, std::vector<std::string> entities,
             std::uint32_t min_count);

  std::optional<std::uint32_t> word(const std::string& w) const;
  std::optional<std::uint32_t> entity(const std::string& e) const;

  const std::vector<std::string>& words() const { return words_; }
  const std::vector<std::string>& entities() const { return entities_; }
  std::size_t num_words() const { return words_.size(); }
  std::size_t num_entities() const { return entities_.size(); }
  std::uint32_t min_count() const { return min_count_; }

  bool operator==(const Vocabulary& other) const {
    return words_ == other.words_ && entities_ == other.entities_ &&
           min_count_ == other.min_count_;
  }

 private:
  std::vector<std::string> words_;
  std::vector<std::string> entities_;
  std::unordered_map<std::string, std::uint32_t> word_index_;
  std::unordered_map<std::string, std::uint32_t> entity_index_;
  std::uint32_t min_count_ = 1;
};

// Counts word occurrences and entity detections across the corpus; items
// seen fewer than min_count times are excluded. An empty corpus yields an
// empty vocabulary.
Vocabulary build_vocab(std::span<const ProcessedDoc> docs,
                       std::uint32_t min_count);

}  // namespace naboe
