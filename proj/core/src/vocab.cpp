#include "naboe/vocab.hpp"

#include <algorithm>
#include <map>

namespace naboe {
namespace {

std::vector<std::string> filter_and_order(
    const std::map<std::string, std::uint64_t>& counts,
    std::uint32_t min_count) {
  std::vector<std::pair<std::string, std::uint64_t>> kept;
  for (const auto& [item, count] : counts)
    if (count >= min_count) kept.emplace_back(item, count);
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<std::string> ordered;
  ordered.reserve(kept.size());
  for (auto& [item, count] : kept) ordered.push_back(std::move(item));
  return ordered;
}

}  // namespace

Vocabulary::Vocabulary(std::vector<std::string> words,
                       std::vector<std::string> entities,
                       std::uint32_t min_count)
    : words_(std::move(words)),
      entities_(std::move(entities)),
      min_count_(min_count) {
  word_index_.reserve(words_.size());
  for (std::uint32_t i = 0; i < words_.size(); ++i)
    word_index_.emplace(words_[i], i);
  entity_index_.reserve(entities_.size());
  for (std::uint32_t i = 0; i < entities_.size(); ++i)
    entity_index_.emplace(entities_[i], i);
}

std::optional<std::uint32_t> Vocabulary::word(const std::string& w) const {
  const auto it = word_index_.find(w);
  if (it == word_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> Vocabulary::entity(const std::string& e) const {
  const auto it = entity_index_.find(e);
  if (it == entity_index_.end()) return std::nullopt;
  return it->second;
}

Vocabulary build_vocab(std::span<const ProcessedDoc> docs,
                       std::uint32_t min_count) {
  std::map<std::string, std::uint64_t> word_counts;
  std::map<std::string, std::uint64_t> entity_counts;
  for (const ProcessedDoc& doc : docs) {
    for (const std::string& word : doc.words) ++word_counts[word];
    for (const ResolvedCandidate& candidate : doc.candidates)
      ++entity_counts[candidate.entity];
  }
  return Vocabulary(filter_and_order(word_counts, min_count),
                    filter_and_order(entity_counts, min_count), min_count);
}

}  // namespace naboe
