#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "naboe/anchor_stats.hpp"

namespace naboe {

// One possible referent of a name. `entity` indexes the dictionary's title
// table; `commonness` is the fraction of the name's anchored uses pointing
// at that entity, kept as the raw corpus ratio (never renormalized after
// pruning).
struct CandidateEntity {
  std::uint32_t entity = 0;
  double commonness = 0.0;

  friend bool operator==(const CandidateEntity&, const CandidateEntity&) = default;
};

struct DictEntry {
  double link_probability = 0.0;
  // Unique, sorted by descending commonness, ties by title ascending.
  std::vector<CandidateEntity> candidates;

  friend bool operator==(const DictEntry&, const DictEntry&) = default;
};

// Immutable map from normalized entity name to candidate entities. Built
// once, then shared read-only across threads.
class EntityDictionary {
 public:
  EntityDictionary() = default;

  bool contains(const std::string& name) const { return entries_.count(name) > 0; }
  const DictEntry* find(const std::string& name) const {
    const auto it = entries_.find(name);
    return it == entries_.end() ? nullptr : &it->second;
  }

  const std::map<std::string, DictEntry>& entries() const { return entries_; }
  const std::vector<std::string>& entity_titles() const { return titles_; }
  const std::string& title(std::uint32_t entity) const { return titles_[entity]; }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::size_t max_name_tokens() const { return max_name_tokens_; }
  double lp_threshold() const { return lp_threshold_; }
  double commonness_threshold() const { return commonness_threshold_; }

  double mean_candidates_per_name() const;

  friend bool operator==(const EntityDictionary&, const EntityDictionary&) = default;

  friend EntityDictionary build_dictionary(const AnchorStats&, double, double);
  friend EntityDictionary load_dictionary(const std::filesystem::path&);

 private:
  std::map<std::string, DictEntry> entries_;
  std::vector<std::string> titles_;  // entity id -> canonical title
  std::size_t max_name_tokens_ = 1;
  double lp_threshold_ = 0.0;
  double commonness_threshold_ = 0.0;
};

// link_probability = anchor_total / occurrence_total, commonness =
// anchor_count / anchor_total. Names with link probability below
// lp_threshold are dropped, candidates below commonness_threshold are
// dropped, names left with no candidates are dropped. Entity ids are
// assigned over the sorted set of retained titles, so identical stats give
// identical dictionaries. Throws if a name has anchors but no occurrences.
EntityDictionary build_dictionary(const AnchorStats& stats,
                                  double lp_threshold = 0.01,
                                  double commonness_threshold = 0.03);

// Versioned binary container; save -> load -> save is byte-identical.
void save_dictionary(const EntityDictionary& dict,
                     const std::filesystem::path& path);
EntityDictionary load_dictionary(const std::filesystem::path& path);

}  // namespace naboe
