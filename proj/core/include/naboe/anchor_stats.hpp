#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "naboe/text.hpp"
#include "naboe/wikitext.hpp"

namespace naboe {

// Corpus-wide anchor statistics. Ordered maps keep every downstream artifact
// (TSV files, dictionary builds) byte-identical across runs.
struct AnchorStats {
  // name -> target title -> count (>= 1)
  std::map<std::string, std::map<std::string, std::uint64_t>> anchor_counts;
  // name -> total anchored uses (== sum over that name's targets)
  std::map<std::string, std::uint64_t> name_anchor_totals;
  // name -> anchored uses + non-overlapping plain-text occurrences
  std::map<std::string, std::uint64_t> name_occurrence_totals;

  friend bool operator==(const AnchorStats&, const AnchorStats&) = default;
};

// Two-pass protocol: `records` come from pass 1 (anchor extraction) and
// `known_names` is their distinct-name set; pass 2 counts occurrences of the
// known names in link-stripped document text with the same greedy
// earliest-longest matcher the detector uses. Anchored uses count as
// occurrences, so occurrence totals are plain matches plus anchor totals.
// Throws std::invalid_argument if a record's name is not in known_names.
AnchorStats aggregate_stats(std::span<const AnchorRecord> records,
                            std::span<const std::vector<Token>> plain_texts,
                            const std::set<std::string>& known_names);

// anchors.tsv: `name<TAB>title<TAB>count`, occurrences.tsv: `name<TAB>count`.
// UTF-8, LF, names and titles sorted ascending.
void save_stats_tsv(const AnchorStats& stats,
                    const std::filesystem::path& anchors_tsv,
                    const std::filesystem::path& occurrences_tsv);

// Throws format_error with a line number on malformed input, and when the
// files violate the stats invariants (occurrences < anchors, count < 1).
AnchorStats load_stats_tsv(const std::filesystem::path& anchors_tsv,
                           const std::filesystem::path& occurrences_tsv);

}  // namespace naboe
