#include "naboe/dictionary.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "naboe/text.hpp"
#include "serialize.hpp"

namespace naboe {
namespace {

constexpr char kMagic[] = "NABOEDICT";
constexpr std::uint32_t kVersion = 1;

}  // namespace

double EntityDictionary::mean_candidates_per_name() const {
  if (entries_.empty()) return 0.0;
  std::size_t total = 0;
  for (const auto& [name, entry] : entries_) total += entry.candidates.size();
  return static_cast<double>(total) / static_cast<double>(entries_.size());
}

EntityDictionary build_dictionary(const AnchorStats& stats,
                                  double lp_threshold,
                                  double commonness_threshold) {
  // First pass keeps (title, commonness) pairs; ids are assigned once the
  // retained title set is known.
  std::map<std::string, std::pair<double, std::vector<std::pair<std::string, double>>>>
      retained;
  std::set<std::string> retained_titles;

  for (const auto& [name, targets] : stats.anchor_counts) {
    const std::uint64_t anchors = stats.name_anchor_totals.at(name);
    const auto occ_it = stats.name_occurrence_totals.find(name);
    if (occ_it == stats.name_occurrence_totals.end() || occ_it->second == 0)
      throw std::invalid_argument(
          "build_dictionary: name '" + name +
          "' has anchors but occurrence total 0");
    const std::uint64_t occurrences = occ_it->second;

    const double link_probability =
        static_cast<double>(anchors) / static_cast<double>(occurrences);
    if (link_probability < lp_threshold) continue;

    std::vector<std::pair<std::string, double>> candidates;
    for (const auto& [title, count] : targets) {
      const double commonness =
          static_cast<double>(count) / static_cast<double>(anchors);
      if (commonness < commonness_threshold) continue;
      candidates.emplace_back(title, commonness);
    }
    if (candidates.empty()) continue;

    std::sort(candidates.begin(), candidates.end(),
              [](const auto& a, const auto& b) {
                if (a.second != b.second) return a.second > b.second;
                return a.first < b.first;
              });
    for (const auto& [title, commonness] : candidates)
      retained_titles.insert(title);
    retained.emplace(name,
                     std::make_pair(link_probability, std::move(candidates)));
  }

  EntityDictionary dict;
  dict.lp_threshold_ = lp_threshold;
  dict.commonness_threshold_ = commonness_threshold;
  dict.titles_.assign(retained_titles.begin(), retained_titles.end());
  std::map<std::string, std::uint32_t> title_id;
  for (std::uint32_t i = 0; i < dict.titles_.size(); ++i)
    title_id.emplace(dict.titles_[i], i);

  std::size_t max_tokens = 1;
  for (auto& [name, lp_candidates] : retained) {
    DictEntry entry;
    entry.link_probability = lp_candidates.first;
    for (const auto& [title, commonness] : lp_candidates.second)
      entry.candidates.push_back({title_id.at(title), commonness});
    max_tokens = std::max(max_tokens, name_token_count(name));
    dict.entries_.emplace(name, std::move(entry));
  }
  dict.max_name_tokens_ = max_tokens;
  return dict;
}

void save_dictionary(const EntityDictionary& dict,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(kMagic, sizeof(kMagic) - 1);
  detail::write_u32(out, kVersion);
  detail::write_f64(out, dict.lp_threshold());
  detail::write_f64(out, dict.commonness_threshold());
  detail::write_u64(out, dict.max_name_tokens());

  detail::write_u64(out, dict.entity_titles().size());
  for (const std::string& title : dict.entity_titles())
    detail::write_string(out, title);

  detail::write_u64(out, dict.entries().size());
  for (const auto& [name, entry] : dict.entries()) {
    detail::write_string(out, name);
    detail::write_f64(out, entry.link_probability);
    detail::write_u64(out, entry.candidates.size());
    for (const CandidateEntity& candidate : entry.candidates) {
      detail::write_u32(out, candidate.entity);
      detail::write_f64(out, candidate.commonness);
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

EntityDictionary load_dictionary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  detail::expect_magic(in, kMagic, "dictionary");
  detail::expect_version(in, kVersion, "dictionary");

  EntityDictionary dict;
  dict.lp_threshold_ = detail::read_f64(in);
  dict.commonness_threshold_ = detail::read_f64(in);
  dict.max_name_tokens_ = detail::read_u64(in);

  const std::uint64_t n_titles = detail::read_u64(in);
  dict.titles_.reserve(n_titles);
  for (std::uint64_t i = 0; i < n_titles; ++i)
    dict.titles_.push_back(detail::read_string(in));

  const std::uint64_t n_names = detail::read_u64(in);
  for (std::uint64_t i = 0; i < n_names; ++i) {
    std::string name = detail::read_string(in);
    DictEntry entry;
    entry.link_probability = detail::read_f64(in);
    const std::uint64_t n_candidates = detail::read_u64(in);
    entry.candidates.reserve(n_candidates);
    for (std::uint64_t c = 0; c < n_candidates; ++c) {
      CandidateEntity candidate;
      candidate.entity = detail::read_u32(in);
      candidate.commonness = detail::read_f64(in);
      entry.candidates.push_back(candidate);
    }
    dict.entries_.emplace_hint(dict.entries_.end(), std::move(name),
                               std::move(entry));
  }
  return dict;
}

}  // namespace naboe
