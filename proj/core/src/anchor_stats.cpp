#include "naboe/anchor_stats.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "naboe/errors.hpp"

namespace naboe {
namespace {

std::uint64_t parse_count(std::string_view field, const std::string& where) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw format_error(where + ": malformed count '" + std::string(field) + "'");
  return value;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

}  // namespace

AnchorStats aggregate_stats(std::span<const AnchorRecord> records,
                            std::span<const std::vector<Token>> plain_texts,
                            const std::set<std::string>& known_names) {
  AnchorStats stats;
  for (const AnchorRecord& record : records) {
    if (!known_names.contains(record.name))
      throw std::invalid_argument("aggregate_stats: record name '" +
                                  record.name + "' not in known_names");
    ++stats.anchor_counts[record.name][record.target];
    ++stats.name_anchor_totals[record.name];
  }

  std::size_t max_tokens = 1;
  for (const std::string& name : known_names)
    max_tokens = std::max(max_tokens, name_token_count(name));

  std::map<std::string, std::uint64_t> plain_matches;
  const auto is_known = [&](const std::string& s) {
    return known_names.contains(s);
  };
  for (const std::vector<Token>& doc : plain_texts) {
    for (const TokenSpan& span :
         greedy_earliest_longest(doc, max_tokens, is_known))
      ++plain_matches[join_tokens(doc, span.begin, span.end)];
  }

  for (const auto& [name, anchors] : stats.name_anchor_totals) {
    const auto it = plain_matches.find(name);
    stats.name_occurrence_totals[name] =
        anchors + (it == plain_matches.end() ? 0 : it->second);
  }
  return stats;
}

void save_stats_tsv(const AnchorStats& stats,
                    const std::filesystem::path& anchors_tsv,
                    const std::filesystem::path& occurrences_tsv) {
  {
    std::ofstream out(anchors_tsv, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + anchors_tsv.string());
    for (const auto& [name, targets] : stats.anchor_counts)
      for (const auto& [target, count] : targets)
        out << name << '\t' << target << '\t' << count << '\n';
  }
  {
    std::ofstream out(occurrences_tsv, std::ios::binary);
    if (!out)
      throw std::runtime_error("cannot write " + occurrences_tsv.string());
    for (const auto& [name, count] : stats.name_occurrence_totals)
      out << name << '\t' << count << '\n';
  }
}

AnchorStats load_stats_tsv(const std::filesystem::path& anchors_tsv,
                           const std::filesystem::path& occurrences_tsv) {
  AnchorStats stats;
  {
    std::ifstream in = open_input(anchors_tsv);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      const std::string where =
          anchors_tsv.filename().string() + ":" + std::to_string(line_no);
      const auto fields = split_tabs(line);
      if (fields.size() != 3)
        throw format_error(where + ": expected 3 tab-separated fields");
      if (fields[0].empty() || fields[1].empty())
        throw format_error(where + ": empty name or title");
      const std::uint64_t count = parse_count(fields[2], where);
      if (count < 1) throw format_error(where + ": anchor count must be >= 1");
      stats.anchor_counts[std::string(fields[0])][std::string(fields[1])] +=
          count;
      stats.name_anchor_totals[std::string(fields[0])] += count;
    }
  }
  {
    std::ifstream in = open_input(occurrences_tsv);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      const std::string where =
          occurrences_tsv.filename().string() + ":" + std::to_string(line_no);
      const auto fields = split_tabs(line);
      if (fields.size() != 2)
        throw format_error(where + ": expected 2 tab-separated fields");
      if (fields[0].empty()) throw format_error(where + ": empty name");
      stats.name_occurrence_totals[std::string(fields[0])] =
          parse_count(fields[1], where);
    }
  }
  for (const auto& [name, anchors] : stats.name_anchor_totals) {
    const auto it = stats.name_occurrence_totals.find(name);
    if (it == stats.name_occurrence_totals.end())
      throw format_error("occurrence total missing for name '" + name + "'");
    if (it->second < anchors)
      throw format_error("name '" + name +
                         "': occurrence total below anchor total");
  }
  return stats;
}

}  // namespace naboe
