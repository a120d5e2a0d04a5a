#include "naboe/detector.hpp"

namespace naboe {

std::vector<Mention> detect_mentions(std::span<const Token> tokens,
                                     const EntityDictionary& dict) {
  std::vector<Mention> mentions;
  if (dict.empty()) return mentions;
  const auto is_name = [&dict](const std::string& s) {
    return dict.contains(s);
  };
  for (const TokenSpan& span :
       greedy_earliest_longest(tokens, dict.max_name_tokens(), is_name)) {
    Mention mention;
    mention.begin = span.begin;
    mention.end = span.end;
    mention.name = join_tokens(tokens, span.begin, span.end);
    mention.candidates = dict.find(mention.name)->candidates;
    mentions.push_back(std::move(mention));
  }
  return mentions;
}

std::vector<CandidateEntity> candidate_list(std::span<const Mention> mentions) {
  std::vector<CandidateEntity> flat;
  for (const Mention& mention : mentions)
    flat.insert(flat.end(), mention.candidates.begin(),
                mention.candidates.end());
  return flat;
}

}  // namespace naboe
