#include "naboe/document.hpp"

namespace naboe {

ProcessedDoc process_document(std::string_view text,
                              const EntityDictionary& dict,
                              std::string label) {
  ProcessedDoc doc;
  doc.label = std::move(label);
  const std::vector<Token> tokens = tokenize(text);
  doc.words.reserve(tokens.size());
  for (const Token& token : tokens) doc.words.push_back(token.text);
  for (const CandidateEntity& candidate :
       candidate_list(detect_mentions(tokens, dict)))
    doc.candidates.push_back({dict.title(candidate.entity), candidate.commonness});
  return doc;
}

}  // namespace naboe
