#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "naboe/matrix.hpp"
#include "naboe/vocab.hpp"

namespace naboe {

struct CoverageReport {
  std::size_t word_hits = 0;
  std::size_t word_misses = 0;
  std::size_t entity_hits = 0;
  std::size_t entity_misses = 0;

  friend bool operator==(const CoverageReport&, const CoverageReport&) = default;
};

std::string coverage_to_json(const CoverageReport& report);

// Every element uniform in [-0.5/dim, 0.5/dim] from a seeded mt19937_64.
// Same (rows, dim, seed) gives a bitwise-identical matrix on any platform.
Matrix random_init(std::size_t rows, std::size_t dim, std::uint64_t seed);

struct PretrainedEmbeddings {
  Matrix words;
  Matrix entities;
  CoverageReport coverage;
};

// Text vector file: first line `count dim`, then `token v1 ... vd`. Entity
// tokens carry the `ENTITY/` prefix with spaces in titles written as
// underscores. Vocabulary items absent from the file keep their random_init
// row (seeded with `seed` for words, a derived stream for entities).
// Throws format_error on a malformed line or a dimension mismatch.
PretrainedEmbeddings load_pretrained(const std::filesystem::path& path,
                                     const Vocabulary& vocab, std::size_t dim,
                                     std::uint64_t seed);

// Writer for the same format; used to export embeddings and to build
// fixture files. Values are printed with shortest round-trip precision.
void save_vectors(const std::filesystem::path& path, const Vocabulary& vocab,
                  const Matrix& words, const Matrix& entities);

}  // namespace naboe
