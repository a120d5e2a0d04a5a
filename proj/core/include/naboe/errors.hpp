#pragma once

#include <stdexcept>
#include <string>

namespace naboe {

// Malformed or version-incompatible input files (TSV, dictionary, checkpoint,
// vector files). Distinct from std::runtime_error so callers can map it to a
// usage/input exit code.
class format_error : public std::runtime_error {
 public:
  explicit format_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace naboe
