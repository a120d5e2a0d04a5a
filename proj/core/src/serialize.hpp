#pragma once

// Little-endian binary readers/writers shared by the dictionary and
// checkpoint containers. Doubles travel as raw IEEE-754 bits so round-trips
// are exact.

#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

#include "naboe/errors.hpp"

namespace naboe::detail {

inline void write_u64(std::ostream& out, std::uint64_t v) {
  char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(bytes, 8);
}

inline void write_u32(std::ostream& out, std::uint32_t v) {
  char bytes[4];
  for (int i = 0; i < 4; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(bytes, 4);
}

inline void write_f64(std::ostream& out, double v) {
  write_u64(out, std::bit_cast<std::uint64_t>(v));
}

inline void write_string(std::ostream& out, const std::string& s) {
  write_u64(out, s.size());
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

inline std::uint64_t read_u64(std::istream& in) {
  unsigned char bytes[8];
  in.read(reinterpret_cast<char*>(bytes), 8);
  if (!in) throw format_error("unexpected end of file");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  return v;
}

inline std::uint32_t read_u32(std::istream& in) {
  unsigned char bytes[4];
  in.read(reinterpret_cast<char*>(bytes), 4);
  if (!in) throw format_error("unexpected end of file");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(bytes[i]) << (8 * i);
  return v;
}

inline double read_f64(std::istream& in) {
  return std::bit_cast<double>(read_u64(in));
}

inline std::string read_string(std::istream& in) {
  const std::uint64_t n = read_u64(in);
  std::string s(n, '\0');
  in.read(s.data(), static_cast<std::streamsize>(n));
  if (!in) throw format_error("unexpected end of file");
  return s;
}

inline void expect_magic(std::istream& in, const std::string& magic,
                         const std::string& what) {
  std::string found(magic.size(), '\0');
  in.read(found.data(), static_cast<std::streamsize>(magic.size()));
  if (!in || found != magic)
    throw format_error(what + ": bad magic (not a recognized file)");
}

inline void expect_version(std::istream& in, std::uint32_t supported,
                           const std::string& what) {
  const std::uint32_t version = read_u32(in);
  if (version != supported)
    throw format_error(what + ": unsupported format version " +
                       std::to_string(version) + " (expected " +
                       std::to_string(supported) + ")");
}

}  // namespace naboe::detail
