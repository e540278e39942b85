#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cayley::enc {

// Sign-biased big-endian: byte-lexicographic order equals numeric order.
inline void put_i64_ordered(std::string& out, std::int64_t v) {
  auto u = static_cast<std::uint64_t>(v) ^ 0x8000000000000000ull;
  for (int s = 56; s >= 0; s -= 8)
    out.push_back(static_cast<char>((u >> s) & 0xffu));
}

// Zigzag LEB128, self-delimiting.
inline void put_varint(std::string& out, std::int64_t v) {
  auto u = (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
  while (u >= 0x80) {
    out.push_back(static_cast<char>(u | 0x80u));
    u >>= 7;
  }
  out.push_back(static_cast<char>(u));
}

inline std::string to_hex(std::string_view bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

}  // namespace cayley::enc
