#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace sieveball {

// Unsigned LEB128: 7 payload bits per byte, least significant group first,
// continuation bit set on every byte except the last.
inline void leb128_encode(uint64_t value, std::vector<uint8_t>& out) {
  while (value >= 0x80) {
    out.push_back(static_cast<uint8_t>(value) | 0x80);
    value >>= 7;
  }
  out.push_back(static_cast<uint8_t>(value));
}

inline std::vector<uint8_t> leb128_encode(uint64_t value) {
  std::vector<uint8_t> out;
  leb128_encode(value, out);
  return out;
}

// Decodes one varint starting at *pos. Throws on truncation and on encodings
// longer than 10 bytes (the maximum a u64 can legitimately occupy).
inline uint64_t leb128_decode(std::span<const uint8_t> bytes, size_t& pos) {
  uint64_t value = 0;
  unsigned shift = 0;
  for (unsigned i = 0; i < 10; ++i) {
    if (pos >= bytes.size()) throw std::runtime_error("leb128: truncated varint");
    const uint8_t b = bytes[pos++];
    value |= uint64_t(b & 0x7F) << shift;
    if ((b & 0x80) == 0) return value;
    shift += 7;
  }
  throw std::runtime_error("leb128: varint exceeds 10 bytes");
}

}  // namespace sieveball
