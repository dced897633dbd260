#ifndef LIEINV_UTIL_HPP
#define LIEINV_UTIL_HPP

#include <cstdint>
#include <string>

namespace lieinv {

// Stable content hash for cache keys and resume guards (not cryptographic).
inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace lieinv

#endif
