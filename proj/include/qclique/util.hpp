#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qclique {

// Thrown when a state allocation would exceed the configured qubit cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// splitmix64; used to derive independent per-stream seeds from a master seed.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Exact binomial coefficient; overflows uint64 only far beyond the sizes
// used here (n <= 62 is always exact).
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

inline int popcount64(std::uint64_t x) { return __builtin_popcountll(x); }

// Bits of `value` printed MSB-first, i.e. bit (size-1) leftmost.
inline std::string format_bits(std::uint64_t value, int size) {
  std::string s(static_cast<size_t>(size), '0');
  for (int i = 0; i < size; ++i) {
    if ((value >> i) & 1ULL) s[static_cast<size_t>(size - 1 - i)] = '1';
  }
  return s;
}

inline std::uint64_t parse_bits(const std::string& s) {
  std::uint64_t v = 0;
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("bitstring must contain only 0/1: " + s);
    v = (v << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return v;
}

}  // namespace qclique
