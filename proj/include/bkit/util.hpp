#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bkit {

// Subsets of a ground set are bitmasks over positions 0..n-1.
using Mask = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int popcount(Mask m) { return __builtin_popcount(m); }

inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  while (m) {
    int b = __builtin_ctz(m);
    out.push_back(b);
    m &= m - 1;
  }
  return out;
}

inline Mask full_mask(int n) {
  return n == 32 ? ~Mask(0) : (Mask(1) << n) - 1;
}

// Canonical sorted-set encoding of a subset, e.g. "{1,2,4}".  Positions are
// listed in ground-set order so that ids built by different pipelines
// compare bit-exactly.
inline std::string set_string(Mask m, const std::vector<std::string>& labels) {
  std::string s = "{";
  bool first = true;
  for (int b : bits_of(m)) {
    if (!first) s += ",";
    s += labels[static_cast<size_t>(b)];
    first = false;
  }
  s += "}";
  return s;
}

// Deterministic 64-bit linear congruential generator (Knuth's MMIX
// multiplier).  Used wherever seeded sampling must be reproducible across
// platforms; no platform RNG is involved anywhere.
struct Lcg {
  std::uint64_t state;

  explicit Lcg(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state;
  }

  // Uniform-ish integer in [lo, hi], inclusive.
  long long next_int(long long lo, long long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long long>((next() >> 16) % span);
  }
};

}  // namespace bkit
