#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace demhop {

// Coxeter families handled by this library.
enum class Family : char { A = 'a', B = 'b', D = 'd' };

enum class Side { Left, Right };

// One-line notation storage. Entries are 1-based values; signed families
// use negative entries to carry the sign.
using Window = std::vector<int>;

// A word in the simple generators, letters 1..n-1 (type A) or 1..n (B/D).
using Word = std::vector<int>;

// Ordered duplicate-free list over {1..n} or +-{1..n}, the L argument of
// hopping operators.
using HopList = std::vector<int>;

inline const char* family_name(Family f) {
  switch (f) {
    case Family::A: return "a";
    case Family::B: return "b";
    case Family::D: return "d";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "a" || s == "A") return Family::A;
  if (s == "b" || s == "B") return Family::B;
  if (s == "d" || s == "D") return Family::D;
  throw std::invalid_argument("unknown family '" + s + "' (expected a, b or d)");
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Total order on +-{1..n}: 1 < 2 < ... < n < -n < ... < -2 < -1.
inline bool pm_less(int a, int b) {
  if ((a > 0) != (b > 0)) return a > 0;  // positives before negatives
  return a < b;  // within one sign the integer order agrees with the pm order
}

inline int pm_cmp(int a, int b) {
  if (a == b) return 0;
  return pm_less(a, b) ? -1 : 1;
}

// Rank of value v in the +-{1..n} order, as 1..2n. Also the normalization
// map that relabels -{1..n} with {n+1,...,2n}.
inline int pm_key(int v, int n) {
  if (v >= 1 && v <= n) return v;
  if (v <= -1 && v >= -n) return 2 * n + 1 + v;
  throw std::invalid_argument("value " + std::to_string(v) + " out of +-1.." + std::to_string(n));
}

// Inverse of pm_key: 1..2n back to +-{1..n}.
inline int pm_unkey(int k, int n) {
  ensure(k >= 1 && k <= 2 * n, "normalized value out of 1..2n");
  return k <= n ? k : k - (2 * n + 1);
}

struct WindowHash {
  std::size_t operator()(const Window& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : w) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace demhop
