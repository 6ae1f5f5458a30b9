#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "graphweight/graph.hpp"

namespace graphweight {

/// Exact edge probability num/den with 0 <= num <= den, den > 0.
struct Probability {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  /// Accepts "a/b", a terminating decimal such as "0.25", or "0"/"1".
  /// Throws std::invalid_argument on anything outside [0, 1].
  static Probability parse(std::string_view text);
  [[nodiscard]] std::string to_string() const;
};

/// SplitMix64 output function (Steele, Lea, Flood 2014).
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// The index-th output (0-based) of a SplitMix64 stream started at `seed`.
/// Counter-based, so any element can be drawn independently of the others.
constexpr std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) noexcept {
  return splitmix64_mix(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

/// G(n, p) with a platform-independent generator: potential edge number e
/// (lexicographic order of pairs i < j) is present iff
/// splitmix64_at(seed, e) < p * 2^64, compared exactly in 128-bit integers.
Graph random_graph(int n, Probability p, std::uint64_t seed);

/// Number of labelled graphs on n vertices, 2^(n(n-1)/2). Requires n <= 8.
std::uint64_t labeled_graph_count(int n);

/// The labelled graph whose edge set is the bits of `code`, bit e standing
/// for pair number e in lexicographic order. Codes 0..count-1 enumerate every
/// labelled graph exactly once.
Graph labeled_graph(int n, std::uint64_t code);

}  // namespace graphweight
