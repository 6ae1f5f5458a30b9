#include "graphweight/random_graph.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "graphweight/colorings.hpp"

namespace graphweight {

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("malformed probability '" + std::string(whole) + "'");
  return v;
}

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  return pairs;
}

}  // namespace

Probability Probability::parse(std::string_view text) {
  Probability p;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    p.num = parse_u64(text.substr(0, slash), text);
    p.den = parse_u64(text.substr(slash + 1), text);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 18) throw std::invalid_argument("too many decimals in '" + std::string(text) + "'");
    p.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) p.den *= 10;
    const std::uint64_t w = whole.empty() ? 0 : parse_u64(whole, text);
    const std::uint64_t f = frac.empty() ? 0 : parse_u64(frac, text);
    if (w > 1) throw std::invalid_argument("probability above 1: '" + std::string(text) + "'");
    p.num = w * p.den + f;
  } else {
    p.num = parse_u64(text, text);
    p.den = 1;
  }
  if (p.den == 0 || p.num > p.den)
    throw std::invalid_argument("probability must lie in [0, 1]: '" + std::string(text) + "'");
  const auto g = std::gcd(p.num, p.den);
  if (g > 1) {
    p.num /= g;
    p.den /= g;
  }
  return p;
}

std::string Probability::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

Graph random_graph(int n, Probability p, std::uint64_t seed) {
  if (p.den == 0 || p.num > p.den) throw std::invalid_argument("probability must lie in [0, 1]");
  const auto pairs = all_pairs(n);
  std::vector<Edge> chosen;
  const WideCount threshold = static_cast<WideCount>(p.num) << 64;
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    const WideCount draw = static_cast<WideCount>(splitmix64_at(seed, e)) * p.den;
    if (draw < threshold) chosen.push_back(pairs[e]);
  }
  return Graph(n, chosen);
}

std::uint64_t labeled_graph_count(int n) {
  if (n < 0 || n > 8) throw std::invalid_argument("labelled enumeration supports 0 <= n <= 8");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled_graph(int n, std::uint64_t code) {
  if (code >= labeled_graph_count(n)) throw std::invalid_argument("edge code out of range");
  const auto pairs = all_pairs(n);
  std::vector<Edge> chosen;
  for (std::size_t e = 0; e < pairs.size(); ++e)
    if ((code >> e) & 1U) chosen.push_back(pairs[e]);
  return Graph(n, chosen);
}

}  // namespace graphweight
