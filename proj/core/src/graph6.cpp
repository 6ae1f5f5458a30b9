#include "graphweight/graph6.hpp"

#include <vector>

namespace graphweight {

namespace {

constexpr int kBias = 63;

std::size_t payload_bytes(int n) {
  const auto bits = static_cast<std::size_t>(n * (n - 1) / 2);
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string");

  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw Graph6Error("graph6 byte out of range at position " + std::to_string(i));
  }
  if (text[0] == '~') throw Graph6UnsupportedSize("graph6 extended size header (n > 62) unsupported");

  const int n = static_cast<unsigned char>(text[0]) - kBias;
  const auto body = text.substr(1);
  if (body.size() != payload_bytes(n))
    throw Graph6Error("graph6 length mismatch: expected " + std::to_string(payload_bytes(n) + 1) +
                      " bytes for n=" + std::to_string(n) + ", got " + std::to_string(text.size()));

  std::vector<Mask> rows(static_cast<std::size_t>(n), 0);
  std::size_t bit = 0;
  // Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = static_cast<unsigned char>(body[bit / 6]) - kBias;
      if ((byte >> (5 - bit % 6)) & 1) {
        rows[static_cast<std::size_t>(i)] |= Mask{1} << j;
        rows[static_cast<std::size_t>(j)] |= Mask{1} << i;
      }
    }
  }
  if (bit % 6 != 0) {
    const int last = static_cast<unsigned char>(body.back()) - kBias;
    if ((last & ((1 << (6 - bit % 6)) - 1)) != 0) throw Graph6Error("graph6 nonzero padding bits");
  }
  return Graph::from_adjacency(rows);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order)
    throw Graph6UnsupportedSize("graph order " + std::to_string(n) + " exceeds graph6 limit of 62");

  std::string out;
  out.reserve(payload_bytes(n) + 1);
  out.push_back(static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace graphweight
