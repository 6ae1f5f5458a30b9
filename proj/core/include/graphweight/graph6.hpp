#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "graphweight/graph.hpp"

namespace graphweight {

/// Largest order representable with the single-byte graph6 size header.
inline constexpr int kMaxGraph6Order = 62;

class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for the multi-byte size header (n > 62), which is not supported.
class Graph6UnsupportedSize : public Graph6Error {
 public:
  using Graph6Error::Graph6Error;
};

/// Decodes one graph6 line (no ">>graph6<<" header, no trailing newline;
/// a trailing '\r' or '\n' is tolerated).
Graph parse_graph6(std::string_view text);

/// Encodes a graph of order <= 62; throws Graph6UnsupportedSize otherwise.
std::string encode_graph6(const Graph& g);

}  // namespace graphweight
