#pragma once

#include <string>
#include <string_view>

#include "abcover/graph.hpp"

namespace abcover {

/// Decodes one graph6 line (no trailing newline). An optional ">>graph6<<"
/// prefix is accepted. Throws ParseError with the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Encodes `g` in graph6: size header, then the upper triangle in column-major
/// order (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte + 63.
std::string encode_graph6(const Graph& g);

}  // namespace abcover
