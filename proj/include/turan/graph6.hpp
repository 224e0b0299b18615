#pragma once

#include <string>

#include "turan/graph.hpp"

namespace turan {

/// Encodes to the standard graph6 format (upper triangle, column order,
/// 6-bit groups offset by 63).  Orders up to 128 use the long form "~...".
std::string graph6_encode(const Graph& g);

/// Decodes a graph6 string.  An optional ">>graph6<<" prefix is stripped.
/// Throws std::invalid_argument on malformed headers, characters outside
/// [63, 126], truncated bit vectors, trailing characters, or nonzero
/// padding bits.
Graph graph6_decode(const std::string& text);

} // namespace turan
