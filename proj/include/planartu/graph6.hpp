#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "planartu/graph.hpp"

namespace planartu {

struct Graph6Error : std::runtime_error {
    enum class Kind {
        malformed_header,
        truncated,
        trailing_garbage,
        bad_character,
        nonzero_padding,
        capacity,
    };
    Kind kind;
    Graph6Error(Kind k, const std::string& what)
        : std::runtime_error(what), kind(k) {}
};

/// Decodes one graph6 line (the optional ">>graph6<<" prefix is accepted).
/// Upper-triangle bits in column order (0,1),(0,2),(1,2),(0,3),...; six bits
/// per printable byte offset by 63.
Graph graph6_decode(std::string_view line);

/// Encodes to graph6 text: single-byte size header for n <= 62, the '~'
/// three-byte form for n in {63, 64}.
std::string graph6_encode(const Graph& g);

}  // namespace planartu
