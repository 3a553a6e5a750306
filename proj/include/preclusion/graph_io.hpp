#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "preclusion/graph.hpp"

namespace preclusion::io {

enum class Format { Graph6, EdgeList, Json };

// "g6"/"graph6", "edges"/"edge_list", "json".
std::optional<Format> format_from_name(std::string_view name);
std::string_view format_name(Format format);

// Throws ParseError (with byte offset) on malformed input. Parsed graphs carry
// a bipartition only when the input states one (JSON).
Graph parse(Format format, std::string_view bytes);

// graph6 and edge-list output end with a newline.
std::string emit(const Graph& g, Format format);

// Leading "n m" line selects the edge list, a leading '{' selects JSON,
// anything else is read as graph6.
Format detect_format(std::string_view bytes);
Graph parse_auto(std::string_view bytes);

}  // namespace preclusion::io
