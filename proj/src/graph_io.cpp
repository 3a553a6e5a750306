#include "preclusion/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "preclusion/error.hpp"

namespace preclusion::io {
namespace {

using json = nlohmann::json;

constexpr std::string_view kGraph6Header = ">>graph6<<";

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// --- graph6 ------------------------------------------------------------------

void append_graph6_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  append_graph6_size(out, n);
  int filled = 0;
  unsigned current = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i) {
      current = (current << 1) | (g.has_edge(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(current + 63));
        filled = 0;
        current = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((current << (6 - filled)) + 63));
  out.push_back('\n');
  return out;
}

Graph parse_graph6(std::string_view bytes) {
  std::size_t pos = 0;
  if (bytes.substr(0, kGraph6Header.size()) == kGraph6Header) pos = kGraph6Header.size();
  std::size_t end = bytes.size();
  while (end > pos && is_space(bytes[end - 1])) --end;

  auto sextet = [&](std::size_t at) -> unsigned {
    if (at >= end) throw ParseError("graph6: truncated input", at);
    const auto c = static_cast<unsigned char>(bytes[at]);
    if (c < 63 || c > 126) throw ParseError("graph6: invalid character", at);
    return c - 63U;
  };

  std::size_t n = 0;
  if (pos < end && bytes[pos] == '~') {
    if (pos + 1 < end && bytes[pos + 1] == '~') {
      for (std::size_t k = 0; k < 6; ++k) n = (n << 6) | sextet(pos + 2 + k);
      pos += 8;
    } else {
      for (std::size_t k = 0; k < 3; ++k) n = (n << 6) | sextet(pos + 1 + k);
      pos += 4;
    }
  } else {
    n = sextet(pos);
    pos += 1;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (end - pos != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes for " +
                         std::to_string(n) + " vertices, found " + std::to_string(end - pos),
                     end - pos < expected ? end : pos + expected);
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++bit) {
      const unsigned chunk = sextet(pos + bit / 6);
      if ((chunk >> (5 - bit % 6)) & 1U) edges.push_back({i, j});
    }
  }
  if (bits % 6 != 0) {
    const unsigned last = sextet(pos + expected - 1);
    if (last & ((1U << (6 - bits % 6)) - 1)) {
      throw ParseError("graph6: nonzero padding bits", pos + expected - 1);
    }
  }
  return Graph(n, std::move(edges));
}

// --- edge list ---------------------------------------------------------------

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  // Next unsigned integer token; throws ParseError naming `what` otherwise.
  std::uint64_t number(const char* what) {
    skip_space();
    if (pos_ >= text_.size()) {
      throw ParseError(std::string("edge list: missing ") + what, pos_);
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      throw ParseError(std::string("edge list: invalid ") + what, start);
    }
    last_start_ = start;
    return value;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  std::size_t position() const { return pos_; }
  std::size_t last_start() const { return last_start_; }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      if (is_space(text_[pos_])) {
        ++pos_;
      } else if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t last_start_ = 0;
};

Graph parse_edge_list(std::string_view bytes) {
  Tokenizer tok(bytes);
  const auto n = tok.number("vertex count");
  const auto m = tok.number("edge count");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    const auto u = tok.number("edge endpoint");
    if (u >= n) throw ParseError("edge list: vertex out of range", tok.last_start());
    const auto v = tok.number("edge endpoint");
    if (v >= n) throw ParseError("edge list: vertex out of range", tok.last_start());
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  if (!tok.at_end()) throw ParseError("edge list: trailing data", tok.position());
  try {
    return Graph(n, std::move(edges));
  } catch (const ParameterError& e) {
    throw ParseError(std::string("edge list: ") + e.what(), 0);
  }
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

// --- json ----------------------------------------------------------------

std::string emit_json(const Graph& g) {
  json doc;
  doc["n"] = g.order();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  doc["edges"] = std::move(edges);
  if (g.bipartition()) {
    doc["bipartition"] = *g.bipartition();
  } else {
    doc["bipartition"] = nullptr;
  }
  return doc.dump();
}

Graph parse_json(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("json: ") + e.what(), e.byte);
  }
  try {
    const auto n = doc.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& pair : doc.at("edges")) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("json: edge must be a pair", 0);
      edges.push_back({pair[0].get<VertexId>(), pair[1].get<VertexId>()});
    }
    std::optional<std::vector<std::uint8_t>> side;
    if (doc.contains("bipartition") && !doc["bipartition"].is_null()) {
      side = doc["bipartition"].get<std::vector<std::uint8_t>>();
    }
    return Graph(n, std::move(edges), std::move(side));
  } catch (const json::exception& e) {
    throw ParseError(std::string("json: ") + e.what(), 0);
  } catch (const ParameterError& e) {
    throw ParseError(std::string("json: ") + e.what(), 0);
  }
}

}  // namespace

std::optional<Format> format_from_name(std::string_view name) {
  if (name == "g6" || name == "graph6") return Format::Graph6;
  if (name == "edges" || name == "edge_list" || name == "edgelist") return Format::EdgeList;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

std::string_view format_name(Format format) {
  switch (format) {
    case Format::Graph6:
      return "graph6";
    case Format::EdgeList:
      return "edge_list";
    case Format::Json:
      return "json";
  }
  return "unknown";
}

Graph parse(Format format, std::string_view bytes) {
  switch (format) {
    case Format::Graph6:
      return parse_graph6(bytes);
    case Format::EdgeList:
      return parse_edge_list(bytes);
    case Format::Json:
      return parse_json(bytes);
  }
  throw ParseError("unknown format", 0);
}

std::string emit(const Graph& g, Format format) {
  switch (format) {
    case Format::Graph6:
      return emit_graph6(g);
    case Format::EdgeList:
      return emit_edge_list(g);
    case Format::Json:
      return emit_json(g);
  }
  return {};
}

Format detect_format(std::string_view bytes) {
  std::size_t pos = 0;
  while (pos < bytes.size() && is_space(bytes[pos])) ++pos;
  if (pos < bytes.size() && bytes[pos] == '{') return Format::Json;
  // First line: two unsigned integers and nothing else.
  std::size_t eol = bytes.find('\n', pos);
  std::string_view line = bytes.substr(pos, eol == std::string_view::npos ? bytes.npos : eol - pos);
  int numbers = 0;
  std::size_t i = 0;
  while (i < line.size()) {
    if (is_space(line[i])) {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(line[i]))) return Format::Graph6;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
    ++numbers;
  }
  return numbers == 2 ? Format::EdgeList : Format::Graph6;
}

Graph parse_auto(std::string_view bytes) { return parse(detect_format(bytes), bytes); }

}  // namespace preclusion::io
