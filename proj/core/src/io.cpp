#include "chromadist/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <string>

#include "chromadist/error.hpp"

namespace chromadist {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank, non-comment line split into tokens; nullopt at EOF.
  std::optional<std::vector<std::string_view>> next() {
    while (std::getline(in_, line_)) {
      ++number_;
      if (!line_.empty() && line_.back() == '\r') line_.pop_back();
      tokens_.clear();
      std::size_t i = 0;
      while (i < line_.size()) {
        while (i < line_.size() && (line_[i] == ' ' || line_[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line_.size() && line_[j] != ' ' && line_[j] != '\t') ++j;
        if (j > i) tokens_.emplace_back(line_.data() + i, j - i);
        i = j;
      }
      if (tokens_.empty() || tokens_.front().front() == '#') continue;
      return tokens_;
    }
    return std::nullopt;
  }

  std::size_t line() const { return number_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Parse, "line " + std::to_string(number_) + ": " + what);
  }

  std::uint64_t number(std::string_view token) const {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      fail("expected a non-negative integer, got '" + std::string(token) + "'");
    }
    return value;
  }

 private:
  std::istream& in_;
  std::string line_;
  std::vector<std::string_view> tokens_;
  std::size_t number_ = 0;
};

std::optional<Graph> read_block(LineReader& reader) {
  auto header = reader.next();
  if (!header) return std::nullopt;
  if (header->size() != 2) reader.fail("expected header 'n m'");
  const std::uint64_t n = reader.number((*header)[0]);
  const std::uint64_t m = reader.number((*header)[1]);
  if (n > UINT32_MAX - 1) reader.fail("vertex count too large");
  if (m == 0) reader.fail("graph has no edges");
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(m);
  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::uint64_t i = 0; i < m; ++i) {
    auto row = reader.next();
    if (!row) reader.fail("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    if (row->size() != 2) reader.fail("expected edge line 'u v'");
    const std::uint64_t u = reader.number((*row)[0]);
    const std::uint64_t v = reader.number((*row)[1]);
    if (u >= n || v >= n) reader.fail("vertex id out of range for n = " + std::to_string(n));
    if (u == v) reader.fail("self-loop at vertex " + std::to_string(u));
    if (u > v) reader.fail("edge endpoints must be ascending (u < v)");
    if (!seen.emplace(u, v).second) reader.fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return Graph(n, edges);
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path.string());
  return in;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  LineReader reader(in);
  auto g = read_block(reader);
  if (!g) throw Error(ErrorCode::Parse, "empty input: expected header 'n m'");
  if (reader.next()) reader.fail("unexpected content after the last edge");
  return std::move(*g);
}

Graph read_edge_list(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << std::min(e.u, e.v) << ' ' << std::max(e.u, e.v) << '\n';
}

std::vector<Graph> read_graph_stream(std::istream& in) {
  LineReader reader(in);
  std::vector<Graph> out;
  while (auto g = read_block(reader)) out.push_back(std::move(*g));
  return out;
}

std::vector<Graph> read_graph_stream(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_graph_stream(in);
}

EdgeColouring read_colouring(std::istream& in, const Graph& g) {
  LineReader reader(in);
  std::vector<Colour> colours(g.edge_count(), kNoColour);
  while (auto row = reader.next()) {
    if (row->size() != 2) reader.fail("expected 'edge-id colour'");
    const std::uint64_t e = reader.number((*row)[0]);
    const std::uint64_t c = reader.number((*row)[1]);
    if (e >= g.edge_count()) reader.fail("edge id " + std::to_string(e) + " out of range");
    if (c == 0 || c > UINT32_MAX) reader.fail("colour must be a positive 32-bit integer");
    if (colours[e] != kNoColour) reader.fail("edge " + std::to_string(e) + " coloured twice");
    colours[e] = static_cast<Colour>(c);
  }
  for (EdgeId e = 0; e < colours.size(); ++e) {
    if (colours[e] == kNoColour) {
      throw Error(ErrorCode::Parse, "edge " + std::to_string(e) + " has no colour");
    }
  }
  return EdgeColouring(std::move(colours));
}

EdgeColouring read_colouring(const std::filesystem::path& path, const Graph& g) {
  auto in = open_input(path);
  return read_colouring(in, g);
}

void write_colouring(std::ostream& out, const EdgeColouring& c) {
  for (EdgeId e = 0; e < c.edge_count(); ++e) out << e << ' ' << c[e] << '\n';
}

}  // namespace chromadist
