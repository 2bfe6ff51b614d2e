#include "defcol/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <vector>

#include "defcol/error.hpp"

namespace defcol {

namespace {

constexpr std::string_view kRotationHeader = "planar-rot";
constexpr std::string_view kGraph6Header = ">>graph6<<";

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line, int column_offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + column_offset + 1});
  }
  return out;
}

int parse_id(const Token& tok, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size() || value < 0) {
    throw ParseError("expected a vertex id, found '" + std::string(tok.text) + "'", line, tok.column);
  }
  return value;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void write_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

}  // namespace

PlaneGraph parse_rotation(std::string_view text) {
  struct Entry {
    int line;
    std::vector<Token> neighbors;
  };
  std::map<int, Entry> entries;
  bool header_seen = false;
  const auto lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    const std::string_view line = strip_comment(lines[li]);
    if (is_blank(line)) continue;
    if (!header_seen) {
      const auto toks = tokenize(line, 0);
      if (toks.size() != 2 || toks[0].text != kRotationHeader) {
        throw ParseError("expected header 'planar-rot 1'", line_no, toks.front().column);
      }
      if (toks[1].text != "1") {
        throw ParseError("unsupported format version '" + std::string(toks[1].text) + "'", line_no,
                         toks[1].column);
      }
      header_seen = true;
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected 'id: neighbours...'", line_no, tokenize(line, 0).front().column);
    }
    const auto id_toks = tokenize(line.substr(0, colon), 0);
    if (id_toks.size() != 1) {
      throw ParseError("expected exactly one vertex id before ':'", line_no,
                       id_toks.empty() ? static_cast<int>(colon) + 1 : id_toks[1 % id_toks.size()].column);
    }
    const int id = parse_id(id_toks.front(), line_no);
    if (entries.contains(id)) {
      throw ParseError("vertex " + std::to_string(id) + " listed twice (first on line " +
                           std::to_string(entries.at(id).line) + ")",
                       line_no, id_toks.front().column);
    }
    entries.emplace(id, Entry{line_no, tokenize(line.substr(colon + 1), static_cast<int>(colon) + 1)});
  }
  if (!header_seen) throw ParseError("missing header 'planar-rot 1'", 1, 1);

  const int n = entries.empty() ? 0 : entries.rbegin()->first + 1;
  std::vector<PlaneGraph::Rotation> rot(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (!entries.contains(v)) {
      throw ParseError("vertex ids must be dense; " + std::to_string(v) + " has no line",
                       entries.rbegin()->second.line, 1);
    }
  }
  for (const auto& [id, entry] : entries) {
    for (const Token& tok : entry.neighbors) {
      const int u = parse_id(tok, entry.line);
      if (u >= n) {
        throw ParseError("unknown vertex " + std::to_string(u), entry.line, tok.column);
      }
      rot[id].push_back(u);
    }
  }
  return PlaneGraph::from_rotations(std::move(rot));
}

std::string write_rotation(const PlaneGraph& g) {
  if (!g.has_embedding()) throw Error(ErrorCode::NoEmbedding, "cannot write a rotation file without embedding");
  std::string out = "planar-rot 1\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out += std::to_string(v);
    out += ':';
    for (Vertex u : g.rotation(v)) {
      out += ' ';
      out += std::to_string(u);
    }
    out += '\n';
  }
  return out;
}

PlaneGraph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  std::size_t pos = 0;
  auto next = [&](const char* what) -> int {
    if (pos >= line.size()) throw ParseError(std::string("truncated graph6: missing ") + what, 1, static_cast<int>(pos) + 1);
    const int c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126) {
      throw ParseError("character outside graph6 range", 1, static_cast<int>(pos) + 1);
    }
    ++pos;
    return c - 63;
  };
  if (!line.empty() && line.front() == ':') throw ParseError("sparse6 is not supported", 1, 1);
  long long n = next("size");
  if (n == 63) {
    n = 0;
    if (pos < line.size() && line[pos] == 126) {
      ++pos;
      for (int i = 0; i < 6; ++i) n = (n << 6) | next("size");
    } else {
      for (int i = 0; i < 3; ++i) n = (n << 6) | next("size");
    }
  }
  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  if (static_cast<long long>(line.size() - pos) != bytes) {
    throw ParseError("graph6 body has " + std::to_string(line.size() - pos) + " bytes, expected " +
                         std::to_string(bytes),
                     1, static_cast<int>(pos) + 1);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  long long k = 0;
  int chunk = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (k % 6 == 0) chunk = next("adjacency");
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return PlaneGraph::from_edges(static_cast<int>(n), edges);
}

std::string write_graph6(const PlaneGraph& g) {
  const int n = g.num_vertices();
  std::string out;
  write_size(out, n);
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

PlaneGraph parse_graph(std::string_view text) {
  for (std::string_view line : split_lines(text)) {
    const std::string_view content = trim(strip_comment(line));
    if (content.empty()) continue;
    if (content.starts_with(kRotationHeader)) return parse_rotation(text);
    return parse_graph6(trim(line));
  }
  throw ParseError("empty input", 1, 1);
}

PlaneGraph read_graph_file(const std::filesystem::path& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return parse_graph(text);
}

}  // namespace defcol
