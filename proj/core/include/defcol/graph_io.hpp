#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "defcol/plane_graph.hpp"

namespace defcol {

/// Rotation format:
///
///     planar-rot 1
///     # comment
///     0: 1 2
///     1: 2 0
///     2: 0 1
///
/// One line per vertex, ids dense from 0, neighbours in cyclic order.
/// Whitespace is free-form and `#` starts a comment anywhere on a line.
PlaneGraph parse_rotation(std::string_view text);

/// Canonical writer: header, then vertices in increasing id, single spaces.
/// Throws NoEmbedding for abstract graphs.
std::string write_rotation(const PlaneGraph& g);

/// Standard graph6 (an optional ">>graph6<<" header is accepted). The
/// result is abstract: it has no embedding.
PlaneGraph parse_graph6(std::string_view line);
std::string write_graph6(const PlaneGraph& g);

/// Parses either format, detected from the first meaningful line.
PlaneGraph parse_graph(std::string_view text);

/// Reads a file, or standard input when `path` is "-".
PlaneGraph read_graph_file(const std::filesystem::path& path);

}  // namespace defcol
