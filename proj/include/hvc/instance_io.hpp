#pragma once

#include <string>

#include "hvc/hypergraph.hpp"

namespace hvc {

/// Parses the line-oriented instance format:
///
///   c <comment>
///   p hvc <n> <m> <k>
///   e <v1> ... <vk>     (1-based vertex ids, m such lines)
///
/// Rejects missing/duplicate headers, wrong arity, out-of-range or repeated
/// vertices, duplicate edges, and an edge count that disagrees with the
/// header. Throws ParseError with the offending line number.
Hypergraph parse_instance(const std::string& text);

/// Canonical serialization: header, then edges sorted lexicographically,
/// 1-based ids. parse_instance(write_instance(h)) reproduces h exactly.
std::string write_instance(const Hypergraph& h);

Hypergraph read_instance_file(const std::string& path);
void write_instance_file(const Hypergraph& h, const std::string& path);

/// Cover files are whitespace-separated 1-based vertex ids; lines starting
/// with 'c' are comments.
Cover parse_cover(const std::string& text, int vertex_count);
std::string write_cover(const Cover& cover);
Cover read_cover_file(const std::string& path, int vertex_count);

}  // namespace hvc
