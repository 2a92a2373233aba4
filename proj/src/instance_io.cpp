#include "hvc/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "hvc/errors.hpp"

namespace hvc {

namespace {

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

Hypergraph parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool got_header = false;
  long long n = 0, m = 0, k = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line) || line[0] == 'c') continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "p") {
      if (got_header) throw ParseError("duplicate header", line_no);
      std::string format;
      fields >> format >> n >> m >> k;
      if (!fields || format != "hvc")
        throw ParseError("expected header 'p hvc <n> <m> <k>'", line_no);
      if (n < 0 || m < 0 || k < 1 || k > n)
        throw ParseError("header values out of range (need n >= k >= 1, m >= 0)", line_no);
      got_header = true;
    } else if (tag == "e") {
      if (!got_header) throw ParseError("edge before header", line_no);
      Edge e;
      long long v;
      while (fields >> v) {
        if (v < 1 || v > n)
          throw ParseError("vertex " + std::to_string(v) + " outside [1, " +
                           std::to_string(n) + "]", line_no);
        e.push_back(static_cast<int>(v - 1));
      }
      if (!fields.eof()) throw ParseError("malformed edge line", line_no);
      if (static_cast<long long>(e.size()) != k)
        throw ParseError("edge has " + std::to_string(e.size()) + " vertices, expected " +
                         std::to_string(k), line_no);
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end())
        throw ParseError("edge repeats a vertex", line_no);
      edges.push_back(std::move(e));
    } else {
      throw ParseError("unknown line type '" + tag + "'", line_no);
    }
  }
  if (!got_header) throw ParseError("missing header", line_no == 0 ? 1 : line_no);
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("header declares m=" + std::to_string(m) + " but found " +
                     std::to_string(edges.size()) + " edges", line_no == 0 ? 1 : line_no);
  {
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError("duplicate edge", line_no);
  }
  return Hypergraph(static_cast<int>(n), static_cast<int>(k), std::move(edges));
}

std::string write_instance(const Hypergraph& h) {
  std::ostringstream out;
  out << "p hvc " << h.vertex_count() << ' ' << h.edge_count() << ' ' << h.edge_size()
      << '\n';
  for (const Edge& e : h.edges()) {
    out << 'e';
    for (int v : e) out << ' ' << v + 1;
    out << '\n';
  }
  return out.str();
}

Hypergraph read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open instance file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

void write_instance_file(const Hypergraph& h, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write instance file: " + path);
  out << write_instance(h);
}

Cover parse_cover(const std::string& text, int vertex_count) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::vector<int> vertices;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line) || line[0] == 'c') continue;
    std::istringstream fields(line);
    long long v;
    while (fields >> v) {
      if (v < 1 || v > vertex_count)
        throw ParseError("cover vertex " + std::to_string(v) + " outside [1, " +
                         std::to_string(vertex_count) + "]", line_no);
      vertices.push_back(static_cast<int>(v - 1));
    }
    if (!fields.eof()) throw ParseError("malformed cover line", line_no);
  }
  return Cover{canonical_vertex_set(vertices, vertex_count)};
}

std::string write_cover(const Cover& cover) {
  std::ostringstream out;
  for (size_t i = 0; i < cover.vertices.size(); ++i) {
    if (i) out << ' ';
    out << cover.vertices[i] + 1;
  }
  out << '\n';
  return out.str();
}

Cover read_cover_file(const std::string& path, int vertex_count) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open cover file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_cover(buffer.str(), vertex_count);
}

}  // namespace hvc
