#include "socolor/io.hpp"

#include <charconv>
#include <limits>
#include <optional>
#include <fstream>
#include <sstream>

#include "socolor/error.hpp"

namespace soc {

namespace {

// Splits `text` into lines and each line into whitespace-separated tokens,
// calling fn(line_number, tokens) for every non-blank line.
template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::vector<std::string_view> tokens;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    tokens.clear();
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      const auto start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    if (!tokens.empty()) fn(line_no, tokens);
  }
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
  }
  return v;
}

Vertex parse_vertex(std::string_view tok, std::size_t line, std::size_t n) {
  const auto v = parse_uint(tok, line, "vertex");
  if (v < 1 || v > n) {
    throw ParseError(line, "vertex " + std::string(tok) + " out of range 1.." + std::to_string(n));
  }
  return static_cast<Vertex>(v - 1);
}

std::string join_rest(const std::vector<std::string_view>& tokens, std::size_t from) {
  std::string s;
  for (std::size_t i = from; i < tokens.size(); ++i) {
    if (i > from) s += ' ';
    s += tokens[i];
  }
  return s;
}

}  // namespace

std::string to_dimacs(const Graph& g, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "c " << comment << '\n';
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Graph from_dimacs(std::string_view text) {
  std::optional<Graph> g;
  std::size_t declared_edges = 0;
  std::size_t last_line = 0;
  std::vector<std::pair<Vertex, std::string>> labels;

  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& t) {
    last_line = line;
    if (t[0] == "c") return;
    if (t[0] == "p") {
      if (g) throw ParseError(line, "duplicate problem line");
      if (t.size() != 4 || t[1] != "edge") {
        throw ParseError(line, "expected 'p edge <V> <E>'");
      }
      g.emplace(parse_uint(t[2], line, "vertex count"));
      declared_edges = parse_uint(t[3], line, "edge count");
      return;
    }
    if (!g) throw ParseError(line, "missing 'p edge' header before data");
    if (t[0] == "e") {
      if (t.size() != 3) throw ParseError(line, "expected 'e <u> <v>'");
      const auto u = parse_vertex(t[1], line, g->num_vertices());
      const auto v = parse_vertex(t[2], line, g->num_vertices());
      if (u == v) throw ParseError(line, "self-loop at vertex " + std::string(t[1]));
      if (g->has_edge(u, v)) {
        throw ParseError(line, "duplicate edge " + std::string(t[1]) + " " + std::string(t[2]));
      }
      g->add_edge(u, v);
      return;
    }
    if (t[0] == "l") {
      if (t.size() < 3) throw ParseError(line, "expected 'l <vertex> <role>'");
      labels.emplace_back(parse_vertex(t[1], line, g->num_vertices()), join_rest(t, 2));
      return;
    }
    throw ParseError(line, "unknown line type '" + std::string(t[0]) + "'");
  });

  if (!g) throw ParseError(last_line, "missing 'p edge' header");
  if (g->num_edges() != declared_edges) {
    throw ParseError(last_line, "header declares " + std::to_string(declared_edges) +
                                    " edges, found " + std::to_string(g->num_edges()));
  }
  for (auto& [v, role] : labels) g->set_label(v, std::move(role));
  return std::move(*g);
}

std::string to_labels(const Graph& g) {
  std::ostringstream out;
  for (const auto& [v, role] : g.labels()) out << "l " << v + 1 << ' ' << role << '\n';
  return out.str();
}

void apply_labels(Graph& g, std::string_view text) {
  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& t) {
    if (t[0] == "c") return;
    if (t[0] != "l" || t.size() < 3) throw ParseError(line, "expected 'l <vertex> <role>'");
    g.set_label(parse_vertex(t[1], line, g.num_vertices()), join_rest(t, 2));
  });
}

std::string to_coloring_text(const Coloring& c) {
  std::ostringstream out;
  for (std::size_t v = 0; v < c.size(); ++v) {
    out << v + 1 << ' ' << c[static_cast<Vertex>(v)] << '\n';
  }
  return out.str();
}

Coloring from_coloring_text(std::string_view text, std::size_t num_vertices) {
  std::vector<Color> colors(num_vertices, 0);
  std::size_t last_line = 0;
  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& t) {
    last_line = line;
    if (t[0].front() == '#') return;
    if (t.size() < 2 || (t.size() > 2 && t[2].front() != '#')) {
      throw ParseError(line, "expected '<vertex> <color>'");
    }
    const auto v = parse_vertex(t[0], line, num_vertices);
    const auto col = parse_uint(t[1], line, "color");
    if (col == 0 || col > std::numeric_limits<Color>::max()) {
      throw ParseError(line, "color must be a positive 32-bit integer");
    }
    if (colors[v] != 0) throw ParseError(line, "vertex " + std::string(t[0]) + " colored twice");
    colors[v] = static_cast<Color>(col);
  });
  for (std::size_t v = 0; v < num_vertices; ++v) {
    if (colors[v] == 0) {
      throw ParseError(last_line, "vertex " + std::to_string(v + 1) + " has no color");
    }
  }
  return Coloring(std::move(colors));
}

std::string to_rotation_text(const RotationSystem& rot) {
  std::ostringstream out;
  out << "p rotation " << rot.num_vertices() << '\n';
  for (Vertex v = 0; v < rot.num_vertices(); ++v) {
    out << "r " << v + 1;
    for (Vertex w : rot.around(v)) out << ' ' << w + 1;
    out << '\n';
  }
  return out.str();
}

RotationSystem from_rotation_text(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<std::vector<Vertex>> rot;
  std::vector<bool> seen;
  std::size_t last_line = 0;
  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& t) {
    last_line = line;
    if (t[0] == "c") return;
    if (t[0] == "p") {
      if (n) throw ParseError(line, "duplicate problem line");
      if (t.size() != 3 || t[1] != "rotation") throw ParseError(line, "expected 'p rotation <V>'");
      n = parse_uint(t[2], line, "vertex count");
      rot.assign(*n, {});
      seen.assign(*n, false);
      return;
    }
    if (!n) throw ParseError(line, "missing 'p rotation' header before data");
    if (t[0] != "r" || t.size() < 2) throw ParseError(line, "expected 'r <v> <neighbors...>'");
    const auto v = parse_vertex(t[1], line, *n);
    if (seen[v]) throw ParseError(line, "rotation for vertex " + std::string(t[1]) + " repeated");
    seen[v] = true;
    for (std::size_t i = 2; i < t.size(); ++i) rot[v].push_back(parse_vertex(t[i], line, *n));
  });
  if (!n) throw ParseError(last_line, "missing 'p rotation' header");
  for (std::size_t v = 0; v < *n; ++v) {
    if (!seen[v]) throw ParseError(last_line, "no rotation for vertex " + std::to_string(v + 1));
  }
  return RotationSystem(std::move(rot));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace soc
