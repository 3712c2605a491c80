#include "kbest/domains/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "kbest/core/errors.hpp"

namespace kbest::domains {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t j = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > j) out.push_back(line.substr(j, i - j));
  }
  return out;
}

std::int64_t to_int(std::string_view tok, std::size_t line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("expected an integer, got '" + std::string(tok) + "'", line);
  return v;
}

template <typename F>
void for_each_line(std::string_view text, F f) {
  std::size_t lineno = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    f(line, ++lineno);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

std::string comment_text(std::string_view line) {
  line.remove_prefix(1);
  return std::string(line);
}

}  // namespace

ExplicitGraph parse_dimacs_gr(std::string_view text) {
  std::optional<ExplicitGraph> graph;
  std::vector<std::pair<std::size_t, std::string>> comments;
  std::size_t records = 0;
  std::int64_t declared_arcs = 0;
  for_each_line(text, [&](std::string_view line, std::size_t lineno) {
    if (!line.empty() && line[0] == 'c') {
      comments.emplace_back(records, comment_text(line));
      return;
    }
    const auto tok = split_ws(line);
    if (tok.empty()) return;
    if (tok[0] == "p") {
      if (graph) throw ParseError("second problem line", lineno);
      if (tok.size() != 4 || tok[1] != "sp") throw ParseError("expected 'p sp <n> <m>'", lineno);
      const auto n = to_int(tok[2], lineno);
      declared_arcs = to_int(tok[3], lineno);
      if (n < 0 || declared_arcs < 0) throw ParseError("negative size in problem line", lineno);
      graph.emplace(static_cast<std::size_t>(n));
    } else if (tok[0] == "a") {
      if (!graph) throw ParseError("arc before problem line", lineno);
      if (tok.size() != 4) throw ParseError("expected 'a <u> <v> <w>'", lineno);
      const auto u = to_int(tok[1], lineno);
      const auto v = to_int(tok[2], lineno);
      const auto w = to_int(tok[3], lineno);
      const auto n = static_cast<std::int64_t>(graph->vertex_count());
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError("vertex out of range", lineno);
      if (w < 0) throw ParseError("negative arc weight", lineno);
      graph->add_edge(static_cast<std::uint32_t>(u - 1), static_cast<std::uint32_t>(v - 1), w);
    } else {
      throw ParseError("unknown record '" + std::string(tok[0]) + "'", lineno);
    }
    ++records;
  });
  if (!graph) throw ParseError("missing problem line", 0);
  graph->gr_comments = std::move(comments);
  return std::move(*graph);
}

void parse_dimacs_co(std::string_view text, ExplicitGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<Coord> coords(n);
  std::vector<bool> seen(n, false);
  std::vector<std::pair<std::size_t, std::string>> comments;
  std::size_t records = 0;
  bool any = false;
  for_each_line(text, [&](std::string_view line, std::size_t lineno) {
    if (!line.empty() && line[0] == 'c') {
      comments.emplace_back(records, comment_text(line));
      return;
    }
    const auto tok = split_ws(line);
    if (tok.empty()) return;
    if (tok[0] == "p") {
      if (tok.size() != 5 || tok[1] != "aux" || tok[2] != "sp" || tok[3] != "co")
        throw ParseError("expected 'p aux sp co <n>'", lineno);
      if (to_int(tok[4], lineno) != static_cast<std::int64_t>(n))
        throw ParseError("coordinate count does not match the graph's " + std::to_string(n) +
                             " vertices",
                         lineno);
    } else if (tok[0] == "v") {
      if (tok.size() != 4) throw ParseError("expected 'v <id> <lon> <lat>'", lineno);
      const auto id = to_int(tok[1], lineno);
      if (id < 1 || id > static_cast<std::int64_t>(n)) throw ParseError("vertex out of range", lineno);
      const auto i = static_cast<std::size_t>(id - 1);
      if (seen[i]) throw ParseError("vertex " + std::to_string(id) + " listed twice", lineno);
      seen[i] = true;
      coords[i] = Coord{to_int(tok[3], lineno), to_int(tok[2], lineno)};
      any = true;
    } else {
      throw ParseError("unknown record '" + std::string(tok[0]) + "'", lineno);
    }
    ++records;
  });
  if (!any) {
    graph.set_coords({});
    graph.co_comments.clear();
    return;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!seen[i]) throw ParseError("missing coordinates for vertex " + std::to_string(i + 1), 0);
  graph.set_coords(std::move(coords));
  graph.co_comments = std::move(comments);
}

namespace {

void flush_comments(std::ostringstream& os, const std::vector<std::pair<std::size_t, std::string>>& c,
                    std::size_t& next, std::size_t record) {
  while (next < c.size() && c[next].first <= record) os << 'c' << c[next++].second << '\n';
}

}  // namespace

std::string emit_dimacs_gr(const ExplicitGraph& graph) {
  std::ostringstream os;
  std::size_t next = 0;
  std::size_t record = 0;
  flush_comments(os, graph.gr_comments, next, record);
  os << "p sp " << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  for (const EdgeRef& e : graph.arcs()) {
    flush_comments(os, graph.gr_comments, next, ++record);
    os << "a " << e.source.value() + 1 << ' ' << e.target.value() + 1 << ' ' << e.weight << '\n';
  }
  flush_comments(os, graph.gr_comments, next, static_cast<std::size_t>(-1));
  return os.str();
}

std::string emit_dimacs_co(const ExplicitGraph& graph) {
  std::ostringstream os;
  if (!graph.has_coords()) return os.str();
  std::size_t next = 0;
  std::size_t record = 0;
  flush_comments(os, graph.co_comments, next, record);
  os << "p aux sp co " << graph.vertex_count() << '\n';
  const auto& c = graph.coords();
  for (std::size_t i = 0; i < c.size(); ++i) {
    flush_comments(os, graph.co_comments, next, ++record);
    os << "v " << i + 1 << ' ' << c[i].lon << ' ' << c[i].lat << '\n';
  }
  flush_comments(os, graph.co_comments, next, static_cast<std::size_t>(-1));
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace kbest::domains
