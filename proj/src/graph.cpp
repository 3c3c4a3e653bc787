#include "degpart/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "degpart/error.hpp"

namespace degpart {

bool Graph::is_regular() const {
  for (Vertex v = 0; v < n(); ++v) {
    if (degree(v) != max_degree_) return false;
  }
  return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m()));
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph build_graph(Vertex n, std::span<const Edge> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  const auto count = static_cast<std::size_t>(n);
  std::vector<std::int64_t> offsets(count + 1, 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n) throw VertexRangeError(e.u, n);
    if (e.v < 0 || e.v >= n) throw VertexRangeError(e.v, n);
    if (e.u == e.v) throw SelfLoopError(e.u);
    ++offsets[e.u + 1];
    ++offsets[e.v + 1];
  }
  for (std::size_t i = 0; i < count; ++i) offsets[i + 1] += offsets[i];

  // Scatter in input order, then transpose: visiting u ascending and
  // appending u to each neighbor's slice leaves every slice sorted.
  std::vector<Vertex> scattered(static_cast<std::size_t>(offsets[count]));
  std::vector<std::int64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) {
    scattered[cursor[e.u]++] = e.v;
    scattered[cursor[e.v]++] = e.u;
  }
  std::vector<Vertex> sorted(scattered.size());
  std::copy(offsets.begin(), offsets.end() - 1, cursor.begin());
  for (Vertex u = 0; u < n; ++u) {
    for (std::int64_t i = offsets[u]; i < offsets[u + 1]; ++i) {
      sorted[cursor[scattered[i]]++] = u;
    }
  }

  Graph g;
  std::int32_t max_degree = 0;
  for (Vertex v = 0; v < n; ++v) {
    for (std::int64_t i = offsets[v] + 1; i < offsets[v + 1]; ++i) {
      if (sorted[i] == sorted[i - 1]) throw DuplicateEdgeError(std::min(v, sorted[i]), std::max(v, sorted[i]));
    }
    max_degree = std::max(max_degree, static_cast<std::int32_t>(offsets[v + 1] - offsets[v]));
  }
  g.offsets_ = std::move(offsets);
  g.adjacency_ = std::move(sorted);
  g.max_degree_ = max_degree;
  return g;
}

namespace {

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

bool is_comment(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first != std::string_view::npos && line[first] == '#';
}

// Exactly two non-negative integers separated by whitespace.
bool parse_pair(std::string_view line, std::int64_t& a, std::int64_t& b) {
  std::int64_t values[2];
  std::size_t pos = 0;
  for (auto& value : values) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos == line.size()) return false;
    const char* begin = line.data() + pos;
    const char* end = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin || value < 0) return false;
    pos = static_cast<std::size_t>(ptr - line.data());
    if (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') return false;
  }
  a = values[0];
  b = values[1];
  return is_blank(line.substr(pos));
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::vector<Edge> edges;

  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (is_blank(line) || is_comment(line)) continue;

    std::int64_t a = 0;
    std::int64_t b = 0;
    if (!parse_pair(line, a, b)) {
      throw ParseError(line_no, have_header ? "expected \"u v\"" : "expected header \"n m\"");
    }
    if (!have_header) {
      n = a;
      m = b;
      if (n > INT32_MAX) throw ParseError(line_no, "vertex count too large");
      if (m > n * (n - 1) / 2) throw ParseError(line_no, "more edges than a simple graph allows");
      have_header = true;
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (static_cast<std::int64_t>(edges.size()) == m) throw ParseError(line_no, "more edge lines than declared");
    if (a >= n || b >= n) throw VertexRangeError(a >= n ? a : b, n);
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return build_graph(static_cast<Vertex>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

VertexSubset VertexSubset::of(Vertex universe, std::span<const Vertex> members) {
  VertexSubset s(universe);
  for (Vertex v : members) {
    if (v < 0 || v >= universe) throw std::invalid_argument("subset member out of range");
    if (!s.insert(v)) throw std::invalid_argument("repeated subset member");
  }
  return s;
}

VertexSubset VertexSubset::all(Vertex universe) {
  VertexSubset s(universe);
  s.members_.resize(static_cast<std::size_t>(universe));
  for (Vertex v = 0; v < universe; ++v) s.members_[v] = v;
  std::fill(s.member_.begin(), s.member_.end(), 1);
  return s;
}

bool VertexSubset::insert(Vertex v) {
  if (member_[v]) return false;
  member_[v] = 1;
  members_.push_back(v);
  return true;
}

ComponentReport analyze(const Graph& g) {
  const Vertex n = g.n();
  ComponentReport report;
  report.component_of.assign(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(n));
  std::int32_t count = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (report.component_of[root] != -1) continue;
    report.component_of[root] = count;
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (report.component_of[w] == -1) {
          report.component_of[w] = count;
          queue.push_back(w);
        }
      }
    }
    ++count;
  }

  report.components.resize(static_cast<std::size_t>(count));
  for (Vertex v = 0; v < n; ++v) {
    auto& c = report.components[report.component_of[v]];
    c.vertices.push_back(v);
    c.edges += g.degree(v);
    c.max_degree = std::max(c.max_degree, g.degree(v));
  }
  for (auto& c : report.components) {
    c.edges /= 2;
    c.is_regular = std::all_of(c.vertices.begin(), c.vertices.end(),
                               [&](Vertex v) { return g.degree(v) == c.max_degree; });
    const auto size = static_cast<std::int64_t>(c.vertices.size());
    c.is_complete = c.edges == size * (size - 1) / 2;
  }
  return report;
}

bool is_connected(const Graph& g) {
  return g.n() <= 1 || analyze(g).components.size() == 1;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& s) {
  InducedSubgraph out;
  out.to_local.assign(static_cast<std::size_t>(g.n()), kNoVertex);
  out.to_original.assign(s.members().begin(), s.members().end());
  for (std::size_t i = 0; i < out.to_original.size(); ++i) {
    out.to_local[out.to_original[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex u : s.members()) {
    for (Vertex w : g.neighbors(u)) {
      if (u < w && s.contains(w)) edges.push_back({out.to_local[u], out.to_local[w]});
    }
  }
  out.graph = build_graph(static_cast<Vertex>(s.size()), edges);
  return out;
}

}  // namespace degpart
