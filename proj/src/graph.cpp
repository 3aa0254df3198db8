#include "theta/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <istream>
#include <sstream>

namespace theta {

ParseError::ParseError(int line, const std::string& what)
    : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges) : edges_(std::move(edges)) {
  if (vertex_count < 0) throw GraphError("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[static_cast<std::size_t>(e)];
    if (!valid_vertex(ed.u) || !valid_vertex(ed.v)) {
      throw GraphError("edge " + std::to_string(e) + " has an endpoint outside 0.." +
                       std::to_string(vertex_count - 1));
    }
    if (ed.u == ed.v) throw GraphError("edge " + std::to_string(e) + " is a loop");
    adjacency_[static_cast<std::size_t>(ed.u)].push_back({ed.v, e});
    adjacency_[static_cast<std::size_t>(ed.v)].push_back({ed.u, e});
  }
}

std::span<const Incidence> Multigraph::incident(VertexId v) const {
  if (!valid_vertex(v)) throw GraphError("invalid vertex id " + std::to_string(v));
  return adjacency_[static_cast<std::size_t>(v)];
}

std::vector<VertexId> Multigraph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (const auto& inc : incident(v)) out.push_back(inc.neighbor);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int Multigraph::degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

int Multigraph::incident_edge_count(VertexId v) const {
  return static_cast<int>(incident(v).size());
}

VertexId Multigraph::other_end(EdgeId e, VertexId v) const {
  const Edge& ed = edge(e);
  if (ed.u == v) return ed.v;
  if (ed.v == v) return ed.u;
  throw GraphError("vertex " + std::to_string(v) + " is not an endpoint of edge " +
                   std::to_string(e));
}

int Multigraph::min_degree() const {
  if (vertex_count() == 0) return 0;
  int best = degree(0);
  for (VertexId v = 1; v < vertex_count(); ++v) best = std::min(best, degree(v));
  return best;
}

bool operator==(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (EdgeId e = 0; e < a.edge_count(); ++e) {
    if (a.edges_[e].u != b.edges_[e].u || a.edges_[e].v != b.edges_[e].v) return false;
  }
  return true;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\v\f";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view tok, long long& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

Multigraph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto tokens = split_ws(body);
    if (n < 0) {
      if (tokens.size() != 1 || !parse_int(tokens[0], n) || n < 0 || n > (1LL << 30)) {
        throw ParseError(line_no, "expected a vertex count, got '" + std::string(body) + "'");
      }
      continue;
    }
    long long u = 0;
    long long v = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v)) {
      throw ParseError(line_no, "expected 'u v', got '" + std::string(body) + "'");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError(line_no, "vertex id out of range 0.." + std::to_string(n - 1));
    }
    if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u) + " rejected");
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  if (n < 0) throw ParseError(line_no, "missing vertex count");
  return Multigraph(static_cast<int>(n), std::move(edges));
}

Multigraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

std::string to_edge_list(const Multigraph& g) {
  std::string out = std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

VertexMask mask_of(int vertex_count, std::span<const VertexId> vertices) {
  VertexMask mask(static_cast<std::size_t>(vertex_count), 0);
  for (VertexId v : vertices) {
    if (v < 0 || v >= vertex_count) throw GraphError("invalid vertex id " + std::to_string(v));
    mask[static_cast<std::size_t>(v)] = 1;
  }
  return mask;
}

namespace {
bool in_mask(const VertexMask& mask, VertexId v) {
  return mask.empty() || mask[static_cast<std::size_t>(v)] != 0;
}
}  // namespace

std::vector<int> bfs_distances(const Multigraph& g, std::span<const VertexId> sources,
                               const VertexMask& mask) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::deque<VertexId> queue;
  for (VertexId s : sources) {
    if (!g.valid_vertex(s)) throw GraphError("invalid vertex id " + std::to_string(s));
    if (!in_mask(mask, s) || dist[s] == 0) continue;
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(x)) {
      if (dist[inc.neighbor] >= 0 || !in_mask(mask, inc.neighbor)) continue;
      dist[inc.neighbor] = dist[x] + 1;
      queue.push_back(inc.neighbor);
    }
  }
  return dist;
}

bool is_connected(const Multigraph& g, const VertexMask& mask) {
  VertexId start = kNone;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in_mask(mask, v)) {
      start = v;
      break;
    }
  }
  if (start == kNone) return true;
  const VertexId src[] = {start};
  const auto dist = bfs_distances(g, src, mask);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in_mask(mask, v) && dist[v] < 0) return false;
  }
  return true;
}

bool induces_connected(const Multigraph& g, std::span<const VertexId> vertices) {
  if (vertices.empty()) return true;
  return is_connected(g, mask_of(g.vertex_count(), vertices));
}

int eccentricity(const Multigraph& g, VertexId v, const VertexMask& mask) {
  const VertexId src[] = {v};
  const auto dist = bfs_distances(g, src, mask);
  int ecc = 0;
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    if (!in_mask(mask, x)) continue;
    if (dist[x] < 0) throw GraphError("graph is disconnected");
    ecc = std::max(ecc, dist[x]);
  }
  return ecc;
}

std::vector<int> partition_index(const Multigraph& g, std::span<const std::vector<VertexId>> parts) {
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), kNone);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) throw GraphError("part " + std::to_string(p) + " is empty");
    for (VertexId v : parts[p]) {
      if (!g.valid_vertex(v)) throw GraphError("part " + std::to_string(p) + " has invalid vertex " + std::to_string(v));
      if (index[v] != kNone) throw GraphError("vertex " + std::to_string(v) + " lies in two parts");
      index[v] = static_cast<int>(p);
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (index[v] == kNone) throw GraphError("vertex " + std::to_string(v) + " is in no part");
  }
  return index;
}

Multigraph contract_partition(const Multigraph& g, std::span<const std::vector<VertexId>> parts) {
  const auto index = partition_index(g, parts);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (!induces_connected(g, parts[p])) {
      throw GraphError("part " + std::to_string(p) + " does not induce a connected subgraph");
    }
  }
  std::vector<Edge> quotient;
  for (const Edge& e : g.edges()) {
    const int a = index[e.u];
    const int b = index[e.v];
    if (a != b) quotient.push_back({a, b});
  }
  return Multigraph(static_cast<int>(parts.size()), std::move(quotient));
}

}  // namespace theta
