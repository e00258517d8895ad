#include "gapcover/graph.hpp"

#include <set>
#include <sstream>
#include <unordered_map>

#include "gapcover/instance.hpp"

namespace gapcover {

void check_graph(const MultipartiteGraph& g) {
  if (g.k < 1) throw ValidationError("graph: k must be >= 1");
  if (static_cast<int>(g.parts.size()) != g.k)
    throw ValidationError("graph: " + std::to_string(g.parts.size()) + " parts declared for k=" + std::to_string(g.k));
  std::unordered_map<std::string, int> part_of;
  for (int p = 0; p < g.k; ++p)
    for (const auto& v : g.parts[p])
      if (!part_of.emplace(v, p).second) throw ValidationError("graph: vertex '" + v + "' appears twice");
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& [u, v] : g.edges) {
    auto iu = part_of.find(u), iv = part_of.find(v);
    if (iu == part_of.end()) throw ValidationError("graph: unknown endpoint '" + u + "'");
    if (iv == part_of.end()) throw ValidationError("graph: unknown endpoint '" + v + "'");
    if (iu->second == iv->second)
      throw ValidationError("graph: edge {" + u + "," + v + "} joins two vertices of part " +
                            std::to_string(iu->second + 1));
    auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    if (!seen.insert(key).second) throw ValidationError("graph: duplicate edge {" + u + "," + v + "}");
  }
}

std::string serialize_graph(const MultipartiteGraph& g) {
  std::ostringstream os;
  os << g.k << " " << g.num_vertices() << " " << g.edges.size() << "\n";
  for (int p = 0; p < static_cast<int>(g.parts.size()); ++p)
    for (const auto& v : g.parts[p]) os << v << " " << p + 1 << "\n";
  for (const auto& [u, v] : g.edges) os << u << " " << v << "\n";
  return os.str();
}

MultipartiteGraph deserialize_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 1;
  if (!std::getline(in, line)) throw ParseError("graph: empty file", lineno);
  std::istringstream header(line);
  int k = 0, nv = 0, ne = 0;
  header >> k >> nv >> ne;
  if (header.fail() || k < 1 || nv < 0 || ne < 0) throw ParseError("graph: malformed header '" + line + "'", lineno);
  MultipartiteGraph g;
  g.k = k;
  g.parts.resize(k);
  for (int i = 0; i < nv; ++i) {
    ++lineno;
    if (!std::getline(in, line)) throw ParseError("graph: truncated vertex section", lineno);
    std::istringstream ls(line);
    std::string id;
    int part = 0;
    ls >> id >> part;
    if (ls.fail() || part < 1 || part > k) throw ParseError("graph: bad vertex line '" + line + "'", lineno);
    g.parts[part - 1].push_back(id);
  }
  for (int i = 0; i < ne; ++i) {
    ++lineno;
    if (!std::getline(in, line)) throw ParseError("graph: truncated edge section", lineno);
    std::istringstream ls(line);
    std::string u, v;
    ls >> u >> v;
    if (ls.fail()) throw ParseError("graph: bad edge line '" + line + "'", lineno);
    g.edges.emplace_back(u, v);
  }
  check_graph(g);
  return g;
}

MultipartiteGraph load_graph_file(const std::string& path) { return deserialize_graph(read_file(path)); }

}  // namespace gapcover
