#pragma once

#include <string>
#include <vector>

#include "gapcover/common.hpp"

namespace gapcover {

// Vertex set partitioned into k independent parts, edges only between
// different parts. Vertices are opaque ids; the global order (concatenation
// of the parts) fixes the binary encoding used by the clique reduction.
struct MultipartiteGraph {
  int k = 0;
  std::vector<std::vector<std::string>> parts;
  std::vector<std::pair<std::string, std::string>> edges;

  bool operator==(const MultipartiteGraph&) const = default;

  int num_vertices() const {
    int n = 0;
    for (const auto& p : parts) n += static_cast<int>(p.size());
    return n;
  }
};

// Throws ValidationError if parts overlap, an edge endpoint is unknown, an
// edge joins two vertices of the same part, or an edge repeats.
void check_graph(const MultipartiteGraph& g);

// Text format:
//   <k> <num_vertices> <num_edges>
//   <vertex_id> <part>      (num_vertices lines, part in 1..k)
//   <u> <v>                 (num_edges lines)
std::string serialize_graph(const MultipartiteGraph& g);
MultipartiteGraph deserialize_graph(const std::string& text);

MultipartiteGraph load_graph_file(const std::string& path);

}  // namespace gapcover
