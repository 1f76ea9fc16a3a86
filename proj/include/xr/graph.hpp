#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace xr {

using Vertex = int;

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Undirected multigraph over stable positive vertex identifiers.
// Physical input graphs are simple (multiplicity 1, no self-loops); derived
// graphs (cluster graphs, split graphs, virtual expanders) may carry parallel
// edges stored as multiplicity counts. Self-loops are always rejected.
class Graph {
 public:
  Graph() = default;

  void add_vertex(Vertex v);
  void add_edge(Vertex u, Vertex v, int multiplicity = 1);
  bool has_vertex(Vertex v) const { return adj_.count(v) > 0; }
  bool has_edge(Vertex u, Vertex v) const { return multiplicity(u, v) > 0; }
  int multiplicity(Vertex u, Vertex v) const;

  // degree counts parallel edges
  int degree(Vertex v) const;
  long long volume(const std::vector<Vertex>& s) const;

  std::vector<Vertex> vertices() const;  // ascending ids
  int vertex_count() const { return static_cast<int>(adj_.size()); }
  long long edge_count() const { return edge_count_; }

  // neighbors with multiplicities, ascending by id
  const std::map<Vertex, int>& neighbors(Vertex v) const;

  // unique unordered pairs (u < v) with multiplicity
  std::vector<std::tuple<Vertex, Vertex, int>> edge_pairs() const;

  bool connected() const;
  // -1 for unreachable
  std::map<Vertex, int> bfs_dist(Vertex src) const;
  std::vector<Vertex> bfs_path(Vertex src, Vertex dst) const;
  int diameter() const;

  Graph induced(const std::vector<Vertex>& s) const;

  bool operator==(const Graph& o) const {
    return adj_ == o.adj_ && edge_count_ == o.edge_count_;
  }

 private:
  std::map<Vertex, std::map<Vertex, int>> adj_;
  long long edge_count_ = 0;
};

// File format: line 1 "n m", then m lines "u v" with 1-based original ids.
// Writers are byte-deterministic (ascending edge order).
Graph read_graph(std::istream& in);
void write_graph(const Graph& g, std::ostream& out);

// Optional sidecar remap, one "orig new" pair per line.
std::map<Vertex, Vertex> read_remap(std::istream& in);
void write_remap(const std::map<Vertex, Vertex>& remap, std::ostream& out);
Graph apply_remap(const Graph& g, const std::map<Vertex, Vertex>& remap);

}  // namespace xr
