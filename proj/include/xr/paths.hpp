#pragma once

#include <compare>
#include <map>
#include <vector>

#include "xr/graph.hpp"

namespace xr {

// Virtual edges carry a copy index so parallel edges (one per shuffler
// matching, say) can map to distinct host paths.
struct VirtualEdge {
  Vertex u = 0, v = 0;
  int copy = 0;
  auto operator<=>(const VirtualEdge&) const = default;
};

inline VirtualEdge vedge(Vertex a, Vertex b, int copy = 0) {
  return a < b ? VirtualEdge{a, b, copy} : VirtualEdge{b, a, copy};
}

using Path = std::vector<Vertex>;  // vertex sequence in a host graph

struct PathQuality {
  long long congestion = 0;
  long long dilation = 0;
  long long quality() const { return congestion + dilation; }
};

// Paths in a host graph. Quality is always recomputed from the paths.
class PathSet {
 public:
  PathSet() = default;
  explicit PathSet(std::vector<Path> paths) : paths_(std::move(paths)) {}

  void add(Path p) { paths_.push_back(std::move(p)); }
  const std::vector<Path>& paths() const { return paths_; }
  bool empty() const { return paths_.empty(); }
  size_t size() const { return paths_.size(); }

  // throws DomainError when a consecutive pair is not a host edge
  void validate_in(const Graph& host) const;

  // congestion counts paths per unordered pair, divided (ceil) by the pair's
  // host multiplicity: the load of the busiest parallel channel
  PathQuality quality(const Graph& host) const;

 private:
  std::vector<Path> paths_;
};

// Map from virtual edges to host paths. The host is held by value; operations
// are read-only over shared inputs.
class Embedding {
 public:
  Embedding() = default;
  explicit Embedding(Graph host) : host_(std::move(host)) {}

  const Graph& host() const { return host_; }

  void map_edge(VirtualEdge e, Path p);
  const Path& path_of(const VirtualEdge& e) const;
  // path oriented from a to b (stored direction or its reverse)
  Path oriented_path(Vertex a, Vertex b, int copy = 0) const;
  bool has_edge(const VirtualEdge& e) const { return path_of_.count(e) > 0; }

  const std::map<VirtualEdge, Path>& edges() const { return path_of_; }
  std::vector<VirtualEdge> virtual_edges() const;

  Graph virtual_graph() const;
  PathSet image() const;
  PathQuality quality() const { return image().quality(host_); }

  void validate() const;

 private:
  Graph host_;
  std::map<VirtualEdge, Path> path_of_;
};

// Identity embedding of the given edge set into host (f(e) = e).
Embedding identity_embedding(const Graph& host);

// inner's host graph must equal outer's virtual graph; each inner step maps
// through outer with round-robin copy selection on parallel virtual edges.
Embedding compose_embeddings(const Embedding& outer, const Embedding& inner);

// Disjoint virtual edge sets over a common host.
Embedding union_embeddings(const Embedding& f, const Embedding& g);

}  // namespace xr
