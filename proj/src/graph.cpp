#include "xr/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

namespace xr {

void Graph::add_vertex(Vertex v) {
  if (v <= 0) throw DomainError("vertex ids must be positive");
  adj_.try_emplace(v);
}

void Graph::add_edge(Vertex u, Vertex v, int multiplicity) {
  if (u == v) throw DomainError("self-loops are not allowed");
  if (multiplicity <= 0) throw DomainError("edge multiplicity must be positive");
  add_vertex(u);
  add_vertex(v);
  adj_[u][v] += multiplicity;
  adj_[v][u] += multiplicity;
  edge_count_ += multiplicity;
}

int Graph::multiplicity(Vertex u, Vertex v) const {
  auto it = adj_.find(u);
  if (it == adj_.end()) return 0;
  auto jt = it->second.find(v);
  return jt == it->second.end() ? 0 : jt->second;
}

int Graph::degree(Vertex v) const {
  const auto& nb = neighbors(v);
  int d = 0;
  for (const auto& [u, m] : nb) d += m;
  return d;
}

long long Graph::volume(const std::vector<Vertex>& s) const {
  long long vol = 0;
  for (Vertex v : s) vol += degree(v);
  return vol;
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> vs;
  vs.reserve(adj_.size());
  for (const auto& [v, _] : adj_) vs.push_back(v);
  return vs;
}

const std::map<Vertex, int>& Graph::neighbors(Vertex v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw DomainError("unknown vertex " + std::to_string(v));
  return it->second;
}

std::vector<std::tuple<Vertex, Vertex, int>> Graph::edge_pairs() const {
  std::vector<std::tuple<Vertex, Vertex, int>> out;
  for (const auto& [u, nb] : adj_)
    for (const auto& [v, m] : nb)
      if (u < v) out.emplace_back(u, v, m);
  return out;
}

bool Graph::connected() const {
  if (adj_.empty()) return true;
  auto dist = bfs_dist(adj_.begin()->first);
  for (const auto& [v, d] : dist)
    if (d < 0) return false;
  return true;
}

std::map<Vertex, int> Graph::bfs_dist(Vertex src) const {
  std::map<Vertex, int> dist;
  for (const auto& [v, _] : adj_) dist[v] = -1;
  if (!has_vertex(src)) throw DomainError("bfs from unknown vertex");
  std::deque<Vertex> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop_front();
    for (const auto& [v, m] : neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<Vertex> Graph::bfs_path(Vertex src, Vertex dst) const {
  if (!has_vertex(src) || !has_vertex(dst)) throw DomainError("bfs_path endpoint unknown");
  std::map<Vertex, Vertex> parent;
  std::deque<Vertex> q{src};
  parent[src] = src;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop_front();
    if (u == dst) break;
    for (const auto& [v, m] : neighbors(u)) {
      if (!parent.count(v)) {
        parent[v] = u;
        q.push_back(v);
      }
    }
  }
  if (!parent.count(dst)) return {};
  std::vector<Vertex> path;
  for (Vertex v = dst; v != src; v = parent[v]) path.push_back(v);
  path.push_back(src);
  std::reverse(path.begin(), path.end());
  return path;
}

int Graph::diameter() const {
  int d = 0;
  for (const auto& [v, _] : adj_) {
    auto dist = bfs_dist(v);
    for (const auto& [u, du] : dist) {
      if (du < 0) throw DomainError("diameter of disconnected graph");
      d = std::max(d, du);
    }
  }
  return d;
}

Graph Graph::induced(const std::vector<Vertex>& s) const {
  Graph g;
  for (Vertex v : s) g.add_vertex(v);
  for (Vertex v : s)
    for (const auto& [u, m] : neighbors(v))
      if (v < u && g.has_vertex(u)) g.add_edge(v, u, m);
  return g;
}

Graph read_graph(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw DomainError("graph header malformed");
  Graph g;
  for (long long i = 0; i < m; ++i) {
    Vertex u, v;
    if (!(in >> u >> v)) throw DomainError("graph edge list truncated");
    g.add_edge(u, v);
  }
  if (g.vertex_count() > n) throw DomainError("graph has more vertices than declared");
  return g;
}

void write_graph(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& [u, v, m] : g.edge_pairs())
    for (int i = 0; i < m; ++i) out << u << " " << v << "\n";
}

std::map<Vertex, Vertex> read_remap(std::istream& in) {
  std::map<Vertex, Vertex> remap;
  Vertex a, b;
  while (in >> a >> b) remap[a] = b;
  return remap;
}

void write_remap(const std::map<Vertex, Vertex>& remap, std::ostream& out) {
  for (const auto& [a, b] : remap) out << a << " " << b << "\n";
}

Graph apply_remap(const Graph& g, const std::map<Vertex, Vertex>& remap) {
  Graph h;
  for (Vertex v : g.vertices()) h.add_vertex(remap.at(v));
  for (const auto& [u, v, m] : g.edge_pairs()) h.add_edge(remap.at(u), remap.at(v), m);
  return h;
}

}  // namespace xr
