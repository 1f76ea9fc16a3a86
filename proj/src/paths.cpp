#include "xr/paths.hpp"

#include <algorithm>

namespace xr {

void PathSet::validate_in(const Graph& host) const {
  for (const auto& p : paths_) {
    if (p.empty()) throw DomainError("empty path");
    for (Vertex v : p)
      if (!host.has_vertex(v)) throw DomainError("path visits unknown vertex");
    for (size_t i = 0; i + 1 < p.size(); ++i)
      if (!host.has_edge(p[i], p[i + 1]))
        throw DomainError("path step is not a host edge");
  }
}

PathQuality PathSet::quality(const Graph& host) const {
  validate_in(host);
  PathQuality q;
  std::map<std::pair<Vertex, Vertex>, long long> load;
  for (const auto& p : paths_) {
    q.dilation = std::max(q.dilation, static_cast<long long>(p.size()) - 1);
    for (size_t i = 0; i + 1 < p.size(); ++i) {
      Vertex a = std::min(p[i], p[i + 1]), b = std::max(p[i], p[i + 1]);
      ++load[{a, b}];
    }
  }
  for (const auto& [pr, c] : load) {
    int m = host.multiplicity(pr.first, pr.second);
    q.congestion = std::max(q.congestion, (c + m - 1) / m);
  }
  return q;
}

void Embedding::map_edge(VirtualEdge e, Path p) {
  VirtualEdge key = vedge(e.u, e.v, e.copy);
  if (p.empty()) throw DomainError("embedding path empty");
  if (p.front() == key.v && p.back() == key.u) std::reverse(p.begin(), p.end());
  if (p.front() != key.u || p.back() != key.v)
    throw DomainError("embedding path endpoints do not match the virtual edge");
  PathSet single({p});
  single.validate_in(host_);
  if (path_of_.count(key)) throw DomainError("virtual edge already embedded");
  path_of_[key] = std::move(p);
}

const Path& Embedding::path_of(const VirtualEdge& e) const {
  auto it = path_of_.find(vedge(e.u, e.v, e.copy));
  if (it == path_of_.end()) throw DomainError("virtual edge not embedded");
  return it->second;
}

Path Embedding::oriented_path(Vertex a, Vertex b, int copy) const {
  Path p = path_of(vedge(a, b, copy));
  if (!p.empty() && p.front() != a) std::reverse(p.begin(), p.end());
  return p;
}

std::vector<VirtualEdge> Embedding::virtual_edges() const {
  std::vector<VirtualEdge> es;
  es.reserve(path_of_.size());
  for (const auto& [e, _] : path_of_) es.push_back(e);
  return es;
}

Graph Embedding::virtual_graph() const {
  Graph g;
  for (const auto& [e, _] : path_of_) g.add_edge(e.u, e.v);
  return g;
}

PathSet Embedding::image() const {
  PathSet ps;
  for (const auto& [e, p] : path_of_) ps.add(p);
  return ps;
}

void Embedding::validate() const { image().validate_in(host_); }

Embedding identity_embedding(const Graph& host) {
  Embedding f(host);
  for (const auto& [u, v, m] : host.edge_pairs())
    for (int c = 0; c < m; ++c) f.map_edge({u, v, c}, {u, v});
  return f;
}

namespace {

int copy_count(const std::map<VirtualEdge, Path>& edges, Vertex a, Vertex b) {
  int n = 0;
  while (edges.count(vedge(a, b, n))) ++n;
  return n;
}

}  // namespace

Embedding compose_embeddings(const Embedding& outer, const Embedding& inner) {
  if (!(inner.host() == outer.virtual_graph()))
    throw DomainError("compose: inner host is not outer's virtual graph");
  Embedding out(outer.host());
  std::map<std::pair<Vertex, Vertex>, int> rr;  // round-robin over parallel copies
  for (const auto& [e, p] : inner.edges()) {
    Path img{p.front()};
    for (size_t i = 0; i + 1 < p.size(); ++i) {
      Vertex a = p[i], b = p[i + 1];
      int copies = copy_count(outer.edges(), a, b);
      int pick = rr[{std::min(a, b), std::max(a, b)}]++ % copies;
      Path seg = outer.oriented_path(a, b, pick);
      img.insert(img.end(), seg.begin() + 1, seg.end());
    }
    out.map_edge(e, img);
  }
  return out;
}

Embedding union_embeddings(const Embedding& f, const Embedding& g) {
  Graph host = f.host();
  if (!(host == g.host())) {
    for (Vertex v : g.host().vertices()) host.add_vertex(v);
    for (const auto& [u, v, m] : g.host().edge_pairs()) {
      int have = host.multiplicity(u, v);
      if (m > have) host.add_edge(u, v, m - have);
    }
  }
  Embedding out(host);
  for (const auto& [e, p] : f.edges()) out.map_edge(e, p);
  for (const auto& [e, p] : g.edges()) out.map_edge(e, p);
  return out;
}

}  // namespace xr
