#include "xr/cuts.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace xr {

CutReport measure_cut(const Graph& g, const std::vector<Vertex>& s) {
  const long long n = g.vertex_count();
  if (s.empty() || static_cast<long long>(s.size()) >= n)
    throw DomainError("measure_cut needs a proper nonempty subset");
  std::set<Vertex> in(s.begin(), s.end());
  if (static_cast<long long>(in.size()) != static_cast<long long>(s.size()))
    throw DomainError("measure_cut subset has duplicates");
  for (Vertex v : in)
    if (!g.has_vertex(v)) throw DomainError("measure_cut subset has unknown vertex");

  long long boundary = 0;
  for (Vertex v : in)
    for (const auto& [u, m] : g.neighbors(v))
      if (!in.count(u)) boundary += m;

  CutReport r;
  r.cut_set.assign(in.begin(), in.end());
  r.boundary_size = boundary;

  long long vol_s = g.volume(r.cut_set);
  long long vol_rest = 2 * g.edge_count() - vol_s;
  long long size_s = static_cast<long long>(in.size());
  long long size_rest = n - size_s;

  long long vol_min = std::min(vol_s, vol_rest);
  if (vol_min == 0) {
    // isolated side: zero boundary by necessity
    r.conductance = rat(0);
  } else {
    r.conductance = Rat(static_cast<long>(boundary), static_cast<long>(vol_min));
    r.conductance.canonicalize();
  }
  r.sparsity = Rat(static_cast<long>(boundary), static_cast<long>(std::min(size_s, size_rest)));
  r.sparsity.canonicalize();
  return r;
}

namespace {

template <typename F>
void for_each_proper_cut(const Graph& g, int cap, F&& fn) {
  const auto vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  if (n > cap) throw DomainError("brute-force cut enumeration refused: graph above cap");
  if (n < 2) throw DomainError("brute-force cut enumeration needs >= 2 vertices");
  // fix vs[0] outside S to halve the enumeration
  const unsigned long long lim = 1ULL << (n - 1);
  for (unsigned long long mask = 1; mask < lim; ++mask) {
    std::vector<Vertex> s;
    for (int i = 0; i < n - 1; ++i)
      if (mask & (1ULL << i)) s.push_back(vs[i + 1]);
    fn(s);
  }
}

}  // namespace

Rat graph_sparsity_bruteforce(const Graph& g, int cap) {
  bool first = true;
  Rat best;
  for_each_proper_cut(g, cap, [&](const std::vector<Vertex>& s) {
    Rat psi = measure_cut(g, s).sparsity;
    if (first || psi < best) {
      best = psi;
      first = false;
    }
  });
  return best;
}

Rat graph_conductance_bruteforce(const Graph& g, int cap) {
  bool first = true;
  Rat best;
  for_each_proper_cut(g, cap, [&](const std::vector<Vertex>& s) {
    Rat phi = measure_cut(g, s).conductance;
    if (first || phi < best) {
      best = phi;
      first = false;
    }
  });
  return best;
}

std::vector<Vertex> sparsest_cut_bruteforce(const Graph& g, int cap) {
  bool first = true;
  Rat best;
  std::vector<Vertex> arg;
  for_each_proper_cut(g, cap, [&](const std::vector<Vertex>& s) {
    Rat psi = measure_cut(g, s).sparsity;
    if (first || psi < best || (psi == best && s < arg)) {
      best = psi;
      arg = s;
      first = first && false;
      first = false;
    }
  });
  return arg;
}

double conductance_estimate(const Graph& g, int iters) {
  const auto vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  if (n < 2) return 1.0;
  std::map<Vertex, int> idx;
  for (int i = 0; i < n; ++i) idx[vs[i]] = i;

  // power iteration on the lazy walk, deflating the stationary direction
  std::vector<double> deg(n), x(n);
  double vol = 0;
  for (int i = 0; i < n; ++i) {
    deg[i] = g.degree(vs[i]);
    vol += deg[i];
  }
  for (int i = 0; i < n; ++i) x[i] = (i % 2 == 0 ? 1.0 : -1.0) + 1.0 / (i + 1);

  auto deflate = [&](std::vector<double>& v) {
    // remove component along stationary distribution (deg/vol) in the
    // deg-weighted inner product
    double c = 0;
    for (int i = 0; i < n; ++i) c += v[i] * deg[i];
    c /= vol;
    for (int i = 0; i < n; ++i) v[i] -= c;
  };
  deflate(x);

  double lambda = 0;
  for (int it = 0; it < iters; ++it) {
    std::vector<double> y(n, 0.0);
    for (int i = 0; i < n; ++i) {
      double acc = 0.5 * x[i];
      for (const auto& [u, m] : g.neighbors(vs[i])) acc += 0.5 * m * x[idx[u]] / deg[i];
      y[i] = acc;
    }
    deflate(y);
    double norm = 0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    if (norm < 1e-300) return 1.0;  // immediate collapse: walk mixes in one step
    for (int i = 0; i < n; ++i) y[i] /= norm;
    double num = 0, den = 0;
    for (int i = 0; i < n; ++i) {
      num += y[i] * x[i] * norm;
      den += x[i] * x[i];
    }
    lambda = num / den;
    x = y;
  }
  double gap = 1.0 - std::min(1.0, std::abs(lambda));
  // lazy-walk Cheeger lower bound: phi >= gap (lazy gap is half the walk gap,
  // and phi^2/2 >= gap_walk/2; keep the conservative linear form)
  return std::max(0.0, gap);
}

}  // namespace xr
