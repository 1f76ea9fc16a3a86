#pragma once

#include <vector>

#include "xr/graph.hpp"
#include "xr/rat.hpp"

namespace xr {

struct CutReport {
  std::vector<Vertex> cut_set;
  long long boundary_size = 0;
  Rat conductance;  // |boundary| / min(vol(S), vol(V-S))
  Rat sparsity;     // |boundary| / min(|S|, |V-S|)
};

// Exact cut quality for a proper subset. Throws DomainError on empty/full s.
CutReport measure_cut(const Graph& g, const std::vector<Vertex>& s);

// Exact minimum sparsity over all 2^(n-1)-1 proper cuts. Refuses graphs above
// the cap to avoid accidental exponential blowups. This is the ground-truth
// oracle for every sparsity claim elsewhere.
Rat graph_sparsity_bruteforce(const Graph& g, int cap = 16);
Rat graph_conductance_bruteforce(const Graph& g, int cap = 16);

// Cut achieving the brute-force minimum sparsity (lexicographically smallest).
std::vector<Vertex> sparsest_cut_bruteforce(const Graph& g, int cap = 16);

// Power-iteration estimate of the spectral gap of the lazy random walk on g,
// mapped through Cheeger's bound to a conservative conductance lower-bound
// estimate. Heuristic only; never used as a correctness gate.
double conductance_estimate(const Graph& g, int iters = 200);

}  // namespace xr
